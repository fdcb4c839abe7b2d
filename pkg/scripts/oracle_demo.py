#!/usr/bin/env python3
"""Exercise the brute-force oracle on the toy battery.

Shows the three pinned optima (0, 1, 2), weight scaling, the agreement
between a weighted instance and its unit expansion, and the sound EXCEEDS
answer on an instance past the enumeration caps.
"""

from __future__ import annotations

from jointcross import (
    Edge,
    FaceAnchor,
    FaJointInstance,
    WeightedMultigraph,
    build_fa_instance,
    expand_weights,
    fa_joint_planar_oracle,
    is_planar,
    oracle_report_line,
    trace_faces,
)


def k4_pair(same_face: bool, weight: int = 1) -> FaJointInstance:
    vs = ("p1", "p2", "p3", "p4")
    es = []
    n = 0
    for i in range(4):
        for j in range(i + 1, 4):
            es.append(Edge(f"e{n}", vs[i], vs[j]))
            n += 1
    g1 = WeightedMultigraph(vs, es)
    ok, rot = is_planar(g1)
    assert ok and rot is not None
    faces = trace_faces(rot)
    first = faces[0].vertex_walk()
    second = first if same_face else faces[1].vertex_walk()
    g2 = WeightedMultigraph(("y1", "y2"), (Edge("f0", "y1", "y2", weight),))
    return FaJointInstance(
        g1, g2, (FaceAnchor(first, "y1"), FaceAnchor(second, "y2")), promise1=rot
    )


def main() -> None:
    print("-- pinned optima --")
    for label, inst in (
        ("same face", k4_pair(True)),
        ("adjacent faces", k4_pair(False)),
    ):
        result = fa_joint_planar_oracle(inst)
        print(f"{label:>16}: {oracle_report_line(inst, result)}")

    print("\n-- weight scaling --")
    for w in (1, 2, 3):
        inst = k4_pair(False, weight=w)
        result = fa_joint_planar_oracle(inst)
        print(f"probe weight {w}: optimum {result.text()}")

    print("\n-- weighted vs unit-expanded --")
    weighted = k4_pair(False, weight=3)
    expanded, _ = expand_weights(weighted)
    a = fa_joint_planar_oracle(weighted)
    b = fa_joint_planar_oracle(expanded)
    print(f"weighted: {a.text()}   expanded: {b.text()}   agree: {a.value == b.value}")

    print("\n-- real gadget: honestly over the caps --")
    inst = build_fa_instance(2, 10).instance
    result = fa_joint_planar_oracle(inst)
    print(oracle_report_line(inst, result))
    print(f"reason: {result.reason}")


if __name__ == "__main__":
    main()
