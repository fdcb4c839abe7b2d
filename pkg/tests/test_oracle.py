from __future__ import annotations

import pytest

from jointcross import (
    Edge,
    FaceAnchor,
    FaJointInstance,
    RotationSystem,
    WeightedMultigraph,
    build_fa_instance,
    expand_weights,
    fa_joint_planar_oracle,
    witness_count,
)
from jointcross.oracle import OracleInputError, instance_digest, oracle_report_line

from .toys import cube_opposite_faces, k4_adjacent_faces, k4_same_face, probe_pair

TRIO = (
    (k4_same_face, 0),
    (k4_adjacent_faces, 1),
    (cube_opposite_faces, 2),
)


@pytest.mark.parametrize("builder,expected", TRIO)
def test_trio_optima(builder, expected: int) -> None:
    result = fa_joint_planar_oracle(builder())
    assert not result.exceeded
    assert result.value == expected


@pytest.mark.parametrize("builder,expected", TRIO)
def test_oracle_pattern_is_payable(builder, expected: int) -> None:
    """The returned crossing pattern must re-cost to the reported optimum
    through the independent witness counter."""
    inst = builder()
    result = fa_joint_planar_oracle(inst)
    assert result.pattern is not None
    assert witness_count(inst, result.pattern) == expected


def test_report_line_shape() -> None:
    inst = k4_same_face()
    result = fa_joint_planar_oracle(inst)
    line = oracle_report_line(inst, result)
    fields = line.split()
    assert fields[0] == "oracle"
    assert fields[1] == instance_digest(inst)
    assert fields[2] == "0"
    assert fields[3] == str(result.patterns_examined)
    assert fields[4] == str(result.elapsed_ms)


def test_digest_ignores_construction_order() -> None:
    inst = k4_same_face()
    flipped = FaJointInstance(
        inst.g1, inst.g2, tuple(reversed(inst.anchors)), promise1=inst.promise1
    )
    assert instance_digest(inst) == instance_digest(flipped)


def test_oversized_instance_exceeds() -> None:
    gadget = build_fa_instance(2, 10)
    result = fa_joint_planar_oracle(gadget.instance)
    assert result.exceeded
    assert result.value is None
    assert result.reason != ""


def test_budget_below_optimum_exceeds() -> None:
    result = fa_joint_planar_oracle(k4_adjacent_faces(), max_crossings=0)
    assert result.exceeded
    result = fa_joint_planar_oracle(k4_adjacent_faces(), max_crossings=1)
    assert result.value == 1


def test_negative_budget_rejected() -> None:
    with pytest.raises(OracleInputError):
        fa_joint_planar_oracle(k4_same_face(), max_crossings=-1)


def test_zero_weight_rejected() -> None:
    g1 = WeightedMultigraph(
        ("a", "b", "c"),
        (Edge("e1", "a", "b", 0), Edge("e2", "b", "c"), Edge("e3", "c", "a")),
    )
    inst = FaJointInstance(
        g1,
        probe_pair(),
        (FaceAnchor(("a", "b", "c"), "y1"), FaceAnchor(("a", "b", "c"), "y2")),
    )
    with pytest.raises(OracleInputError):
        fa_joint_planar_oracle(inst)


@pytest.mark.parametrize("w", [1, 2])
def test_probe_weight_scales_optimum(w: int) -> None:
    """Crossings cost the product of the edge weights, so scaling the probe
    edge scales the optimum linearly."""
    base = cube_opposite_faces()
    inst = FaJointInstance(
        base.g1, probe_pair(weight=w), base.anchors, promise1=base.promise1
    )
    result = fa_joint_planar_oracle(inst)
    assert result.value == 2 * w


def test_uncertifiable_weight_exceeds_instead_of_guessing() -> None:
    """At probe weight 4 the optimum sits past what the vertex cap can
    enumerate; the sound answer is EXCEEDS, never a number."""
    base = cube_opposite_faces()
    inst = FaJointInstance(
        base.g1, probe_pair(weight=4), base.anchors, promise1=base.promise1
    )
    result = fa_joint_planar_oracle(inst)
    assert result.exceeded and result.value is None


@pytest.mark.parametrize("w", [2, 3])
def test_unit_expansion_preserves_optimum(w: int) -> None:
    base = k4_adjacent_faces()
    weighted = FaJointInstance(
        base.g1, probe_pair(weight=w), base.anchors, promise1=base.promise1
    )
    expanded, _ = expand_weights(weighted)
    a = fa_joint_planar_oracle(weighted)
    b = fa_joint_planar_oracle(expanded)
    assert a.value == b.value == w


def test_relabeling_invariance() -> None:
    inst = k4_adjacent_faces()
    mapping = {v: f"z{i}" for i, v in enumerate(sorted(inst.g1.vertices))}
    rg = inst.g1.relabeled(mapping)
    rrot = RotationSystem(
        rg, {mapping[v]: inst.promise1.rotation(v) for v in inst.g1.vertices}
    )
    anchors = tuple(
        FaceAnchor(tuple(mapping[v] for v in a.cycle), a.vertex)
        for a in inst.anchors
    )
    relabeled = FaJointInstance(rg, inst.g2, anchors, promise1=rrot)
    assert (
        fa_joint_planar_oracle(relabeled).value
        == fa_joint_planar_oracle(inst).value
    )


def test_witness_count_rejects_unknown_ids() -> None:
    inst = k4_same_face()
    with pytest.raises(OracleInputError):
        witness_count(inst, {"f0": ("nonsense",)})
    with pytest.raises(OracleInputError):
        witness_count(inst, {"nonsense": ()})


def test_witness_count_rejects_undrawable_pattern() -> None:
    """Crossing the probe through a far edge without crossing out of the
    anchor face first is not drawable and must be refused, not costed."""
    inst = k4_same_face()
    anchor_cycle = set(inst.anchors[0].cycle)
    far = next(
        e.id
        for e in inst.g1.edges
        if not (set(inst.g1.edge(e.id).ends()) <= anchor_cycle)
    )
    with pytest.raises(OracleInputError):
        witness_count(inst, {"f0": (far, far)})


def test_oracle_value_is_deterministic() -> None:
    a = fa_joint_planar_oracle(cube_opposite_faces())
    b = fa_joint_planar_oracle(cube_opposite_faces())
    assert (a.value, a.exceeded, a.patterns_examined) == (
        b.value,
        b.exceeded,
        b.patterns_examined,
    )
