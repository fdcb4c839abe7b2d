"""Canonical drawings of the anchored gadget pair, with exact validation.

A drawn witness records, for each ladder edge, the ordered list of grid edges
it crosses together with integer coordinates for every crossing point. The
drawing of the canonical witness routes the ladder through the strips between
grid rows: each top-path edge crosses exactly the upper-row vertical it spans,
each bottom-path edge the lower-row vertical, and each rung the middle-row
horizontal beneath it. On the doubled instance the mirror copy repeats the
pattern reflected, with the two path edges that straddle the seam crossing
the surviving interface verticals.

Validation is geometric and exact: all segments are straight integer
segments, every pairwise intersection must be a shared endpoint or a declared
crossing point, the rotation system induced by the coordinates must be planar,
and the region reached from each anchored ladder vertex (merging faces of the
planarized drawing across ladder fragments) must be bounded by exactly the
anchor cycle's grid edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import ladder_weight_seq
from .gadgets import GadgetInstance, build_fa_instance, mirror_join
from .graphs import Edge, WeightedMultigraph
from .instances import FaJointInstance, ValidationError
from .rotations import euler_genus, rotations_from_layout, trace_faces

Point = tuple[int, int]


@dataclass
class DrawnJointWitness:
    """A joint drawing given by crossing lists plus coordinates."""

    instance: FaJointInstance
    crossings: dict[str, tuple[str, ...]]
    layout1: dict[str, Point]
    layout2: dict[str, Point]
    points: dict[tuple[str, int], Point]

    def cost(self) -> int:
        return witness_cost(self.instance.g1, self.instance.g2, self.crossings)


def witness_cost(
    g1: WeightedMultigraph, g2: WeightedMultigraph, crossings: dict[str, tuple[str, ...]]
) -> int:
    """Total weighted crossing count of a crossing pattern."""
    total = 0
    for e2_id, crossed in crossings.items():
        w2 = g2.edge(e2_id).weight
        for e1_id in crossed:
            total += g1.edge(e1_id).weight * w2
    return total


def _orient(a: Point, b: Point, c: Point) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies on segment ab (endpoints included)."""
    if _orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _segments_conflict(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True when segments ab and cd share more than a common endpoint."""
    shared = ({a, b} & {c, d})
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4 and o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        return True  # proper crossing
    # touching cases: any endpoint interior to the other segment, or overlap
    for p, (s, t) in ((c, (a, b)), (d, (a, b)), (a, (c, d)), (b, (c, d))):
        if p in shared:
            continue
        if _on_segment(p, s, t):
            return True
    return False


def _sort_key_along(p: Point, origin: Point) -> int:
    return (p[0] - origin[0]) ** 2 + (p[1] - origin[1]) ** 2


def validate_drawn_witness(w: DrawnJointWitness) -> int:
    """Check a drawn witness exactly; return its crossing cost.

    Raises ValidationError when the coordinates do not form a plane joint
    drawing realizing the declared crossings with every anchor respected.
    """
    g1, g2 = w.instance.g1, w.instance.g2
    for e2_id, crossed in w.crossings.items():
        g2.edge(e2_id)
        for i, e1_id in enumerate(crossed):
            g1.edge(e1_id)
            if (e2_id, i) not in w.points:
                raise ValidationError(f"missing coordinates for crossing {e2_id}[{i}]")

    pos: dict[str, Point] = {}
    for v in g1.vertices:
        pos["1:" + v] = w.layout1[v]
    for v in g2.vertices:
        pos["2:" + v] = w.layout2[v]
    for (e2_id, i), p in w.points.items():
        pos[f"x:{e2_id}:{i}"] = p
    if len(set(pos.values())) != len(pos):
        raise ValidationError("coincident points in drawing")

    # crossings per grid edge, each verified to sit inside the segment
    on_e1: dict[str, list[str]] = {}
    for (e2_id, i), p in w.points.items():
        crossed = w.crossings.get(e2_id, ())
        if i >= len(crossed):
            raise ValidationError(
                f"coordinates for {e2_id}[{i}] but only {len(crossed)} declared crossings"
            )
        e1_id = crossed[i]
        a, b = w.layout1[g1.edge(e1_id).u], w.layout1[g1.edge(e1_id).v]
        if not _on_segment(p, a, b) or p == a or p == b:
            raise ValidationError(f"crossing point of {e2_id} not interior to {e1_id}")
        c, d = w.layout2[g2.edge(e2_id).u], w.layout2[g2.edge(e2_id).v]
        if not _on_segment(p, c, d) or p == c or p == d:
            raise ValidationError(f"crossing point {e2_id}[{i}] not interior to {e2_id}")
        on_e1.setdefault(e1_id, []).append(f"x:{e2_id}:{i}")

    vertices = list(pos)
    edges: list[Edge] = []

    def add_chain(kind: str, eid: str, endpoints: tuple[str, str], middle: list[str]) -> None:
        chain = [endpoints[0], *middle, endpoints[1]]
        for t in range(len(chain) - 1):
            edges.append(Edge(f"{kind}:{eid}:{t}", chain[t], chain[t + 1]))

    for e in g1.edges:
        middle = sorted(on_e1.get(e.id, ()), key=lambda n: _sort_key_along(pos[n], w.layout1[e.u]))
        add_chain("1", e.id, ("1:" + e.u, "1:" + e.v), middle)
    for e in g2.edges:
        names = [f"x:{e.id}:{i}" for i in range(len(w.crossings.get(e.id, ())))]
        ordered = sorted(names, key=lambda n: _sort_key_along(pos[n], w.layout2[e.u]))
        if ordered != names:
            raise ValidationError(f"crossing order along {e.id} does not match coordinates")
        add_chain("2", e.id, ("2:" + e.u, "2:" + e.v), names)

    # exact pairwise intersection audit
    segs = [(pos[e.u], pos[e.v], e.id) for e in edges]
    for i in range(len(segs)):
        a, b, na = segs[i]
        for j in range(i + 1, len(segs)):
            c, d, nb = segs[j]
            if _segments_conflict(a, b, c, d):
                raise ValidationError(f"undeclared intersection between {na} and {nb}")

    gp = WeightedMultigraph(vertices, edges)
    rs = rotations_from_layout(gp, pos)
    if not gp.is_connected():
        raise ValidationError("planarized drawing is disconnected")
    if euler_genus(rs) != 0:
        raise ValidationError("drawing coordinates do not induce a planar embedding")

    # merge faces across ladder fragments; anchored vertices must land in
    # regions bounded by exactly their anchor cycle's grid edges
    faces = trace_faces(rs)
    comp = list(range(len(faces)))

    def find(x: int) -> int:
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    face_of_dart = {}
    for idx, f in enumerate(faces):
        for dart in f.darts:
            face_of_dart[dart] = idx
    for e in gp.edges:
        if e.id.startswith("2:"):
            fa, fb = face_of_dart[(e.id, e.u)], face_of_dart[(e.id, e.v)]
            ra, rb = find(fa), find(fb)
            if ra != rb:
                comp[ra] = rb

    region_boundary: dict[int, set[str]] = {}
    for idx, f in enumerate(faces):
        r = find(idx)
        bag = region_boundary.setdefault(r, set())
        for eid in f.edge_ids():
            if eid.startswith("1:"):
                bag.add(eid.split(":")[1])

    for anchor in w.instance.anchors:
        cyc = anchor.cycle
        want = set()
        for t in range(len(cyc)):
            want.add(g1.edges_between(cyc[t], cyc[(t + 1) % len(cyc)])[0])
        av = "2:" + anchor.vertex
        region = None
        for idx, f in enumerate(faces):
            if av in f.vertex_set():
                region = find(idx)
                break
        assert region is not None
        got = region_boundary.get(region, set())
        if got != want:
            raise ValidationError(
                f"anchored vertex {anchor.vertex} sits in a region bounded by "
                f"{sorted(got)} instead of its anchor cycle"
            )
    return w.cost()


def _fa_crossing_plan(k: int) -> tuple[dict[str, tuple[str, ...]], dict[tuple[str, int], Point]]:
    crossings: dict[str, tuple[str, ...]] = {}
    points: dict[tuple[str, int], Point] = {}
    for l in range(k + 1):
        crossings[f"qt{l}"] = (f"v1_{l + 1}",)
        points[(f"qt{l}", 0)] = (4 * (l + 1), 6)
        crossings[f"qb{l}"] = (f"v2_{l + 1}",)
        points[(f"qb{l}", 0)] = (4 * (l + 1), 10)
    for j in range(1, k + 1):
        crossings[f"qv{j}"] = (f"h2_{j}",)
        points[(f"qv{j}", 0)] = (4 * j + 2, 8)
    return crossings, points


def canonical_fa_witness(k: int, big_t: int) -> DrawnJointWitness:
    """The canonical drawing of the four-anchor gadget pair."""
    gadget = build_fa_instance(k, big_t)
    crossings, points = _fa_crossing_plan(k)
    return DrawnJointWitness(
        instance=gadget.instance,
        crossings=crossings,
        layout1=dict(gadget.layout1),
        layout2=dict(gadget.layout2),
        points=points,
    )


def canonical_fplus_witness(k: int, big_t: int) -> DrawnJointWitness:
    """The canonical drawing of the doubled six-anchor gadget pair."""
    doubled = mirror_join(build_fa_instance(k, big_t))
    crossings, points = _fa_crossing_plan(k)
    x_max = 8 * k + 12
    # mirror copies of the interior crossings
    for l in range(k):
        crossings[f"m_qt{l}"] = (f"m_v1_{l + 1}",)
        points[(f"m_qt{l}", 0)] = (x_max - 4 * (l + 1), 6)
        crossings[f"m_qb{l}"] = (f"m_v2_{l + 1}",)
        points[(f"m_qb{l}", 0)] = (x_max - 4 * (l + 1), 10)
    for j in range(1, k + 1):
        crossings[f"m_qv{j}"] = (f"m_h2_{j}",)
        points[(f"m_qv{j}", 0)] = (x_max - (4 * j + 2), 8)
    # the seam: the mirrored end edges cross the surviving interface verticals
    crossings[f"m_qt{k}"] = (f"v1_{k + 2}",)
    points[(f"m_qt{k}", 0)] = (4 * k + 8, 6)
    crossings[f"m_qb{k}"] = (f"v2_{k + 2}",)
    points[(f"m_qb{k}", 0)] = (4 * k + 8, 10)
    return DrawnJointWitness(
        instance=doubled.instance,
        crossings=crossings,
        layout1=dict(doubled.layout1),
        layout2=dict(doubled.layout2),
        points=points,
    )


def expected_ladder_costs(k: int, big_t: int) -> dict[str, int]:
    """Per-edge crossing costs of the canonical single-copy drawing."""
    t = ladder_weight_seq(k)
    out: dict[str, int] = {}
    out["qt0"] = t[k] * big_t**3
    out[f"qt{k}"] = t[0] * big_t**3
    out["qb0"] = t[0] * big_t**3
    out[f"qb{k}"] = t[k] * big_t**3
    for j in range(1, k):
        out[f"qt{j}"] = t[k - j] * j * big_t
        out[f"qb{j}"] = t[j] * (k - j) * big_t
    for j in range(1, k + 1):
        out[f"qv{j}"] = (k + 1) * big_t**2
    return out
