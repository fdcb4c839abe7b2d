"""The reduction chain between the three instance kinds.

Stages, each returning the transformed instance together with a receipt:

validate_a2        certify that each anchored group of the second graph can
                   be separated from the remaining anchors exactly at the
                   weight of its incident edges (max-flow check).
anchored_to_fa6    glue an anchored two-graph instance onto the mirrored
                   grid/ladder pair: the first graph attaches to the grid
                   boundary row paths, the second to the ladder interior
                   vertices, yielding a six-anchor face-anchored instance
                   whose optimum is (joined-pair count) + (w1+..+w4)*T^2 + s.
fa_to_surface      trade h face anchors for h handles: every anchor cycle is
                   framed by a weight-1 copy that carries a capped toroidal
                   grid, the anchored vertex receives a heavy K33 wedge, and
                   all original edge weights scale by p = 8m.
three_connectify   blow every vertex up into a wheel and every edge into
                   three parallel tracks; optimum values scale by exactly 9.
expand_weights     replace each weight-w edge by a bunch of w unit edges,
                   optionally with the subdivide-and-join tail that keeps
                   the result simple and 3-connected.
full_pipeline      the composition, receipts chained in order.

The geometry conventions (clockwise rotations, disk-face direction of
attachment rings) are the ones fixed in the rotations and torus modules; the
constructions here are pure rotation surgery and every stage ends with an
Euler-genus assertion on its output, so a convention slip fails loudly
instead of producing a wrong surface.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .formulas import canonical_fplus_count
from .gadgets import build_fa_instance, mirror_join, ring_slots
from .graphs import Edge, WeightedMultigraph, identify_vertices
from .instances import (
    AnchoredInstance,
    FaceAnchor,
    FaJointInstance,
    GraphBundle,
    SurfaceJointInstance,
    ValidationError,
)
from .planarity import (
    boundary_face_with_order,
    disk_embedding,
    is_planar,
    min_cut_weight,
    rotation_with_facial_cycles,
)
from .receipts import CompositeReceipt, ReductionReceipt
from .rotations import (
    Face,
    RotationSystem,
    _normalize_cyclic,
    euler_genus,
    face_matching_cycle,
    trace_faces,
)
from .torus import insert_after, l_gadget, splice_torus_part

DEFAULT_UNARY_BOUND = 10**7


# ---------------------------------------------------------------------------
# shared helpers


def _require_positive_weights(g: WeightedMultigraph, side: str) -> None:
    for e in g.edges:
        if e.weight < 1:
            raise ValidationError(
                f"{side} edge {e.id!r} has weight {e.weight}; the reductions "
                "need strictly positive weights"
            )


def _check_fresh_names(g: WeightedMultigraph, names: set[str], what: str) -> None:
    taken = (set(g.vertices) | {e.id for e in g.edges}) & names
    if taken:
        raise ValidationError(
            f"cannot add {what}: names already used by the instance: "
            + ", ".join(sorted(taken)[:5])
        )


def _outer_face_with(rs: RotationSystem, required: set[str]) -> Face:
    """The unique face whose boundary contains every vertex in `required`."""
    hits = [f for f in trace_faces(rs) if required <= f.vertex_set()]
    if len(hits) != 1:
        raise ValidationError(
            f"expected exactly one face containing the attachment vertices, found {len(hits)}"
        )
    return hits[0]


def _face_corners(face: Face, needed: set[str]) -> dict[str, tuple[str, str]]:
    """(arriving edge, leaving edge) of the face walk at each needed vertex.

    Repeat visits take the first corner in the stored walk. On the gadget
    boundary a repeat only happens where the walk detours around a pendant
    anchor vertex, and there the two corners are cyclically adjacent (only
    the pendant's own corner separates them), so either choice leaves the
    relative order of all glued fans unchanged; the genus check after the
    splice guards the construction either way.
    """
    walk = face.vertex_walk()
    out: dict[str, tuple[str, str]] = {}
    for j, v in enumerate(walk):
        if v in needed and v not in out:
            out[v] = (face.darts[j - 1][0], face.darts[j][0])
    missing = needed - set(out)
    if missing:
        raise ValidationError(f"vertices not on the boundary face: {sorted(missing)}")
    return out


def _splice_into(
    order: tuple[str, ...], after: str, fan: tuple[str, ...]
) -> tuple[str, ...]:
    i = order.index(after)
    return order[: i + 1] + fan + order[i + 1 :]


def _canonical_cycle(cycle: tuple[str, ...]) -> tuple[str, ...]:
    return min(_normalize_cyclic(cycle), _normalize_cyclic(tuple(reversed(cycle))))


# ---------------------------------------------------------------------------
# A2 validation


@dataclass(frozen=True)
class A2GroupReport:
    index: int  # 1-based group index
    members: tuple[str, ...]
    incident_weight: int
    cut_weight: int
    ok: bool


@dataclass(frozen=True)
class A2Report:
    groups: tuple[A2GroupReport, ...]

    @property
    def ok(self) -> bool:
        return all(g.ok for g in self.groups)

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list[str]:
        out = []
        for g in self.groups:
            verdict = "ok" if g.ok else "FAIL"
            out.append(
                f"group {g.index}: incident weight {g.incident_weight}, "
                f"min cut {g.cut_weight} -> {verdict}"
            )
        return out


def validate_a2(src: AnchoredInstance) -> A2Report:
    """Check the separation condition on the four anchored groups of g2.

    For each group the minimum-weight cut separating it from the other
    anchored vertices must equal the total weight of the edges incident to
    the group: the group's edges are themselves a cheapest cut, so in an
    optimal drawing nothing is saved by routing the group's members away
    from their zone. A group with no other anchors to separate from is
    vacuously fine.
    """
    reports = []
    a2 = src.a2_all()
    for i, grp in enumerate(src.a2_groups, start=1):
        incident = sum(
            e.weight
            for e in src.g2.edges
            if any(e.touches(v) for v in grp)
        )
        rest = tuple(v for v in a2 if v not in grp)
        if not grp or not rest:
            reports.append(A2GroupReport(i, tuple(grp), incident, incident, True))
            continue
        cut = min_cut_weight(src.g2, grp, rest)
        reports.append(A2GroupReport(i, tuple(grp), incident, cut, cut == incident))
    return A2Report(tuple(reports))


# ---------------------------------------------------------------------------
# anchored -> six face anchors

_RING_ZONE_ORDER = (1, 4, 3, 2)


def _group_blocks(seq: tuple[str, ...], group_of: dict[str, int]) -> list[int]:
    ids = [group_of[v] for v in seq if v in group_of]
    out = [g for i, g in enumerate(ids) if i == 0 or ids[i - 1] != g]
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _block_start(seq: tuple[str, ...], group_of: dict[str, int], first: int) -> int:
    """Index where the `first` group's block begins in `seq` (cyclically)."""
    n = len(seq)
    pos = [i for i, v in enumerate(seq) if group_of.get(v) == first]
    for i in pos:
        j = (i - 1) % n
        while seq[j] not in group_of and j != i:
            j = (j - 1) % n
        if j == i or group_of.get(seq[j]) != first:
            return i
    # every anchored g2 vertex lies in this one group; start after the
    # longest stretch of g1 anchors so the block does not wrap
    best, best_gap = pos[0], -1
    for t, i in enumerate(pos):
        gap = (i - pos[t - 1]) % n
        if gap > best_gap:
            best_gap, best = gap, i
    return best


def _normalized_sigma(src: AnchoredInstance) -> tuple[str, ...]:
    """Orient and rotate sigma to match the attachment ring's zone order.

    The ring visits the four ladder zones in the cyclic order 1, 4, 3, 2;
    sigma (or its reversal) must visit its non-empty groups compatibly, and
    is rotated to start where the first present zone's block begins.
    """
    group_of = {v: i + 1 for i, grp in enumerate(src.a2_groups) for v in grp}
    for seq in (src.sigma, tuple(reversed(src.sigma))):
        blocks = _group_blocks(seq, group_of)
        present = [g for g in _RING_ZONE_ORDER if g in set(blocks)]
        if len(blocks) != len(present):
            continue
        n = len(blocks)
        if n > 1 and not any(blocks[s:] + blocks[:s] == present for s in range(n)):
            continue
        start = _block_start(seq, group_of, present[0])
        return seq[start:] + seq[:start]
    raise ValidationError(
        "the anchored groups must wind around the boundary compatibly with "
        "the ring zone order (1, 4, 3, 2 up to rotation and reversal)"
    )


def _place_on_ring(
    src: AnchoredInstance,
    sigma: tuple[str, ...],
    slots: list[tuple[str, str]],
) -> tuple[dict[str, str], dict[str, str]]:
    """One-pass slot assignment of the normalized boundary order.

    Walks the ring once; each g2 anchor takes the next free interior ladder
    vertex of its own zone, each g1 anchor the next free row-path vertex.
    The gadget size k = |a1| + max group + 4 makes capacity a theorem, but
    the exhaustion error stays as a guard.
    """
    group_of = {v: i + 1 for i, grp in enumerate(src.a2_groups) for v in grp}
    alpha: dict[str, str] = {}
    beta: dict[str, str] = {}
    ptr = 0
    for item in sigma:
        want = f"q{group_of[item]}" if item in group_of else "r"
        while ptr < len(slots) and slots[ptr][0] != want:
            ptr += 1
        if ptr == len(slots):
            raise ValidationError(
                f"ring capacity exhausted while placing {item!r} (needs a "
                f"{want!r} slot); this contradicts the gadget sizing"
            )
        target = slots[ptr][1]
        ptr += 1
        if item in group_of:
            beta[item] = target
        else:
            alpha[item] = target
    return alpha, beta


def _fan_from_boundary(rs: RotationSystem, face: Face, vertex: str) -> tuple[str, ...]:
    """The full rotation of `vertex` linearized to open at its boundary gap.

    The boundary face arrives at the vertex along some edge a and leaves
    along its rotation successor b; the returned tuple starts at b and ends
    at a, so splicing it into another boundary corner keeps the plane intact.
    """
    walk = face.vertex_walk()
    j = walk.index(vertex)
    leave = face.darts[j][0]
    order = rs.rotation(vertex)
    i = order.index(leave)
    return order[i:] + order[:i]


def _glue_side(
    base_g: WeightedMultigraph,
    base_rot: RotationSystem,
    slot_vertices: set[str],
    prefix: str,
    side_g: WeightedMultigraph,
    side_promise: RotationSystem | None,
    suborder: tuple[str, ...],
    images: dict[str, str],
) -> tuple[WeightedMultigraph, RotationSystem]:
    """Identify the side graph's anchors with their ring images, planarly.

    The side graph is renamed with `prefix`, its disk embedding is opened at
    each anchor's boundary gap and the resulting edge fan is spliced into
    the outer-face corner of the image vertex. Both reflections of the disk
    are tried; the one that keeps genus 0 wins.
    """
    pv = {v: prefix + v for v in side_g.vertices}
    side_edges = [Edge(prefix + e.id, pv[e.u], pv[e.v], e.weight) for e in side_g.edges]
    combined = WeightedMultigraph(
        list(base_g.vertices) + [pv[v] for v in side_g.vertices],
        list(base_g.edges) + side_edges,
    )
    glued, _ = identify_vertices(combined, [(images[x], pv[x]) for x in images])

    outer = _outer_face_with(base_rot, slot_vertices)
    corners = _face_corners(outer, set(images.values()))

    if side_g.n_edges == 0:
        rot = {v: base_rot.rotation(v) for v in base_g.vertices}
        return glued, RotationSystem(glued, rot)

    disk = disk_embedding(side_g, suborder, side_promise)
    prefixed_graph = WeightedMultigraph([pv[v] for v in side_g.vertices], side_edges)
    prefixed_disk = RotationSystem(
        prefixed_graph,
        {pv[v]: tuple(prefix + eid for eid in disk.rotation(v)) for v in side_g.vertices},
    )
    psuborder = tuple(pv[x] for x in suborder)

    for attempt in (prefixed_disk, prefixed_disk.mirrored()):
        found = boundary_face_with_order(attempt, psuborder)
        if found is None:
            continue
        bface, _ = found
        rot = {v: base_rot.rotation(v) for v in base_g.vertices}
        for x, img in images.items():
            fan = _fan_from_boundary(attempt, bface, pv[x])
            arrive, _ = corners[img]
            rot[img] = _splice_into(rot[img], arrive, fan)
        for v in side_g.vertices:
            if v not in images:
                rot[pv[v]] = attempt.rotation(pv[v])
        rs = RotationSystem(glued, rot)
        if euler_genus(rs) == 0:
            return glued, rs
    raise ValidationError(
        "no reflection of the side graph's disk embedding merges planarly "
        "into the boundary ring"
    )


def anchored_to_fa6(
    src: AnchoredInstance,
) -> tuple[FaJointInstance, ReductionReceipt]:
    """Reduce an anchored instance to a six-anchor face-anchored instance.

    The mirrored grid/ladder pair is built at k = |a1| + max group size + 4
    and T = k^6 + W1*W2 + 1; the first graph is glued onto the grid row
    paths, the second onto the ladder interiors, with the boundary order
    realized along the attachment ring. The receipt carries the fixed part
    of the value map: target = (joined-pair count) + (w1+w2+w3+w4)*T^2 + s.
    """
    report = validate_a2(src)
    if not report.ok:
        raise ValidationError(
            "the anchored groups fail the separation condition:\n"
            + "\n".join(report.lines())
        )
    _require_positive_weights(src.g1, "g1")
    _require_positive_weights(src.g2, "g2")

    k = len(src.a1) + max(len(grp) for grp in src.a2_groups) + 4
    big_t = k**6 + src.g1.total_weight() * src.g2.total_weight() + 1
    gadget = mirror_join(build_fa_instance(k, big_t))
    slots = ring_slots(gadget)

    sigma = _normalized_sigma(src)
    alpha, beta = _place_on_ring(src, sigma, slots)

    base = gadget.instance
    assert base.promise1 is not None and base.promise2 is not None
    r_slot_vertices = {v for kind, v in slots if kind == "r"}
    q_slot_vertices = {v for kind, v in slots if kind != "r"}

    h1_graph, h1_rot = _glue_side(
        base.g1,
        base.promise1,
        r_slot_vertices,
        "s1:",
        src.g1,
        src.promise1,
        src.sigma_restricted(src.a1),
        alpha,
    )
    h2_graph, h2_rot = _glue_side(
        base.g2,
        base.promise2,
        q_slot_vertices,
        "s2:",
        src.g2,
        src.promise2,
        src.sigma_restricted(src.a2_all()),
        beta,
    )

    w_list = tuple(
        sum(e.weight for e in src.g2.edges if any(e.touches(v) for v in grp))
        for grp in src.a2_groups
    )
    receipt = ReductionReceipt(
        kind="anchored_to_fa6",
        params={
            "k": k,
            "big_t": big_t,
            "crgj_fplus": canonical_fplus_count(k, big_t),
            "w_list": w_list,
        },
        maps={"alpha": dict(alpha), "beta": dict(beta)},
    )
    receipt.validate()

    inst = FaJointInstance(
        h1_graph,
        h2_graph,
        base.anchors,
        promise1=h1_rot,
        promise2=h2_rot,
        name1="h1",
        name2="h2",
    )
    return inst, receipt


# ---------------------------------------------------------------------------
# face anchors -> handles


def fa_to_surface(
    fa: FaJointInstance,
) -> tuple[SurfaceJointInstance, ReductionReceipt]:
    """Trade the h face anchors for h handles on genus h.

    Per anchor i (1-based): the anchor cycle's face gets an inscribed
    weight-1 frame copy joined by a perfect matching, the frame carries the
    capped toroidal grid of dimensions (5+i) x (h+6) through four connector
    edges, and the anchored g2 vertex receives a K33 wedge whose seven heavy
    edges weigh t_i = (h+1-i)*t. All original edge weights are scaled by
    p = 8m with m the product of the two total weights, so an original
    optimum s becomes s*p^2 + sum(g_i t_i) plus a sub-p^2 rounding term.
    """
    if not fa.g2.is_connected():
        raise ValidationError("g2 must be connected to live on one surface")
    if fa.g2.n_edges == 0:
        raise ValidationError(
            "g2 has no edges, so the weight product m would vanish and the "
            "scaling p = 8m degenerates; give g2 at least one edge"
        )
    _require_positive_weights(fa.g1, "g1")
    _require_positive_weights(fa.g2, "g2")
    h = len(fa.anchors)
    if h < 1:
        raise ValidationError("need at least one anchor to trade for a handle")
    cycles = [a.cycle for a in fa.anchors]
    seen_cycles = set()
    for c in cycles:
        canon = _canonical_cycle(c)
        if canon in seen_cycles:
            raise ValidationError(f"duplicate anchor cycle {c}; frames would collide")
        seen_cycles.add(canon)
        if len(c) < 4:
            raise ValidationError(
                "anchor cycles need at least four vertices so the handle's "
                "four connectors land on distinct frame vertices"
            )

    rot1 = rotation_with_facial_cycles(fa.g1, cycles, fa.promise1)
    if fa.promise2 is not None:
        rot2 = fa.promise2
    else:
        ok, rot2 = is_planar(fa.g2)
        assert ok and rot2 is not None  # validated at instance construction

    m = fa.g1.total_weight() * fa.g2.total_weight()
    p = 8 * m
    t = (m + 1) * p * p
    t_list = tuple((h + 1 - i) * t for i in range(1, h + 1))
    g_list = tuple(5 + i for i in range(1, h + 1))

    new_names: set[str] = set()
    for i in range(1, h + 1):
        L = len(cycles[i - 1])
        new_names |= {f"fr{i}_{j}" for j in range(L)}
        new_names |= {f"fr{i}r{j}" for j in range(L)}
        new_names |= {f"fr{i}m{j}" for j in range(L)}
    _check_fresh_names(fa.g1, new_names, "handle frames")

    # collect every frame's corner data against the untouched rotation first;
    # the insertions below change rotations but not the recorded darts
    frame_faces = []
    for cycle in cycles:
        face = face_matching_cycle(rot1, cycle)
        if face is None:
            raise ValidationError(
                f"anchor cycle {cycle} is not facial in the certified embedding"
            )
        frame_faces.append(face)

    vertices = list(fa.g1.vertices)
    edges = [Edge(e.id, e.u, e.v, e.weight * p) for e in fa.g1.edges]
    rot = {v: rot1.rotation(v) for v in fa.g1.vertices}
    for i, face in enumerate(frame_faces, start=1):
        walk = face.vertex_walk()
        L = len(walk)
        frame = [f"fr{i}_{j}" for j in range(L)]
        ring_edge = [f"fr{i}r{j}" for j in range(L)]
        match_edge = [f"fr{i}m{j}" for j in range(L)]
        vertices.extend(frame)
        for j in range(L):
            edges.append(Edge(ring_edge[j], frame[j], frame[(j + 1) % L], 1))
            edges.append(Edge(match_edge[j], frame[j], walk[j], 1))
            arrive = face.darts[j - 1][0]
            rot[walk[j]] = insert_after(rot[walk[j]], arrive, match_edge[j])
            rot[frame[j]] = (match_edge[j], ring_edge[(j - 1) % L], ring_edge[j])
        ring_prev = {frame[j]: ring_edge[(j - 1) % L] for j in range(L)}
        splice_torus_part(vertices, edges, rot, frame, ring_prev, i, h, f"t{i}:")

    g1p = WeightedMultigraph(vertices, edges)
    rot1p = RotationSystem(g1p, rot)
    got1 = euler_genus(rot1p)
    if got1 != h:
        raise ValidationError(f"handle side came out at genus {got1}, expected {h}")

    vertices2 = list(fa.g2.vertices)
    edges2 = [Edge(e.id, e.u, e.v, e.weight * p) for e in fa.g2.edges]
    rot2d = {v: rot2.rotation(v) for v in fa.g2.vertices}
    for i, anchor in enumerate(fa.anchors, start=1):
        wedge = l_gadget(t_list[i - 1], prefix=f"l{i}:")
        attach = wedge.attach_vertex
        a = anchor.vertex
        for v in wedge.graph.vertices:
            if v != attach:
                vertices2.append(v)
                rot2d[v] = wedge.rotation.rotation(v)
        for e in wedge.graph.edges:
            edges2.append(
                Edge(
                    e.id,
                    a if e.u == attach else e.u,
                    a if e.v == attach else e.v,
                    e.weight,
                )
            )
        rot2d[a] = tuple(rot2d[a]) + wedge.rotation.rotation(attach)

    g2p = WeightedMultigraph(vertices2, edges2)
    rot2p = RotationSystem(g2p, rot2d)
    got2 = euler_genus(rot2p)
    if got2 != h:
        raise ValidationError(f"wedge side came out at genus {got2}, expected {h}")

    receipt = ReductionReceipt(
        kind="fa_to_surface",
        params={"m": m, "p": p, "t": t, "h": h, "t_list": t_list, "g_list": g_list},
    )
    receipt.validate()
    inst = SurfaceJointInstance(
        g1p, g2p, rot1p, rot2p, h, receipt=receipt, name1=fa.name1, name2=fa.name2
    )
    return inst, receipt


def transformed_witness_fa_to_surface(
    pattern: dict[str, tuple[str, ...]], receipt: ReductionReceipt
) -> dict[str, tuple[str, ...]]:
    """Carry a face-anchored crossing pattern through fa_to_surface.

    Original crossings keep their edge ids (both weights scaled by p, so the
    cost scales by p^2); additionally each wedge's far heavy edge crosses one
    noncontractible cycle of its handle grid: g_i unit edges at weight t_i.
    The total is s*p^2 + sum(g_i t_i), strictly below the receipt's target
    for the same s because of the p^2/2 slack term.
    """
    h = receipt.int_param("h")
    g_list = receipt.list_param("g_list")
    out = {e2: tuple(seq) for e2, seq in pattern.items()}
    for i in range(1, h + 1):
        g_dim = g_list[i - 1]
        out[f"l{i}:le22"] = tuple(f"t{i}:ea{a}_2" for a in range(g_dim))
    return out


# ---------------------------------------------------------------------------
# wheels: 3-connectification


def _wheel_blowup(
    g: WeightedMultigraph, rs: RotationSystem, wheel_weight: int
) -> tuple[WeightedMultigraph, RotationSystem]:
    new_names: set[str] = set()
    for v in g.vertices:
        d = g.degree(v)
        new_names.add(f"w:{v}:hub")
        new_names |= {f"w:{v}:r{j}" for j in range(3 * d)}
    _check_fresh_names(g, new_names, "wheel vertices")

    vertices: list[str] = []
    edges: list[Edge] = []
    rot: dict[str, tuple[str, ...]] = {}
    slot_base: dict[tuple[str, str], int] = {}

    for v in g.vertices:
        order = rs.rotation(v)
        d = len(order)
        if d == 0:
            raise ValidationError(
                f"vertex {v!r} is isolated; no wheel can make it 3-connected"
            )
        hub = f"w:{v}:hub"
        rim = [f"w:{v}:r{j}" for j in range(3 * d)]
        vertices.append(hub)
        vertices.extend(rim)
        for j in range(3 * d):
            edges.append(Edge(f"w:{v}:rim{j}", rim[j], rim[(j + 1) % (3 * d)], wheel_weight))
            edges.append(Edge(f"w:{v}:spk{j}", hub, rim[j], wheel_weight))
        rot[hub] = tuple(f"w:{v}:spk{j}" for j in range(3 * d))
        for s, eid in enumerate(order):
            slot_base[(v, eid)] = 3 * s

    def track_name(v: str, eid: str, c: int) -> str:
        e = g.edge(eid)
        return f"{eid}#{c}" if v == e.u else f"{eid}#{2 - c}"

    for e in g.edges:
        bu, bv = slot_base[(e.u, e.id)], slot_base[(e.v, e.id)]
        for c in range(3):
            edges.append(
                Edge(
                    f"{e.id}#{c}",
                    f"w:{e.u}:r{bu + c}",
                    f"w:{e.v}:r{bv + 2 - c}",
                    e.weight,
                )
            )

    for v in g.vertices:
        d = len(rs.rotation(v))
        for s, eid in enumerate(rs.rotation(v)):
            for c in range(3):
                j = 3 * s + c
                rot[f"w:{v}:r{j}"] = (
                    track_name(v, eid, c),
                    f"w:{v}:rim{j}",
                    f"w:{v}:spk{j}",
                    f"w:{v}:rim{(j - 1) % (3 * d)}",
                )

    gp = WeightedMultigraph(vertices, edges)
    return gp, RotationSystem(gp, rot)


def three_connectify(
    inst: SurfaceJointInstance,
) -> tuple[SurfaceJointInstance, ReductionReceipt]:
    """Blow both graphs up into simple 3-connected form on the same surface.

    Every vertex of degree d becomes a wheel: a rim cycle of 3d vertices
    plus a hub, all edges at the heavy wheel weight 10*W1*W2. Every original
    edge becomes three parallel tracks joining a consecutive rim triple at
    one end to the reversed triple at the other, each track keeping the
    original weight. Any original crossing forces the three tracks of one
    edge across the three tracks of the other, so optima scale by exactly 9;
    rim/hub edges are too heavy to cross at all in an optimal drawing.
    """
    _require_positive_weights(inst.g1, "g1")
    _require_positive_weights(inst.g2, "g2")
    ww = 10 * inst.g1.total_weight() * inst.g2.total_weight()
    g1p, rot1p = _wheel_blowup(inst.g1, inst.rot1, ww)
    g2p, rot2p = _wheel_blowup(inst.g2, inst.rot2, ww)
    for side, old, new in (
        ("g1", inst.rot1, rot1p),
        ("g2", inst.rot2, rot2p),
    ):
        before, after = euler_genus(old), euler_genus(new)
        if before != after:
            raise ValidationError(
                f"wheel blow-up changed the genus of {side}: {before} -> {after}"
            )
    for side, gp in (("g1", g1p), ("g2", g2p)):
        if not gp.is_simple():
            raise ValidationError(f"wheel blow-up left parallel edges in {side}")
    receipt = ReductionReceipt(
        kind="three_connectify", params={"scale": 9, "wheel_weight": ww}
    )
    receipt.validate()
    out = SurfaceJointInstance(
        g1p,
        g2p,
        rot1p,
        rot2p,
        inst.h,
        receipt=receipt,
        name1=inst.name1,
        name2=inst.name2,
    )
    return out, receipt


def transformed_witness_three_connectify(
    pattern: dict[str, tuple[str, ...]],
) -> dict[str, tuple[str, ...]]:
    """The canonical 9x witness: each track of a crossed g2 edge crosses all
    three tracks of every g1 edge its original crossed, in order."""
    out: dict[str, tuple[str, ...]] = {}
    for e2, seq in pattern.items():
        tracks: list[str] = []
        for e1 in seq:
            tracks.extend(f"{e1}#{c}" for c in range(3))
        for s in range(3):
            out[f"{e2}#{s}"] = tuple(tracks)
    return out


# ---------------------------------------------------------------------------
# unary weight expansion


def _expand_graph(
    g: WeightedMultigraph,
    rs: RotationSystem | None,
    keep_3conn: bool,
    unary_bound: int,
) -> tuple[WeightedMultigraph, RotationSystem | None]:
    for e in g.edges:
        if e.weight < 1:
            raise ValidationError(
                f"edge {e.id!r} has weight {e.weight}; bunches need positive weight"
            )
        if e.weight > unary_bound:
            raise ValidationError(
                f"edge {e.id!r} has weight {e.weight}, above the unary bound "
                f"{unary_bound}; expansion would not be polynomial"
            )

    vertices = list(g.vertices)
    edges: list[Edge] = []
    u_side: dict[str, tuple[str, ...]] = {}
    v_side: dict[str, tuple[str, ...]] = {}
    mid_rot: dict[str, tuple[str, ...]] = {}

    for e in g.edges:
        w = e.weight
        if w == 1:
            edges.append(Edge(e.id, e.u, e.v, 1))
            u_side[e.id] = (e.id,)
            v_side[e.id] = (e.id,)
            continue
        if not keep_3conn:
            bunch = [f"{e.id}#{r}" for r in range(w)]
            edges.extend(Edge(b, e.u, e.v, 1) for b in bunch)
            u_side[e.id] = tuple(bunch)
            v_side[e.id] = tuple(reversed(bunch))
            continue
        mids = [f"{e.id}~{r}" for r in range(w)]
        vertices.extend(mids)
        for r in range(w):
            edges.append(Edge(f"{e.id}#u{r}", e.u, mids[r], 1))
            edges.append(Edge(f"{e.id}#v{r}", mids[r], e.v, 1))
        for r in range(w - 1):
            edges.append(Edge(f"{e.id}#p{r}", mids[r], mids[r + 1], 1))
        u_side[e.id] = tuple(f"{e.id}#u{r}" for r in range(w))
        v_side[e.id] = tuple(f"{e.id}#v{r}" for r in range(w - 1, -1, -1))
        for r in range(w):
            order = [f"{e.id}#u{r}"]
            if r > 0:
                order.append(f"{e.id}#p{r - 1}")
            order.append(f"{e.id}#v{r}")
            if r < w - 1:
                order.append(f"{e.id}#p{r}")
            mid_rot[mids[r]] = tuple(order)

    gp = WeightedMultigraph(vertices, edges)
    if rs is None:
        return gp, None
    rot: dict[str, tuple[str, ...]] = dict(mid_rot)
    for v in g.vertices:
        parts: list[str] = []
        for eid in rs.rotation(v):
            parts.extend(u_side[eid] if v == g.edge(eid).u else v_side[eid])
        rot[v] = tuple(parts)
    return gp, RotationSystem(gp, rot)


def expand_weights(
    inst: GraphBundle | FaJointInstance | AnchoredInstance | SurfaceJointInstance,
    preserve_simple_3conn: bool = False,
    unary_bound: int = DEFAULT_UNARY_BOUND,
):
    """Replace every weight-w edge by a bunch of w unit edges.

    Crossing the bunch costs exactly w per unit crossed, so optima are
    unchanged. With `preserve_simple_3conn` each bunch edge is subdivided
    and the subdivision vertices joined by a path, which removes the
    parallel edges and keeps every new vertex at degree three or more;
    weight-1 edges stay as they are (subdividing them would create
    degree-2 vertices). Note the flag restores simplicity but not full
    3-connectivity: a bunch's two endpoints still separate its subdivision
    path from the rest of the graph. Face-anchored and anchored instances
    only support the plain parallel mode: the tail inserts vertices into
    anchor faces, which would change the anchor cycles themselves.

    Returns (instance of the same kind, receipt).
    """
    receipt = ReductionReceipt(
        kind="expand_weights",
        params={"preserve_simple_3conn": int(preserve_simple_3conn)},
    )
    receipt.validate()

    if isinstance(inst, GraphBundle):
        gp, rp = _expand_graph(inst.graph, inst.rotation, preserve_simple_3conn, unary_bound)
        return GraphBundle(gp, rp, name=inst.name), receipt

    if isinstance(inst, (FaJointInstance, AnchoredInstance)):
        if preserve_simple_3conn:
            raise ValidationError(
                "the subdivide-and-join expansion is defined on surface "
                "instances; anchored kinds use the parallel mode"
            )
        g1p, p1 = _expand_graph(inst.g1, inst.promise1, False, unary_bound)
        g2p, p2 = _expand_graph(inst.g2, inst.promise2, False, unary_bound)
        out = replace(inst, g1=g1p, g2=g2p, promise1=p1, promise2=p2)
        return out, receipt

    if isinstance(inst, SurfaceJointInstance):
        g1p, r1 = _expand_graph(inst.g1, inst.rot1, preserve_simple_3conn, unary_bound)
        g2p, r2 = _expand_graph(inst.g2, inst.rot2, preserve_simple_3conn, unary_bound)
        assert r1 is not None and r2 is not None
        for side, old, new in (("g1", inst.rot1, r1), ("g2", inst.rot2, r2)):
            before, after = euler_genus(old), euler_genus(new)
            if before != after:
                raise ValidationError(
                    f"weight expansion changed the genus of {side}: {before} -> {after}"
                )
        out = SurfaceJointInstance(
            g1p,
            g2p,
            r1,
            r2,
            inst.h,
            receipt=receipt,
            name1=inst.name1,
            name2=inst.name2,
        )
        return out, receipt

    raise ValidationError(f"cannot expand weights of {type(inst).__name__}")


# ---------------------------------------------------------------------------
# dummy anchors and the full pipeline


def _free_corner(
    rot: dict[str, tuple[str, ...]],
    rs: RotationSystem,
    anchor_cycles: list[tuple[str, ...]],
) -> tuple[str, str]:
    """A (vertex, arriving edge) corner on a face that no anchor cycle bounds."""
    anchor_faces = set()
    for c in anchor_cycles:
        f = face_matching_cycle(rs, c)
        if f is not None:
            anchor_faces.add(f)
    for f in trace_faces(rs):
        if f in anchor_faces:
            continue
        walk = f.vertex_walk()
        return walk[1 % len(walk)], f.darts[0][0]
    raise ValidationError("every face is an anchor face; nowhere to hang a dummy")


def pad_dummy_anchors(fa: FaJointInstance, extra: int) -> FaJointInstance:
    """Append `extra` dummy anchors: a pendant 4-cycle on g1 anchoring a
    pendant leaf of g2. Padding raises the handle count without giving the
    original instance new drawing freedom that the receipt algebra relies
    on removing."""
    if extra < 0:
        raise ValidationError("cannot remove anchors")
    out = fa
    for _ in range(extra):
        out = _pad_one_dummy(out)
    return out


def _pad_one_dummy(fa: FaJointInstance) -> FaJointInstance:
    i = len(fa.anchors) + 1
    cyc = [f"dm{i}_{j}" for j in range(4)]
    cyc_edges = [f"dm{i}e{j}" for j in range(4)]
    stem = f"dm{i}s"
    leaf, leaf_edge = f"dm{i}a", f"dm{i}leaf"
    _check_fresh_names(fa.g1, set(cyc) | set(cyc_edges) | {stem}, "a dummy anchor")
    _check_fresh_names(fa.g2, {leaf, leaf_edge}, "a dummy anchor")

    cycles = [a.cycle for a in fa.anchors]
    rot1 = rotation_with_facial_cycles(fa.g1, cycles, fa.promise1)
    host, arrive = _free_corner(rot1.as_dict(), rot1, cycles)

    vertices = list(fa.g1.vertices) + cyc
    edges = list(fa.g1.edges)
    edges.append(Edge(stem, host, cyc[0], 1))
    for j in range(4):
        edges.append(Edge(cyc_edges[j], cyc[j], cyc[(j + 1) % 4], 1))
    rot = {v: rot1.rotation(v) for v in fa.g1.vertices}
    rot[host] = insert_after(rot[host], arrive, stem)
    rot[cyc[0]] = (stem, cyc_edges[0], cyc_edges[3])
    for j in (1, 2, 3):
        rot[cyc[j]] = (cyc_edges[j - 1], cyc_edges[j])
    g1p = WeightedMultigraph(vertices, edges)
    p1 = RotationSystem(g1p, rot)

    if fa.promise2 is not None:
        rot2 = fa.promise2
    else:
        ok, rot2 = is_planar(fa.g2)
        assert ok and rot2 is not None
    host2 = min(fa.g2.vertices)
    g2p = WeightedMultigraph(
        list(fa.g2.vertices) + [leaf],
        list(fa.g2.edges) + [Edge(leaf_edge, host2, leaf, 1)],
    )
    rot2d = {v: rot2.rotation(v) for v in fa.g2.vertices}
    rot2d[host2] = tuple(rot2d[host2]) + (leaf_edge,)
    rot2d[leaf] = (leaf_edge,)
    p2 = RotationSystem(g2p, rot2d)

    anchors = fa.anchors + (FaceAnchor(tuple(cyc), leaf),)
    return FaJointInstance(
        g1p, g2p, anchors, promise1=p1, promise2=p2, name1=fa.name1, name2=fa.name2
    )


@dataclass(frozen=True)
class PipelineOptions:
    h: int = 6
    expand_mode: str = "auto"  # "auto" | "force" | "skip"
    unary_bound: int = DEFAULT_UNARY_BOUND


def full_pipeline(
    src: AnchoredInstance, options: PipelineOptions | None = None
) -> tuple[SurfaceJointInstance, CompositeReceipt]:
    """anchored -> six face anchors -> genus h -> 3-connected -> (unweighted).

    The final unary expansion runs per `expand_mode`: "force" always (and
    fails above the unary bound), "skip" never, "auto" only when every edge
    weight fits the bound; a skipped expansion is recorded in the receipt
    chain with skipped = 1 and does not change the value map. Real chain
    outputs carry weights far past any sane unary bound, so "auto" skips
    them; toy chains expand.
    """
    opts = options or PipelineOptions()
    if opts.h < 6:
        raise ValidationError("the pipeline produces at least six anchors; h >= 6")
    if opts.expand_mode not in ("auto", "force", "skip"):
        raise ValidationError(f"unknown expand_mode {opts.expand_mode!r}")

    fa, r1 = anchored_to_fa6(src)
    if opts.h > 6:
        fa = pad_dummy_anchors(fa, opts.h - 6)
    surf, r2 = fa_to_surface(fa)
    surf3, r3 = three_connectify(surf)
    stages = [r1, r2, r3]
    result = surf3

    if opts.expand_mode != "skip":
        heaviest = max(
            max((e.weight for e in surf3.g1.edges), default=1),
            max((e.weight for e in surf3.g2.edges), default=1),
        )
        if heaviest > opts.unary_bound and opts.expand_mode == "auto":
            stages.append(
                ReductionReceipt(
                    kind="expand_weights",
                    params={"preserve_simple_3conn": 1, "skipped": 1},
                )
            )
        else:
            result, r4 = expand_weights(
                surf3, preserve_simple_3conn=True, unary_bound=opts.unary_bound
            )
            r4.params["skipped"] = 0
            stages.append(r4)

    composite = CompositeReceipt(tuple(stages))
    composite.validate()
    final = replace(result, receipt=composite)
    return final, composite
