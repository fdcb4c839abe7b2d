"""Exhaustive oracle for the face-anchored joint planar crossing number.

The oracle answers: over all drawings of g1 and g2 together in the sphere
where each graph by itself is embedded (no self-intersections), every
crossing is a transverse point between a g1 edge and a g2 edge, and each
anchored g2 vertex lies in the g1 face bounded by its anchor cycle, what is
the minimum total weight of crossings, a crossing between e1 and e2 costing
w(e1) * w(e2)?

Search organisation. A drawing is combinatorially a planar rotation system of
the planarization: g1 and g2 with their edges subdivided at crossing points,
each crossing vertex of degree four with the two graphs alternating around
it. Candidate crossing patterns (for each g2 edge, the ordered list of g1
edges it crosses) are enumerated by increasing total cost; the first cost
with a realizable pattern is the answer. Realizability of a pattern is
decided by brute force over the finitely many free choices: the planar
rotation systems of g1 (deduplicated under reflection, since mirroring a
realization mirrors everything), the order of crossings along each g1 edge,
the rotation of each g2 vertex, and the two transverse orders at each
crossing. A candidate passes when every component of the planarization is
planar and every anchored vertex's region, obtained by merging planarization
faces across g2 fragments, is a face whose walk equals the anchor cycle.

Two necessary conditions prune patterns per g1 rotation: consecutive
crossings along a g2 edge must lie on edges sharing a g1 face, and each group
of g2 vertices joined by crossing-free g2 edges must have a common candidate
face (matching every anchor in the group and bounded by the first crossed
edge of every g2 edge leaving the group). The group condition is also the
exact realizability test for floating pieces of g2 that cross nothing, whose
placement the rotation system of the planarization cannot see.

Caps and honesty. The search is exact over drawings in which every edge pair
crosses at most `multiplicity_cap` times and the planarization stays within
`enumeration_vertex_cap` vertices. When positive weights make every excluded
drawing at least as expensive as the value found, that value is the true
minimum; instances that blow past a cap report EXCEEDS instead of a number.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

from .graphs import Edge, WeightedMultigraph
from .instances import FaJointInstance, SurfaceJointInstance
from .rotations import (
    Face,
    RotationSystem,
    _normalize_cyclic,
    all_rotation_systems,
    cyclic_equal,
    euler_genus,
    genus_by_component,
    trace_faces,
)


class OracleInputError(ValueError):
    pass


@dataclass(frozen=True)
class OracleCaps:
    pair_product_cap: int = 24
    enumeration_vertex_cap: int = 14
    multiplicity_cap: int = 2
    config_product_cap: int = 20000


@dataclass
class OracleResult:
    value: int | None
    exceeded: bool
    patterns_examined: int
    elapsed_ms: int
    pattern: dict[str, tuple[str, ...]] | None
    reason: str = ""

    def text(self) -> str:
        return "EXCEEDS" if self.exceeded else str(self.value)


def instance_digest(inst: FaJointInstance) -> str:
    """Short stable digest of an instance's canonical text form."""
    lines = ["fa-joint-instance"]
    for tag, g in (("g1", inst.g1), ("g2", inst.g2)):
        lines.append(f"{tag}-vertices " + " ".join(sorted(g.vertices)))
        for e in sorted(g.edges, key=lambda e: e.id):
            lines.append(f"{tag}-edge {e.id} {e.u} {e.v} {e.weight}")
    for a in sorted(inst.anchors, key=lambda a: a.vertex):
        lines.append("anchor " + " ".join(_normalize_cyclic(tuple(a.cycle))) + " @ " + a.vertex)
    blob = "\n".join(lines).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def oracle_report_line(inst: FaJointInstance, result: OracleResult) -> str:
    return (
        f"oracle {instance_digest(inst)} {result.text()} "
        f"{result.patterns_examined} {result.elapsed_ms}"
    )


# ---------------------------------------------------------------------------
# per-rotation-system precomputation


@dataclass
class _Config:
    rs: RotationSystem
    faces: tuple[Face, ...]
    dart_face: dict[tuple[str, str], int]
    faces_of_edge: dict[str, set[int]]
    co_face: set[frozenset[str]]
    ok_faces: tuple[frozenset[int], ...]


def _planar_configs(inst: FaJointInstance, caps: OracleCaps) -> list[_Config] | None:
    g1 = inst.g1
    combos = 1
    for v in g1.vertices:
        combos *= factorial(max(g1.degree(v) - 1, 1))
        if combos > caps.config_product_cap:
            return None
    configs: list[_Config] = []
    seen: set[tuple] = set()
    for rs in all_rotation_systems(g1):
        if euler_genus(rs) != 0:
            continue
        key = tuple(sorted((v, _normalize_cyclic(rs.rotation(v))) for v in g1.vertices))
        mirror = rs.mirrored()
        mkey = tuple(sorted((v, _normalize_cyclic(mirror.rotation(v))) for v in g1.vertices))
        canon = min(key, mkey)
        if canon in seen:
            continue
        seen.add(canon)
        faces = trace_faces(rs)
        dart_face: dict[tuple[str, str], int] = {}
        faces_of_edge: dict[str, set[int]] = {}
        co_face: set[frozenset[str]] = set()
        for i, f in enumerate(faces):
            for d in f.darts:
                dart_face[d] = i
            ids = set(f.edge_ids())
            for eid in ids:
                faces_of_edge.setdefault(eid, set()).add(i)
            for a in ids:
                for b in ids:
                    if a < b:
                        co_face.add(frozenset((a, b)))
        ok_faces = []
        for anchor in inst.anchors:
            want = tuple(anchor.cycle)
            ok = frozenset(
                i
                for i, f in enumerate(faces)
                if len(f.darts) == len(want) and cyclic_equal(f.vertex_walk(), want)
            )
            ok_faces.append(ok)
        configs.append(
            _Config(rs, faces, dart_face, faces_of_edge, co_face, tuple(ok_faces))
        )
    return configs


# ---------------------------------------------------------------------------
# pattern enumeration by exact total cost


def _sequence_options(
    g1: WeightedMultigraph, w2: int, budget: int, len_cap: int, mult_cap: int
) -> list[tuple[int, tuple[str, ...]]]:
    """All ordered crossing sequences for one g2 edge within the caps."""
    e1s = sorted(g1.edges, key=lambda e: e.id)
    out: list[tuple[int, tuple[str, ...]]] = []

    def extend(seq: list[str], cost: int, counts: dict[str, int]) -> None:
        out.append((cost, tuple(seq)))
        if len(seq) == len_cap:
            return
        for e in e1s:
            step = e.weight * w2
            if cost + step > budget or counts.get(e.id, 0) >= mult_cap:
                continue
            counts[e.id] = counts.get(e.id, 0) + 1
            seq.append(e.id)
            extend(seq, cost + step, counts)
            seq.pop()
            counts[e.id] -= 1

    extend([], 0, {})
    return out


def _patterns_of_cost(
    inst: FaJointInstance, cost: int, n_max: int, mult_cap: int
) -> list[dict[str, tuple[str, ...]]]:
    e2s = sorted(inst.g2.edges, key=lambda e: e.id)
    options = [
        _sequence_options(inst.g1, e.weight, cost, n_max, mult_cap) for e in e2s
    ]
    results: list[dict[str, tuple[str, ...]]] = []

    def assign(i: int, used_cost: int, used_len: int, acc: dict[str, tuple[str, ...]]) -> None:
        if i == len(e2s):
            if used_cost == cost:
                results.append(dict(acc))
            return
        for c, seq in options[i]:
            if used_cost + c > cost or used_len + len(seq) > n_max:
                continue
            if seq:
                acc[e2s[i].id] = seq
            assign(i + 1, used_cost + c, used_len + len(seq), acc)
            acc.pop(e2s[i].id, None)

    assign(0, 0, 0, {})
    return results


# ---------------------------------------------------------------------------
# necessary conditions per (pattern, config)


def _groups_feasible(
    inst: FaJointInstance, cfg: _Config, pattern: dict[str, tuple[str, ...]]
) -> bool:
    g2 = inst.g2
    parent = {v: v for v in g2.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g2.edges:
        if not pattern.get(e.id):
            ra, rb = find(e.u), find(e.v)
            if ra != rb:
                parent[ra] = rb

    all_faces = frozenset(range(len(cfg.faces)))
    candidates: dict[str, frozenset[int]] = {}

    def narrow(group: str, allowed: frozenset[int]) -> None:
        candidates[group] = candidates.get(group, all_faces) & allowed

    for i, anchor in enumerate(inst.anchors):
        narrow(find(anchor.vertex), cfg.ok_faces[i])
    for e in g2.edges:
        seq = pattern.get(e.id)
        if seq:
            narrow(find(e.u), frozenset(cfg.faces_of_edge.get(seq[0], ())))
            narrow(find(e.v), frozenset(cfg.faces_of_edge.get(seq[-1], ())))
    return all(c for c in candidates.values())


def _pattern_feasible(
    inst: FaJointInstance, cfg: _Config, pattern: dict[str, tuple[str, ...]]
) -> bool:
    for seq in pattern.values():
        for a, b in zip(seq, seq[1:]):
            if a != b and frozenset((a, b)) not in cfg.co_face:
                return False
    return _groups_feasible(inst, cfg, pattern)


# ---------------------------------------------------------------------------
# exact realizability of a pattern under one g1 rotation


def _pattern_realizable(
    inst: FaJointInstance, cfg: _Config, pattern: dict[str, tuple[str, ...]]
) -> bool:
    g1, g2 = inst.g1, inst.g2
    crossings_on_e1: dict[str, list[str]] = {}
    for e2_id in sorted(pattern):
        for j, e1_id in enumerate(pattern[e2_id]):
            crossings_on_e1.setdefault(e1_id, []).append(f"x:{e2_id}:{j}")

    # g2 chains are fixed by the pattern
    base_vertices = ["1:" + v for v in g1.vertices] + ["2:" + v for v in g2.vertices]
    cross_names = [x for xs in crossings_on_e1.values() for x in xs]
    g2_chain_edges: list[Edge] = []
    g2_strands_at: dict[str, list[str]] = {v: [] for v in g2.vertices}
    cross_e2_strands: dict[str, tuple[str, str]] = {}
    for e in sorted(g2.edges, key=lambda e: e.id):
        seq = pattern.get(e.id, ())
        nodes = ["2:" + e.u] + [f"x:{e.id}:{j}" for j in range(len(seq))] + ["2:" + e.v]
        for t in range(len(nodes) - 1):
            g2_chain_edges.append(Edge(f"s2:{e.id}:{t}", nodes[t], nodes[t + 1]))
        g2_strands_at[e.u].append(f"s2:{e.id}:0")
        g2_strands_at[e.v].append(f"s2:{e.id}:{len(seq)}")
        for j in range(len(seq)):
            cross_e2_strands[f"x:{e.id}:{j}"] = (f"s2:{e.id}:{j}", f"s2:{e.id}:{j + 1}")

    ordered_e1 = sorted(crossings_on_e1)
    order_choices = [permutations(crossings_on_e1[e1]) for e1 in ordered_e1]
    anchored_main = list(enumerate(inst.anchors))

    for orders in product(*order_choices):
        chain_of_e1 = dict(zip(ordered_e1, orders))
        edges = list(g2_chain_edges)
        r1dart_of: dict[tuple[str, str], tuple[str, str]] = {}
        strand_at_1: dict[tuple[str, str], str] = {}
        cross_e1_strands: dict[str, tuple[str, str]] = {}
        for e in g1.edges:
            middle = list(chain_of_e1.get(e.id, ()))
            nodes = ["1:" + e.u] + middle + ["1:" + e.v]
            for t in range(len(nodes) - 1):
                sid = f"s1:{e.id}:{t}"
                edges.append(Edge(sid, nodes[t], nodes[t + 1]))
                r1dart_of[(sid, nodes[t])] = (e.id, e.u)
                r1dart_of[(sid, nodes[t + 1])] = (e.id, e.v)
            strand_at_1[(e.id, e.u)] = f"s1:{e.id}:0"
            strand_at_1[(e.id, e.v)] = f"s1:{e.id}:{len(nodes) - 2}"
            for t, x in enumerate(middle):
                cross_e1_strands[x] = (f"s1:{e.id}:{t}", f"s1:{e.id}:{t + 1}")

        gp = WeightedMultigraph(base_vertices + cross_names, edges)
        comp_of: dict[str, int] = {}
        for ci, comp in enumerate(gp.components()):
            for v in comp:
                comp_of[v] = ci
        main_comp = comp_of["1:" + g1.vertices[0]]

        rot_fixed: dict[str, tuple[str, ...]] = {}
        for v in g1.vertices:
            rot_fixed["1:" + v] = tuple(
                strand_at_1[(eid, v)] for eid in cfg.rs.rotation(v)
            )

        g2_verts = [v for v in g2.vertices if g2_strands_at[v]]
        g2_rot_choices = []
        for v in g2_verts:
            inc = sorted(g2_strands_at[v])
            if len(inc) <= 2:
                g2_rot_choices.append([tuple(inc)])
            else:
                head, rest = inc[0], inc[1:]
                g2_rot_choices.append([(head,) + p for p in permutations(rest)])
        for v in g2.vertices:
            if not g2_strands_at[v]:
                rot_fixed["2:" + v] = ()

        for g2_rots in product(*g2_rot_choices):
            rot = dict(rot_fixed)
            for v, order in zip(g2_verts, g2_rots):
                rot["2:" + v] = order
            for alts in product(range(2), repeat=len(cross_names)):
                for x, alt in zip(cross_names, alts):
                    s1a, s1b = cross_e1_strands[x]
                    s2a, s2b = cross_e2_strands[x]
                    rot[x] = (s1a, s2a, s1b, s2b) if alt == 0 else (s1a, s2b, s1b, s2a)
                rs = RotationSystem(gp, rot)
                if any(genus_by_component(rs).values()):
                    continue
                if _regions_ok(inst, cfg, rs, comp_of, main_comp, r1dart_of, anchored_main):
                    return True
    return False


def _regions_ok(
    inst: FaJointInstance,
    cfg: _Config,
    rs: RotationSystem,
    comp_of: dict[str, int],
    main_comp: int,
    r1dart_of: dict[tuple[str, str], tuple[str, str]],
    anchored: list,
) -> bool:
    faces = trace_faces(rs)
    comp = list(range(len(faces)))

    def find(x: int) -> int:
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    dart_face: dict[tuple[str, str], int] = {}
    for i, f in enumerate(faces):
        for d in f.darts:
            dart_face[d] = i
    for e in rs.graph.edges:
        if e.id.startswith("s2:"):
            ra, rb = find(dart_face[(e.id, e.u)]), find(dart_face[(e.id, e.v)])
            if ra != rb:
                comp[ra] = rb

    region_r1_face: dict[int, int] = {}
    for i, f in enumerate(faces):
        r = find(i)
        if r in region_r1_face:
            continue
        for d in f.darts:
            if d[0].startswith("s1:"):
                region_r1_face[r] = cfg.dart_face[r1dart_of[d]]
                break

    vertex_face: dict[str, int] = {}
    for i, f in enumerate(faces):
        for v in f.vertex_set():
            vertex_face.setdefault(v, i)

    for i, anchor in anchored:
        name = "2:" + anchor.vertex
        if comp_of.get(name) != main_comp:
            continue  # floating: settled by the group filter
        region = find(vertex_face[name])
        if region_r1_face.get(region) not in cfg.ok_faces[i]:
            return False
    return True


# ---------------------------------------------------------------------------
# driver


def fa_joint_planar_oracle(
    inst: FaJointInstance,
    max_crossings: int | None = None,
    caps: OracleCaps | None = None,
) -> OracleResult:
    caps = caps or OracleCaps()
    t0 = time.monotonic()

    def done(value, exceeded, examined, pattern=None, reason=""):
        ms = int((time.monotonic() - t0) * 1000)
        return OracleResult(value, exceeded, examined, ms, pattern, reason)

    for g in (inst.g1, inst.g2):
        for e in g.edges:
            if e.weight <= 0:
                raise OracleInputError(
                    "the oracle requires positive edge weights; zero-weight "
                    "edges would allow unbounded free crossing sequences"
                )
    if inst.g1.n_edges * max(inst.g2.n_edges, 1) > caps.pair_product_cap:
        return done(None, True, 0, reason="edge pair product over cap")
    n_max = caps.enumeration_vertex_cap - inst.g1.n_vertices - inst.g2.n_vertices
    if n_max < 0:
        return done(None, True, 0, reason="vertex count over cap")
    configs = _planar_configs(inst, caps)
    if configs is None:
        return done(None, True, 0, reason="g1 rotation count over cap")

    budget = caps.multiplicity_cap * sum(
        e1.weight * e2.weight for e1 in inst.g1.edges for e2 in inst.g2.edges
    )
    if max_crossings is not None:
        if max_crossings < 0:
            raise OracleInputError("max_crossings must be nonnegative")
        # the sentinel then reads "minimum exceeds max_crossings"
        budget = min(budget, max_crossings)
    examined = 0
    for cost in range(budget + 1):
        for pattern in _patterns_of_cost(inst, cost, n_max, caps.multiplicity_cap):
            examined += 1
            for cfg in configs:
                if not _pattern_feasible(inst, cfg, pattern):
                    continue
                if _pattern_realizable(inst, cfg, pattern):
                    # with positive weights, a pattern needing more than n_max
                    # crossings costs more than n_max, so the vertex cap can
                    # only have hidden cheaper patterns when cost > n_max + 1
                    if cost > n_max + 1:
                        return done(
                            None, True, examined,
                            reason="value too large to certify under vertex cap",
                        )
                    return done(cost, False, examined, pattern=pattern)
    return done(None, True, examined, reason="cost budget exhausted")


# ---------------------------------------------------------------------------
# pattern costing


def witness_count(
    inst: FaJointInstance | SurfaceJointInstance,
    pattern: dict[str, tuple[str, ...]],
    caps: OracleCaps | None = None,
) -> int:
    """Weighted cost of a crossing pattern, sum of w(e1)*w(e2) per crossing.

    The caller asserts the pattern is drawable: its planarization embeds in
    the instance's surface and honors the anchors. For face-anchored
    instances small enough for the oracle's enumeration the assertion is
    checked here (raising OracleInputError on an undrawable pattern); for
    surface instances and for face-anchored instances past the enumeration
    caps the precondition is trusted and only referential sanity is checked.
    Canonical gadget patterns get their geometric certification from the
    drawn-witness validator, which is the independent route.
    """
    caps = caps or OracleCaps()
    g1 = inst.g1
    g2 = inst.g2
    for e2_id, seq in pattern.items():
        if not g2.has_edge_id(e2_id):
            raise OracleInputError(f"pattern names unknown g2 edge {e2_id!r}")
        for e1_id in seq:
            if not g1.has_edge_id(e1_id):
                raise OracleInputError(f"pattern names unknown g1 edge {e1_id!r}")

    if isinstance(inst, FaJointInstance):
        crossings = sum(len(seq) for seq in pattern.values())
        within = (
            g1.n_edges * max(g2.n_edges, 1) <= caps.pair_product_cap
            and g1.n_vertices + g2.n_vertices + crossings
            <= caps.enumeration_vertex_cap
        )
        if within:
            configs = _planar_configs(inst, caps)
            if configs is not None:
                drawable = any(
                    _pattern_feasible(inst, cfg, pattern)
                    and _pattern_realizable(inst, cfg, pattern)
                    for cfg in configs
                )
                if not drawable:
                    raise OracleInputError(
                        "pattern is not drawable on this instance: no planar "
                        "realization honors the anchors"
                    )

    return sum(
        g2.edge(e2_id).weight * sum(g1.edge(e1_id).weight for e1_id in seq)
        for e2_id, seq in pattern.items()
    )
