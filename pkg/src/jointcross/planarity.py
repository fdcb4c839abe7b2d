"""Planarity tests with embedding witnesses, and constrained embedding search.

`is_planar` answers with a certificate: a RotationSystem of genus 0 when the
graph is planar (validated by re-tracing faces before it is returned), None
otherwise. The planarity decision itself is delegated to networkx's
implementation of the left-right criterion; parallel edges are handled here by
testing the simplification and nesting each bundle back into the witness.

The exhaustive searches at the bottom exist for two reasons: the test suite
cross-checks `is_planar` against brute force on small graphs, and reductions
occasionally need a planar rotation with prescribed facial cycles when no
promise embedding was supplied and the graph is small enough to enumerate.
"""

from __future__ import annotations

from typing import Sequence

import networkx as nx

from .graphs import GraphError, WeightedMultigraph
from .rotations import (
    EmbeddingError,
    RotationSystem,
    all_rotation_systems,
    cyclic_equal,
    euler_genus,
    face_matching_cycle,
    genus_by_component,
    trace_faces,
)


def _component_planar_rotation(
    g: WeightedMultigraph, comp: tuple[str, ...]
) -> dict[str, tuple[str, ...]] | None:
    """Planar rotation for one connected component, or None."""
    sub = g.induced_subgraph(comp)
    if sub.n_edges == 0:
        return {v: () for v in comp}

    simple = nx.Graph()
    simple.add_nodes_from(sub.vertices)
    for e in sub.edges:
        simple.add_edge(e.u, e.v)
    ok, emb = nx.check_planarity(simple)
    if not ok:
        return None

    # clockwise neighbor order from the embedding, then expand each neighbor
    # slot into its bundle of parallel edges. Nesting the bundle means the
    # copies appear in one order at u and reversed at v; tracing then yields
    # one bigon face per extra copy and genus stays 0.
    data = emb.get_data()
    order_key: dict[tuple[str, str], int] = {}
    for u, nbrs in data.items():
        for i, w in enumerate(nbrs):
            order_key[(u, w)] = i

    rot: dict[str, tuple[str, ...]] = {}
    for v in comp:
        slots: dict[str, list[str]] = {}
        for eid in sub.incident_edges(v):
            w = sub.edge(eid).other(v)
            slots.setdefault(w, []).append(eid)
        ordered_nbrs = sorted(slots.keys(), key=lambda w: order_key[(v, w)])
        out: list[str] = []
        for w in ordered_nbrs:
            bundle = slots[w]
            # orient each bundle consistently from its lexicographically
            # smaller endpoint; the other endpoint sees it reversed.
            if not (v < w):
                bundle = list(reversed(bundle))
            out.extend(bundle)
        rot[v] = tuple(out)
    return rot


def is_planar(g: WeightedMultigraph) -> tuple[bool, RotationSystem | None]:
    """Planarity with witness.

    Returns (True, rotation system of genus 0 on every component) or
    (False, None). The witness is verified by face tracing before return.
    """
    rot: dict[str, tuple[str, ...]] = {}
    for comp in g.components():
        comp_rot = _component_planar_rotation(g, comp)
        if comp_rot is None:
            return False, None
        rot.update(comp_rot)
    rs = RotationSystem(g, rot)
    for comp, h in genus_by_component(rs).items():
        if h != 0:
            raise EmbeddingError(
                "internal error: planarity witness traced to genus "
                f"{h} on component {comp[:4]}..."
            )
    return True, rs


def planar_rotations_exhaustive(
    g: WeightedMultigraph, *, max_edges: int = 8
):
    """Yield every genus-0 rotation system of a small connected graph."""
    if g.n_edges > max_edges:
        raise GraphError(
            f"exhaustive rotation search capped at {max_edges} edges, got {g.n_edges}"
        )
    if not g.is_connected():
        raise GraphError("exhaustive planar search expects a connected graph")
    for rs in all_rotation_systems(g):
        if euler_genus(rs) == 0:
            yield rs


def rotation_with_facial_cycles(
    g: WeightedMultigraph,
    cycles: Sequence[Sequence[str]],
    promise: RotationSystem | None = None,
    *,
    max_edges_for_search: int = 10,
) -> RotationSystem:
    """A planar rotation of connected `g` in which every cycle bounds a face.

    Tries, in order: the caller's promise embedding; the planarity witness
    (sufficient for 3-connected graphs, where the embedding is unique up to
    reflection); exhaustive search when the graph is small. Raises
    EmbeddingError when no certified embedding can be produced.
    """

    def all_facial(rs: RotationSystem) -> bool:
        return all(face_matching_cycle(rs, c) is not None for c in cycles)

    if promise is not None:
        if promise.graph != g:
            raise EmbeddingError("promise embedding belongs to a different graph")
        if euler_genus(promise) != 0:
            raise EmbeddingError("promise embedding is not planar")
        if not all_facial(promise):
            raise EmbeddingError(
                "promise embedding does not make every required cycle facial"
            )
        return promise

    ok, witness = is_planar(g)
    if not ok:
        raise EmbeddingError("graph is not planar")
    assert witness is not None
    if all_facial(witness):
        return witness

    if g.n_edges <= max_edges_for_search:
        for rs in planar_rotations_exhaustive(g, max_edges=max_edges_for_search):
            if all_facial(rs):
                return rs
        raise EmbeddingError("no planar embedding makes every required cycle facial")

    raise EmbeddingError(
        "cannot certify the required facial cycles: no promise embedding was "
        f"given and the graph is too large ({g.n_edges} edges) for exhaustive search"
    )


def boundary_face_with_order(
    rs: RotationSystem, anchors: Sequence[str]
) -> tuple | None:
    """Find a face whose walk visits each anchor exactly once, in a cyclic
    order equal to `anchors` up to rotation and reflection.

    Returns (face, oriented_anchor_walk) or None. Used to validate the
    disk-style promise embeddings of anchored instances.
    """
    want = tuple(anchors)
    for f in trace_faces(rs):
        walk = f.vertex_walk()
        hits = [v for v in walk if v in want]
        if len(hits) != len(want) or set(hits) != set(want):
            continue
        if cyclic_equal(tuple(hits), want):
            return f, tuple(hits)
    return None


def disk_embedding(
    g: WeightedMultigraph,
    anchors: Sequence[str],
    promise: RotationSystem | None = None,
    *,
    max_edges_for_search: int = 10,
) -> RotationSystem:
    """Planar rotation of connected `g` with all `anchors` on one face, each
    exactly once, in the given cyclic order (either direction).

    This is the shape of embedding an anchored instance promises for each of
    its graphs: the graph drawn in a disk with its anchors on the boundary.
    """

    def good(rs: RotationSystem) -> bool:
        return boundary_face_with_order(rs, anchors) is not None

    if promise is not None:
        if promise.graph != g:
            raise EmbeddingError("promise embedding belongs to a different graph")
        if euler_genus(promise) != 0:
            raise EmbeddingError("promise embedding is not planar")
        if not good(promise):
            raise EmbeddingError(
                "promise embedding has no face carrying the anchors in order"
            )
        return promise

    ok, witness = is_planar(g)
    if not ok:
        raise EmbeddingError("graph is not planar")
    assert witness is not None
    if good(witness):
        return witness
    if g.n_edges <= max_edges_for_search:
        for rs in planar_rotations_exhaustive(g, max_edges=max_edges_for_search):
            if good(rs):
                return rs
        raise EmbeddingError("no planar embedding carries the anchors in order on one face")
    raise EmbeddingError(
        "cannot certify a disk embedding: provide a promise embedding "
        f"(graph has {g.n_edges} edges, search cap is {max_edges_for_search})"
    )


def is_three_connected(g: WeightedMultigraph) -> bool:
    """Vertex 3-connectivity of the underlying simple graph (networkx)."""
    if g.n_vertices < 4:
        return False
    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    for e in g.edges:
        simple.add_edge(e.u, e.v)
    return nx.node_connectivity(simple) >= 3


def min_cut_weight(
    g: WeightedMultigraph, sources: Sequence[str], sinks: Sequence[str]
) -> int:
    """Minimum total weight of edges separating `sources` from `sinks`.

    Exact max-flow on Python ints (Edmonds-Karp); parallel edges collapse by
    weight sum, each undirected edge becomes a pair of opposite arcs.
    """
    src, snk = set(sources), set(sinks)
    if not src or not snk:
        raise GraphError("min_cut_weight needs non-empty source and sink sets")
    if src & snk:
        raise GraphError("source and sink sets must be disjoint")
    for v in src | snk:
        if v not in g:
            raise GraphError(f"unknown vertex {v!r} in cut query")

    from networkx.algorithms.flow import edmonds_karp

    d = nx.DiGraph()
    d.add_nodes_from(g.vertices)
    for e in g.edges:
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if d.has_edge(a, b):
                d[a][b]["capacity"] += e.weight
            else:
                d.add_edge(a, b, capacity=e.weight)
    # super-terminals: tuples cannot collide with string vertex ids
    s_star, t_star = ("source",), ("sink",)
    total = g.total_weight() + 1
    for s in src:
        d.add_edge(s_star, s, capacity=total)
    for t in snk:
        d.add_edge(t, t_star, capacity=total)
    value = nx.maximum_flow_value(d, s_star, t_star, flow_func=edmonds_karp)
    assert isinstance(value, int)
    return value
