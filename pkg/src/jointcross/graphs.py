"""Weighted multigraphs with stable string ids.

Everything downstream (gadget builders, reductions, the brute-force oracle)
manipulates graphs through this module. Design constraints that shaped it:

* vertices and edges carry caller-chosen string ids, and insertion order is
  preserved, so serialization round-trips byte-exact and receipts can name
  vertices;
* parallel edges are first class (weight expansion produces them), loops are
  rejected (no construction needs them, and face tracing stays simpler);
* weights are arbitrary-precision non-negative Python ints; the reductions
  produce values far beyond 2**64.

Graphs are immutable after construction. Builders accumulate plain lists and
construct once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


class GraphError(ValueError):
    """A structural rule was violated (duplicate id, loop, unknown vertex...)."""


@dataclass(frozen=True)
class Edge:
    """Undirected weighted edge. `u`/`v` order is only a storage artifact."""

    id: str
    u: str
    v: str
    weight: int = 1

    def ends(self) -> tuple[str, str]:
        return (self.u, self.v)

    def other(self, vertex: str) -> str:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise GraphError(f"vertex {vertex!r} is not an end of edge {self.id!r}")

    def touches(self, vertex: str) -> bool:
        return vertex == self.u or vertex == self.v


class WeightedMultigraph:
    """Immutable undirected multigraph with weighted, id-carrying edges."""

    __slots__ = ("vertices", "edges", "_edge_by_id", "_incident")

    def __init__(
        self,
        vertices: Iterable[str] = (),
        edges: Iterable[Edge | tuple] = (),
    ) -> None:
        verts: list[str] = []
        seen: set[str] = set()
        for v in vertices:
            if not isinstance(v, str) or not v:
                raise GraphError(f"vertex id must be a non-empty string, got {v!r}")
            if v in seen:
                raise GraphError(f"duplicate vertex id {v!r}")
            seen.add(v)
            verts.append(v)

        edge_objs: list[Edge] = []
        by_id: dict[str, Edge] = {}
        incident: dict[str, list[str]] = {v: [] for v in verts}
        for item in edges:
            e = item if isinstance(item, Edge) else Edge(*item)
            if e.id in by_id:
                raise GraphError(f"duplicate edge id {e.id!r}")
            if e.u not in seen or e.v not in seen:
                raise GraphError(f"edge {e.id!r} references unknown vertex")
            if e.u == e.v:
                raise GraphError(f"edge {e.id!r} is a loop at {e.u!r}; loops are not supported")
            if not isinstance(e.weight, int) or e.weight < 0:
                raise GraphError(f"edge {e.id!r} has non-integer or negative weight {e.weight!r}")
            by_id[e.id] = e
            edge_objs.append(e)
            incident[e.u].append(e.id)
            incident[e.v].append(e.id)

        self.vertices: tuple[str, ...] = tuple(verts)
        self.edges: tuple[Edge, ...] = tuple(edge_objs)
        self._edge_by_id: dict[str, Edge] = by_id
        self._incident: dict[str, tuple[str, ...]] = {
            v: tuple(ids) for v, ids in incident.items()
        }

    # -- basic queries ----------------------------------------------------

    def __contains__(self, vertex: str) -> bool:
        return vertex in self._incident

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._edge_by_id[edge_id]
        except KeyError:
            raise GraphError(f"unknown edge id {edge_id!r}") from None

    def has_edge_id(self, edge_id: str) -> bool:
        return edge_id in self._edge_by_id

    def incident_edges(self, vertex: str) -> tuple[str, ...]:
        try:
            return self._incident[vertex]
        except KeyError:
            raise GraphError(f"unknown vertex {vertex!r}") from None

    def degree(self, vertex: str) -> int:
        return len(self.incident_edges(vertex))

    def neighbors(self, vertex: str) -> tuple[str, ...]:
        """Neighbor multiset in incidence order (repeats for parallel edges)."""
        return tuple(self.edge(eid).other(vertex) for eid in self.incident_edges(vertex))

    def edges_between(self, u: str, v: str) -> tuple[str, ...]:
        return tuple(
            eid for eid in self.incident_edges(u) if self.edge(eid).other(u) == v
        )

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def total_weight(self) -> int:
        return sum(e.weight for e in self.edges)

    def weight_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.edges:
            out[e.weight] = out.get(e.weight, 0) + 1
        return out

    # -- connectivity ------------------------------------------------------

    def components(self) -> list[tuple[str, ...]]:
        seen: set[str] = set()
        comps: list[tuple[str, ...]] = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = [root]
            seen.add(root)
            stack = [root]
            while stack:
                v = stack.pop()
                for eid in self._incident[v]:
                    w = self._edge_by_id[eid].other(v)
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            comps.append(tuple(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_simple(self) -> bool:
        seen: set[tuple[str, str]] = set()
        for e in self.edges:
            key = (e.u, e.v) if e.u < e.v else (e.v, e.u)
            if key in seen:
                return False
            seen.add(key)
        return True

    # -- derived graphs ----------------------------------------------------

    def relabeled(self, mapping: Mapping[str, str]) -> "WeightedMultigraph":
        """Rename vertices (edge ids unchanged). `mapping` must be injective
        on the vertex set; missing keys keep their name."""
        new_names = [mapping.get(v, v) for v in self.vertices]
        return WeightedMultigraph(
            new_names,
            [
                Edge(e.id, mapping.get(e.u, e.u), mapping.get(e.v, e.v), e.weight)
                for e in self.edges
            ],
        )

    def induced_subgraph(self, keep: Iterable[str]) -> "WeightedMultigraph":
        keep_set = set(keep)
        unknown = keep_set - set(self.vertices)
        if unknown:
            raise GraphError(f"unknown vertices in induced_subgraph: {sorted(unknown)}")
        return WeightedMultigraph(
            [v for v in self.vertices if v in keep_set],
            [e for e in self.edges if e.u in keep_set and e.v in keep_set],
        )

    def without_edges(self, drop: Iterable[str]) -> "WeightedMultigraph":
        drop_set = set(drop)
        unknown = drop_set - set(self._edge_by_id)
        if unknown:
            raise GraphError(f"unknown edges in without_edges: {sorted(unknown)}")
        return WeightedMultigraph(
            self.vertices, [e for e in self.edges if e.id not in drop_set]
        )

    # -- equality / repr ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedMultigraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"WeightedMultigraph({self.n_vertices} vertices, {self.n_edges} edges)"


def disjoint_union(
    g1: WeightedMultigraph,
    g2: WeightedMultigraph,
    prefix1: str = "",
    prefix2: str = "",
) -> tuple[WeightedMultigraph, dict[str, str], dict[str, str]]:
    """Union of two graphs on disjoint copies of their vertex/edge sets.

    Ids are prefixed per side; the two relabeling maps are returned so callers
    can record them in receipts. Raises if the prefixed namespaces collide.
    """
    vmap1 = {v: prefix1 + v for v in g1.vertices}
    vmap2 = {v: prefix2 + v for v in g2.vertices}
    if set(vmap1.values()) & set(vmap2.values()):
        raise GraphError("disjoint_union: vertex namespaces collide; use distinct prefixes")
    emap1 = {e.id: prefix1 + e.id for e in g1.edges}
    emap2 = {e.id: prefix2 + e.id for e in g2.edges}
    if set(emap1.values()) & set(emap2.values()):
        raise GraphError("disjoint_union: edge namespaces collide; use distinct prefixes")
    vertices = [vmap1[v] for v in g1.vertices] + [vmap2[v] for v in g2.vertices]
    edges = [
        Edge(emap1[e.id], vmap1[e.u], vmap1[e.v], e.weight) for e in g1.edges
    ] + [Edge(emap2[e.id], vmap2[e.u], vmap2[e.v], e.weight) for e in g2.edges]
    return WeightedMultigraph(vertices, edges), vmap1, vmap2


def identify_vertices(
    g: WeightedMultigraph, pairs: Sequence[tuple[str, str]]
) -> tuple[WeightedMultigraph, dict[str, str]]:
    """Merge vertices: each pair (keep, absorb) folds `absorb` into `keep`.

    Chained and shared targets are allowed (union-find underneath). Edges are
    rewritten; an edge whose two ends land in the same class is a loop and is
    rejected. Returns the merged graph and the full old->new vertex map.
    """
    parent: dict[str, str] = {v: v for v in g.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for keep, absorb in pairs:
        if keep not in parent or absorb not in parent:
            raise GraphError(f"identify_vertices: unknown vertex in pair ({keep!r}, {absorb!r})")
        rk, ra = find(keep), find(absorb)
        if rk != ra:
            # orient the union so the `keep` name survives
            parent[ra] = rk

    mapping = {v: find(v) for v in g.vertices}
    kept_order = []
    seen: set[str] = set()
    for v in g.vertices:
        r = mapping[v]
        if r not in seen:
            seen.add(r)
            kept_order.append(r)
    edges = []
    for e in g.edges:
        u, v = mapping[e.u], mapping[e.v]
        if u == v:
            raise GraphError(
                f"identify_vertices: edge {e.id!r} becomes a loop at {u!r}"
            )
        edges.append(Edge(e.id, u, v, e.weight))
    return WeightedMultigraph(kept_order, edges), mapping


def simple_cycle_in_graph(g: WeightedMultigraph, cycle: Sequence[str]) -> bool:
    """True if `cycle` (a vertex sequence, wrap implied) is a simple cycle:
    distinct vertices, consecutive pairs joined by at least one edge."""
    if len(cycle) < 2 or len(set(cycle)) != len(cycle):
        return False
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        if v not in g or w not in g:
            return False
        if not g.edges_between(v, w):
            return False
    return True
