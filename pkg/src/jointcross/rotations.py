"""Rotation systems, face tracing and Euler genus.

A rotation system fixes, for every vertex, the clockwise cyclic order of its
incident edge ends. Since loops are excluded, an edge meets a vertex at most
once and the order can be stored as a cyclic tuple of edge ids.

Faces are traced with the standard next-dart rule: arriving at vertex v along
edge e, the walk leaves along the successor of e in v's rotation. Every
directed edge end (dart) lies on exactly one face, so for a connected graph
V - E + F = 2 - 2h defines the (orientable) genus h of the embedded surface.

The convention throughout the package is "clockwise in screen coordinates,
y growing downward". `rotations_from_layout` derives rotations from integer
straight-line coordinates with that convention, so every canonical embedding
(grids, ladders, witness planarizations) agrees on orientation.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Mapping, Sequence

from .graphs import GraphError, WeightedMultigraph


class EmbeddingError(ValueError):
    """Rotation data inconsistent with the graph, or a genus rule violated."""


# A dart is (edge_id, tail_vertex): the half of the edge leaving tail_vertex.
Dart = tuple[str, str]


class RotationSystem:
    """A graph together with a clockwise cyclic edge order at every vertex."""

    __slots__ = ("graph", "_rot", "_succ")

    def __init__(
        self, graph: WeightedMultigraph, rotation: Mapping[str, Sequence[str]]
    ) -> None:
        rot: dict[str, tuple[str, ...]] = {}
        if set(rotation.keys()) != set(graph.vertices):
            missing = set(graph.vertices) - set(rotation.keys())
            extra = set(rotation.keys()) - set(graph.vertices)
            raise EmbeddingError(
                f"rotation must cover exactly the vertex set "
                f"(missing {sorted(missing)}, extra {sorted(extra)})"
            )
        for v in graph.vertices:
            order = tuple(rotation[v])
            if sorted(order) != sorted(graph.incident_edges(v)):
                raise EmbeddingError(
                    f"rotation at {v!r} is not a permutation of its incident edges"
                )
            rot[v] = order
        self.graph = graph
        self._rot = rot
        # successor lookup: (vertex, edge) -> next edge clockwise
        succ: dict[Dart, str] = {}
        for v, order in rot.items():
            d = len(order)
            for i, eid in enumerate(order):
                succ[(eid, v)] = order[(i + 1) % d]
        self._succ = succ

    def rotation(self, vertex: str) -> tuple[str, ...]:
        try:
            return self._rot[vertex]
        except KeyError:
            raise EmbeddingError(f"unknown vertex {vertex!r}") from None

    def as_dict(self) -> dict[str, tuple[str, ...]]:
        return dict(self._rot)

    def next_edge(self, vertex: str, edge_id: str) -> str:
        try:
            return self._succ[(edge_id, vertex)]
        except KeyError:
            raise EmbeddingError(
                f"edge {edge_id!r} is not incident to {vertex!r}"
            ) from None

    def mirrored(self) -> "RotationSystem":
        """The reflected embedding (every rotation reversed). Same genus."""
        return RotationSystem(
            self.graph, {v: tuple(reversed(r)) for v, r in self._rot.items()}
        )

    def __repr__(self) -> str:
        return f"RotationSystem({self.graph!r})"


def _normalize_cyclic(seq: tuple) -> tuple:
    """Lexicographically minimal rotation, for stable equality/hashing."""
    if not seq:
        return seq
    best = None
    for i in range(len(seq)):
        cand = seq[i:] + seq[:i]
        if best is None or cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class Face:
    """One face orbit: the cyclic sequence of darts along its boundary walk."""

    darts: tuple[Dart, ...]

    def __len__(self) -> int:
        return len(self.darts)

    def vertex_walk(self) -> tuple[str, ...]:
        """Tail vertices in walk order (a vertex may repeat on pinched faces)."""
        return tuple(tail for _, tail in self.darts)

    def edge_ids(self) -> tuple[str, ...]:
        return tuple(eid for eid, _ in self.darts)

    def edge_set(self) -> frozenset[str]:
        return frozenset(eid for eid, _ in self.darts)

    def vertex_set(self) -> frozenset[str]:
        return frozenset(tail for _, tail in self.darts)


def trace_faces(rs: RotationSystem) -> tuple[Face, ...]:
    """All face orbits. Every dart appears on exactly one returned face."""
    g = rs.graph
    remaining: set[Dart] = set()
    for e in g.edges:
        remaining.add((e.id, e.u))
        remaining.add((e.id, e.v))
    faces: list[Face] = []
    # iterate in deterministic order for reproducible face lists
    order: list[Dart] = []
    for e in g.edges:
        order.append((e.id, e.u))
        order.append((e.id, e.v))
    for start in order:
        if start not in remaining:
            continue
        walk: list[Dart] = []
        d = start
        while True:
            walk.append(d)
            remaining.discard(d)
            eid, tail = d
            head = g.edge(eid).other(tail)
            nxt = rs.next_edge(head, eid)
            d = (nxt, head)
            if d == start:
                break
        faces.append(Face(tuple(_normalize_cyclic(tuple(walk)))))
    return tuple(faces)


def euler_genus(rs: RotationSystem) -> int:
    """Orientable genus h of the embedding: V - E + F = 2 - 2h.

    Only defined for connected graphs (Euler's relation needs one shell);
    a single vertex with no edges counts as the sphere.
    """
    g = rs.graph
    if g.n_vertices == 0:
        raise EmbeddingError("euler_genus of the empty graph is undefined")
    if not g.is_connected():
        raise EmbeddingError("euler_genus requires a connected graph")
    if g.n_edges == 0:
        return 0  # one vertex on the sphere
    faces = trace_faces(rs)
    euler = g.n_vertices - g.n_edges + len(faces)
    two_h = 2 - euler
    if two_h < 0 or two_h % 2 != 0:
        raise EmbeddingError(
            f"impossible Euler count V-E+F = {euler} for an orientable rotation system"
        )
    return two_h // 2


def genus_by_component(rs: RotationSystem) -> dict[tuple[str, ...], int]:
    """Genus of each connected component's induced sub-embedding."""
    out: dict[tuple[str, ...], int] = {}
    for comp in rs.graph.components():
        sub = rs.graph.induced_subgraph(comp)
        sub_rot = {v: rs.rotation(v) for v in comp}
        out[comp] = euler_genus(RotationSystem(sub, sub_rot))
    return out


def faces_by_vertex(faces: Sequence[Face]) -> dict[str, list[int]]:
    out: dict[str, list[int]] = {}
    for i, f in enumerate(faces):
        for v in f.vertex_set():
            out.setdefault(v, []).append(i)
    return out


def cyclic_equal(a: Sequence, b: Sequence, *, reflect: bool = True) -> bool:
    """Equality of cyclic sequences, optionally up to reversal."""
    ta, tb = tuple(a), tuple(b)
    if len(ta) != len(tb):
        return False
    if _normalize_cyclic(ta) == _normalize_cyclic(tb):
        return True
    return reflect and _normalize_cyclic(ta) == _normalize_cyclic(tuple(reversed(tb)))


def face_matching_cycle(
    rs: RotationSystem, cycle: Sequence[str]
) -> Face | None:
    """First traced face whose vertex walk equals `cycle` as a cyclic sequence
    (either direction). None if the cycle bounds no face of this embedding."""
    want = tuple(cycle)
    for f in trace_faces(rs):
        if len(f) == len(want) and cyclic_equal(f.vertex_walk(), want):
            return f
    return None


# ---------------------------------------------------------------------------
# rotations from straight-line layouts


def _clockwise_key(dx: int, dy: int) -> tuple[int, ...]:
    """Sort key for direction vectors, clockwise starting at North.

    Screen coordinates, y downward: North = (0,-1), East = (1,0),
    South = (0,1), West = (-1,0). Exact integer arithmetic only.
    """
    if dx == 0 and dy == 0:
        raise EmbeddingError("zero direction vector in layout")
    # quadrant index going clockwise from North
    if dx >= 0 and dy < 0:
        quad = 0  # [N, E)
    elif dx > 0 and dy >= 0:
        quad = 1  # [E, S)
    elif dx <= 0 and dy > 0:
        quad = 2  # [S, W)
    else:
        quad = 3  # [W, N)
    # within a quadrant the clockwise order is by slope; cross products give
    # an exact comparison. We normalize each quadrant to a monotone rational.
    # For ordering purposes (a, b) < (c, d) iff a*d < c*b with positive
    # denominators; encode as a Fraction-free pair.
    if quad == 0:
        num, den = dx, -dy
    elif quad == 1:
        num, den = dy, dx
    elif quad == 2:
        num, den = -dx, dy
    else:
        num, den = -dy, -dx
    return (quad, num, den)


def _angle_sorted(dirs: list[tuple[str, int, int]]) -> list[str]:
    # comparator via cross products inside quadrants: convert key pairs
    # (quad, num, den) to sortable exact values using cross-multiplication.
    def cmp(a: tuple[str, int, int], b: tuple[str, int, int]) -> int:
        qa = _clockwise_key(a[1], a[2])
        qb = _clockwise_key(b[1], b[2])
        if qa[0] != qb[0]:
            return -1 if qa[0] < qb[0] else 1
        # same quadrant: compare num/den fractions exactly
        lhs = qa[1] * qb[2]
        rhs = qb[1] * qa[2]
        if lhs == rhs:
            return 0
        return -1 if lhs < rhs else 1

    return [eid for eid, _, _ in sorted(dirs, key=functools.cmp_to_key(cmp))]


def rotations_from_layout(
    g: WeightedMultigraph, pos: Mapping[str, tuple[int, int]]
) -> RotationSystem:
    """Clockwise rotation system of a straight-line drawing.

    `pos` maps every vertex to integer (x, y), y growing downward. Edges are
    straight segments; two edges incident to the same vertex must not leave it
    in exactly the same direction (parallel edges therefore need bend vertices
    before this helper applies).
    """
    rot: dict[str, tuple[str, ...]] = {}
    for v in g.vertices:
        if v not in pos:
            raise EmbeddingError(f"layout missing vertex {v!r}")
        x0, y0 = pos[v]
        dirs: list[tuple[str, int, int]] = []
        seen_dirs: set[tuple[int, int]] = set()
        for eid in g.incident_edges(v):
            w = g.edge(eid).other(v)
            x1, y1 = pos[w]
            dx, dy = x1 - x0, y1 - y0
            if dx == 0 and dy == 0:
                raise EmbeddingError(f"vertices {v!r} and {w!r} share a position")
            s = gcd(abs(dx), abs(dy))
            key = (dx // s, dy // s)
            if key in seen_dirs:
                raise EmbeddingError(
                    f"two edges leave {v!r} in the same direction; layout is ambiguous"
                )
            seen_dirs.add(key)
            dirs.append((eid, dx, dy))
        rot[v] = tuple(_angle_sorted(dirs))
    return RotationSystem(g, rot)


def all_rotation_systems(g: WeightedMultigraph) -> Iterator[RotationSystem]:
    """Every rotation system of g, one representative per cyclic choice.

    The first incident edge of each vertex is pinned and the rest permuted:
    (d-1)! options per vertex. Exponential; callers guard the size.
    """
    from itertools import permutations, product

    verts = [v for v in g.vertices if g.degree(v) > 0]
    choice_lists: list[list[tuple[str, ...]]] = []
    for v in verts:
        inc = g.incident_edges(v)
        if len(inc) <= 2:
            choice_lists.append([inc])
        else:
            head, rest = inc[0], inc[1:]
            choice_lists.append([(head,) + p for p in permutations(rest)])
    zero = {v: () for v in g.vertices if g.degree(v) == 0}
    for combo in product(*choice_lists):
        rot = dict(zero)
        for v, order in zip(verts, combo):
            rot[v] = order
        yield RotationSystem(g, rot)
