"""Shared hypothesis strategies for graph-shaped inputs.

Everything here builds small instances on purpose: the exact oracles and the
planarity checks downstream are exponential or cubic, and shrunk
counterexamples on six vertices read much better than on sixty.
"""

from __future__ import annotations

from hypothesis import strategies as st

from jointcross import Edge, WeightedMultigraph


@st.composite
def connected_graphs(
    draw: st.DrawFn,
    min_vertices: int = 2,
    max_vertices: int = 8,
    max_extra_edges: int = 6,
    max_weight: int = 5,
    allow_parallel: bool = True,
) -> WeightedMultigraph:
    """A connected weighted multigraph: random spanning tree plus extras."""
    n = draw(st.integers(min_vertices, max_vertices))
    names = [f"v{i}" for i in range(n)]
    edges: list[Edge] = []

    def weight() -> int:
        return draw(st.integers(1, max_weight))

    for i in range(1, n):
        parent = draw(st.integers(0, i - 1))
        edges.append(Edge(f"t{i}", names[parent], names[i], weight()))
    extra = draw(st.integers(0, max_extra_edges))
    used: set[frozenset[str]] = {frozenset(e.ends()) for e in edges}
    for j in range(extra):
        a = draw(st.integers(0, n - 1))
        b = draw(st.integers(0, n - 1))
        if a == b:
            continue
        pair = frozenset((names[a], names[b]))
        if not allow_parallel and pair in used:
            continue
        used.add(pair)
        edges.append(Edge(f"x{j}", names[a], names[b], weight()))
    return WeightedMultigraph(names, edges)


@st.composite
def monotone_pairs(
    draw: st.DrawFn, min_len: int = 2, max_len: int = 6
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(strictly increasing a, strictly decreasing b) of equal length."""
    n = draw(st.integers(min_len, max_len))
    a = draw(
        st.lists(st.integers(1, 10**6), min_size=n, max_size=n, unique=True)
    )
    b = draw(
        st.lists(st.integers(1, 10**6), min_size=n, max_size=n, unique=True)
    )
    return tuple(sorted(a)), tuple(sorted(b, reverse=True))


def vertex_relabelings(g: WeightedMultigraph) -> st.SearchStrategy[dict[str, str]]:
    """A random bijective renaming of g's vertices onto fresh names."""
    names = sorted(g.vertices)
    return st.permutations(range(len(names))).map(
        lambda perm: {names[i]: f"w{perm[i]}" for i in range(len(names))}
    )
