from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jointcross import (
    Edge,
    EmbeddingError,
    RotationSystem,
    WeightedMultigraph,
    cyclic_equal,
    euler_genus,
    face_matching_cycle,
    is_planar,
    rotations_from_layout,
    trace_faces,
)

from .strategies import connected_graphs


def square_grid(p: int, q: int) -> tuple[WeightedMultigraph, dict[str, tuple[int, int]]]:
    """Planar p x q grid with its integer layout."""
    vs = [f"g{i}_{j}" for i in range(p) for j in range(q)]
    pos = {f"g{i}_{j}": (j, i) for i in range(p) for j in range(q)}
    edges = []
    for i in range(p):
        for j in range(q):
            if j + 1 < q:
                edges.append(Edge(f"h{i}_{j}", f"g{i}_{j}", f"g{i}_{j + 1}"))
            if i + 1 < p:
                edges.append(Edge(f"v{i}_{j}", f"g{i}_{j}", f"g{i + 1}_{j}"))
    return WeightedMultigraph(vs, edges), pos


def test_rotation_must_cover_vertex_set() -> None:
    g = WeightedMultigraph(("a", "b"), (Edge("e", "a", "b"),))
    with pytest.raises(EmbeddingError):
        RotationSystem(g, {"a": ("e",)})
    with pytest.raises(EmbeddingError):
        RotationSystem(g, {"a": ("e",), "b": ()})


def test_face_lengths_partition_darts() -> None:
    g, pos = square_grid(3, 3)
    rs = rotations_from_layout(g, pos)
    faces = trace_faces(rs)
    assert sum(len(f.darts) for f in faces) == 2 * g.n_edges


def test_grid_layout_is_planar_embedding() -> None:
    g, pos = square_grid(3, 4)
    rs = rotations_from_layout(g, pos)
    assert euler_genus(rs) == 0
    faces = trace_faces(rs)
    # (p-1)(q-1) unit squares plus the outer face
    assert len(faces) == 2 * 3 + 1


def test_face_matching_cycle_finds_unit_square() -> None:
    g, pos = square_grid(3, 3)
    rs = rotations_from_layout(g, pos)
    square = ("g0_0", "g0_1", "g1_1", "g1_0")
    assert face_matching_cycle(rs, square) is not None
    assert face_matching_cycle(rs, ("g0_0", "g1_1", "g0_1", "g1_0")) is None


def test_mirrored_preserves_genus() -> None:
    g, pos = square_grid(3, 3)
    rs = rotations_from_layout(g, pos)
    assert euler_genus(rs.mirrored()) == euler_genus(rs) == 0


def test_euler_genus_requires_connected() -> None:
    g = WeightedMultigraph(("a", "b", "c", "d"), (Edge("e1", "a", "b"), Edge("e2", "c", "d")))
    rs = RotationSystem(g, {"a": ("e1",), "b": ("e1",), "c": ("e2",), "d": ("e2",)})
    with pytest.raises(EmbeddingError):
        euler_genus(rs)


def test_cyclic_equal_reflects_on_request() -> None:
    assert cyclic_equal((1, 2, 3), (2, 3, 1))
    assert cyclic_equal((1, 2, 3), (3, 2, 1), reflect=True)
    assert not cyclic_equal((1, 2, 3), (3, 2, 1), reflect=False)
    assert not cyclic_equal((1, 2, 3), (1, 2, 4))


@given(connected_graphs(max_vertices=6, max_extra_edges=4))
@settings(max_examples=60)
def test_planar_embedding_witness_has_genus_zero(g: WeightedMultigraph) -> None:
    ok, rs = is_planar(g)
    if ok:
        assert rs is not None
        assert rs.graph == g
        assert euler_genus(rs) == 0
    else:
        assert rs is None


@given(connected_graphs(max_vertices=5, max_extra_edges=3), st.randoms())
@settings(max_examples=60)
def test_random_rotation_has_nonnegative_genus(g, rnd) -> None:
    """Any rotation system yields a legal orientable embedding of some genus."""
    rot = {}
    for v in g.vertices:
        order = list(g.incident_edges(v))
        rnd.shuffle(order)
        rot[v] = tuple(order)
    rs = RotationSystem(g, rot)
    h = euler_genus(rs)
    assert h >= 0
    # the dart count invariant holds whatever the genus came out as
    assert sum(len(f.darts) for f in trace_faces(rs)) == 2 * g.n_edges


def test_trace_faces_deterministic() -> None:
    g, pos = square_grid(4, 4)
    rs = rotations_from_layout(g, pos)
    assert trace_faces(rs) == trace_faces(rs)
