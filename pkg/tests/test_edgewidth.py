from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jointcross import (
    EmbeddingError,
    dual_edge_width_torus,
    edge_width_torus,
    is_planar,
    toroidal_grid,
    torus_gadget,
)


@given(st.integers(3, 6), st.integers(3, 6))
@settings(max_examples=16, deadline=None)
def test_toroidal_grid_width_is_short_side(p: int, q: int) -> None:
    """The shortest noncontractible dual cycle of C_p x C_q goes around the
    short direction once: min(p, q)."""
    _, rs = toroidal_grid(p, q)
    assert edge_width_torus(rs) == min(p, q)


def test_capped_gadget_width() -> None:
    gadget = torus_gadget(1, 1)
    assert dual_edge_width_torus(gadget.rotation) == 6


def test_rejects_planar_embedding() -> None:
    from jointcross import Edge, WeightedMultigraph

    g = WeightedMultigraph(
        ("a", "b", "c"),
        (Edge("e1", "a", "b"), Edge("e2", "b", "c"), Edge("e3", "c", "a")),
    )
    ok, rs = is_planar(g)
    assert ok
    with pytest.raises(EmbeddingError):
        edge_width_torus(rs)


def test_width_invariant_under_relabeling() -> None:
    from jointcross import RotationSystem

    g, rs = toroidal_grid(3, 5)
    mapping = {v: f"x{i}" for i, v in enumerate(sorted(g.vertices))}
    rg = g.relabeled(mapping)
    rrs = RotationSystem(rg, {mapping[v]: rs.rotation(v) for v in g.vertices})
    assert edge_width_torus(rrs) == edge_width_torus(rs) == 3


def test_dual_alias_is_same_search() -> None:
    _, rs = toroidal_grid(4, 4)
    assert dual_edge_width_torus(rs) == edge_width_torus(rs)
