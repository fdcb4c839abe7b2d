from __future__ import annotations

import pytest
from hypothesis import given, settings

from jointcross import (
    GraphBundle,
    ParseError,
    build_fa_instance,
    fa_to_surface,
    is_planar,
    mirror_join,
    parse_instance,
    serialize_instance,
    to_dot,
    toroidal_grid,
)

from .strategies import connected_graphs
from .toys import path_pair_fa, triangle_star_anchored


def roundtrip(inst):
    text = serialize_instance(inst)
    again = serialize_instance(parse_instance(text))
    assert text == again
    return text


@given(connected_graphs(max_vertices=7))
@settings(max_examples=60)
def test_bundle_roundtrip_is_byte_stable(g) -> None:
    roundtrip(GraphBundle(g, None, name="g"))


@given(connected_graphs(max_vertices=6, max_extra_edges=3))
@settings(max_examples=40)
def test_bundle_with_embedding_roundtrip(g) -> None:
    ok, rot = is_planar(g)
    if not ok:
        return
    text = roundtrip(GraphBundle(g, rot, name="g"))
    assert "[promise-embedding g]" in text


def test_all_four_kinds_roundtrip() -> None:
    roundtrip(GraphBundle(*toroidal_grid(3, 4), name="grid"))
    roundtrip(build_fa_instance(2, 3).instance)
    roundtrip(mirror_join(build_fa_instance(2, 3)).instance)
    roundtrip(triangle_star_anchored())
    surf, _ = fa_to_surface(path_pair_fa(2))
    roundtrip(surf)


def test_parse_error_carries_line_number() -> None:
    text = "format = jointcross-instance 1\n[graph g]\nedge broken\n"
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert "line 3" in str(err.value)


def test_header_required() -> None:
    with pytest.raises(ParseError):
        parse_instance("[graph g]\nvertex a\n")


def test_duplicate_vertex_rejected() -> None:
    text = (
        "format = jointcross-instance 1\n"
        "[graph g]\n"
        "vertex a\n"
        "vertex a\n"
    )
    with pytest.raises(ParseError):
        parse_instance(text)


def test_unknown_section_rejected() -> None:
    text = "format = jointcross-instance 1\n[mystery]\n"
    with pytest.raises(ParseError):
        parse_instance(text)


def test_validation_errors_surface_as_parse_errors() -> None:
    # an edge endpoint that is not a declared vertex
    text = (
        "format = jointcross-instance 1\n"
        "[graph g]\n"
        "vertex a\n"
        "edge e a b 1\n"
    )
    with pytest.raises(ParseError):
        parse_instance(text)


def test_dot_export_bundle() -> None:
    g, rot = toroidal_grid(3, 3)
    dot = to_dot(GraphBundle(g, rot, name="grid"))
    assert dot.startswith('graph "grid" {')
    assert dot.rstrip().endswith("}")
    # unit weights carry no labels
    assert "label" not in dot


def test_dot_export_pair_uses_clusters() -> None:
    inst = build_fa_instance(2, 3).instance
    dot = to_dot(inst)
    assert 'subgraph "cluster_f1"' in dot
    assert 'subgraph "cluster_f2"' in dot
    assert "label=" in dot  # weighted edges are labeled
