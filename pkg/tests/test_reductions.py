from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jointcross import (
    AnchoredInstance,
    Edge,
    FaceAnchor,
    FaJointInstance,
    PipelineOptions,
    SurfaceJointInstance,
    ValidationError,
    WeightedMultigraph,
    anchored_to_fa6,
    euler_genus,
    expand_weights,
    fa_to_surface,
    full_pipeline,
    pad_dummy_anchors,
    receipt_from_text,
    receipt_to_text,
    recover_s,
    target_value,
    three_connectify,
    toroidal_grid,
    validate_a2,
)
from jointcross.reductions import (
    transformed_witness_fa_to_surface,
    transformed_witness_three_connectify,
)
from jointcross.witness import witness_cost

from .strategies import connected_graphs
from .toys import path_pair_fa, triangle_star_anchored


def to_nx(g: WeightedMultigraph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    out.add_edges_from(e.ends() for e in g.edges)
    return out


def surface_toy() -> SurfaceJointInstance:
    g1, r1 = toroidal_grid(3, 3, prefix="a")
    g2, r2 = toroidal_grid(3, 3, prefix="b")
    return SurfaceJointInstance(g1, g2, r1, r2, h=1)


# -- group separation gate --------------------------------------------------


def test_validate_a2_accepts_the_toy() -> None:
    report = validate_a2(triangle_star_anchored())
    assert report.ok
    assert len(report.lines()) == 4


def test_validate_a2_flags_leaky_group() -> None:
    """When a cheaper cut exists past the group's own edges, the group's
    incident weight overstates its separation cost and the premise fails."""
    g1 = WeightedMultigraph(
        ("x1", "x2"),
        (Edge("e1", "x1", "x2"),),
    )
    g2 = WeightedMultigraph(
        ("y1", "y2", "z"),
        (Edge("f1", "y1", "z", 10), Edge("f2", "z", "y2", 1)),
    )
    src = AnchoredInstance(
        g1,
        g2,
        a1=("x1",),
        a2_groups=(("y1",), ("y2",), (), ()),
        sigma=("x1", "y1", "y2"),
    )
    report = validate_a2(src)
    assert not report.ok
    assert report.groups[0].incident_weight == 10
    assert report.groups[0].cut_weight == 1


# -- anchored -> six face anchors --------------------------------------------


def test_anchored_to_fa6_toy() -> None:
    out, receipt = anchored_to_fa6(triangle_star_anchored())
    assert len(out.anchors) == 6
    assert euler_genus(out.promise1) == 0
    assert euler_genus(out.promise2) == 0
    assert receipt.kind == "anchored_to_fa6"
    assert receipt.int_param("k") == 7
    assert receipt.list_param("w_list") == (1, 1, 1, 0)
    receipt.validate()


def test_anchored_to_fa6_rejects_bad_groups() -> None:
    src = triangle_star_anchored()
    bad = AnchoredInstance(
        src.g1,
        WeightedMultigraph(
            ("y1", "y2", "y3", "y4"),
            (
                Edge("f1", "y1", "y4", 10),
                Edge("f2", "y4", "y2", 1),
                Edge("f3", "y4", "y3", 1),
            ),
        ),
        a1=src.a1,
        a2_groups=src.a2_groups,
        sigma=src.sigma,
    )
    with pytest.raises(ValidationError):
        anchored_to_fa6(bad)


# -- face anchors -> handles --------------------------------------------------


@pytest.mark.parametrize("h", [1, 2, 3])
def test_fa_to_surface_hits_exact_genus(h: int) -> None:
    out, receipt = fa_to_surface(path_pair_fa(h))
    assert out.h == h
    assert out.h1 == h
    assert out.h2 == h
    assert receipt.kind == "fa_to_surface"
    m = receipt.int_param("m")
    assert receipt.int_param("p") == 8 * m
    assert receipt.int_param("t") == (m + 1) * (8 * m) ** 2
    receipt.validate()


def test_fa_to_surface_value_roundtrip() -> None:
    _, receipt = fa_to_surface(path_pair_fa(2))
    for s in (0, 1, 2, 5):
        assert recover_s(target_value(receipt, s), receipt) == s


def test_fa_to_surface_transformed_witness_is_affordable() -> None:
    """Routing each wedge's thin edge through its own handle gadget costs
    exactly the gadget term of the target, so it must not exceed the
    s = 0 threshold."""
    fa = path_pair_fa(2)
    out, receipt = fa_to_surface(fa)
    pattern = transformed_witness_fa_to_surface({}, receipt)
    cost = witness_cost(out.g1, out.g2, pattern)
    g_list = receipt.list_param("g_list")
    t_list = receipt.list_param("t_list")
    assert cost == sum(g * t for g, t in zip(g_list, t_list))
    assert cost <= target_value(receipt, 0)


def test_fa_to_surface_rejects_edgeless_g2() -> None:
    base = path_pair_fa(1)
    g2 = WeightedMultigraph(("y0",), ())
    inst = FaJointInstance(
        base.g1, g2, (FaceAnchor(base.anchors[0].cycle, "y0"),), promise1=base.promise1
    )
    with pytest.raises(ValidationError):
        fa_to_surface(inst)


def test_fa_to_surface_rejects_duplicate_anchor_cycles() -> None:
    base = path_pair_fa(2)
    dup = (
        base.anchors[0],
        FaceAnchor(tuple(reversed(base.anchors[0].cycle)), base.anchors[1].vertex),
    )
    inst = FaJointInstance(base.g1, base.g2, dup, promise1=base.promise1)
    with pytest.raises(ValidationError):
        fa_to_surface(inst)


def test_fa_to_surface_rejects_triangle_anchor() -> None:
    """The handle splice needs four connector corners on the cycle."""
    g1 = WeightedMultigraph(
        ("a", "b", "c"),
        (Edge("e1", "a", "b"), Edge("e2", "b", "c"), Edge("e3", "c", "a")),
    )
    g2 = WeightedMultigraph(("y0", "y1"), (Edge("p0", "y0", "y1"),))
    inst = FaJointInstance(g1, g2, (FaceAnchor(("a", "b", "c"), "y0"),))
    with pytest.raises(ValidationError):
        fa_to_surface(inst)


# -- 3-connectification --------------------------------------------------------


def test_three_connectify_simple_and_three_connected() -> None:
    out, receipt = three_connectify(surface_toy())
    assert receipt.int_param("scale") == 9
    for g in (out.g1, out.g2):
        assert g.is_simple()
        nxg = to_nx(g)
        assert nx.node_connectivity(nxg) >= 3
    assert out.h == 1
    assert out.h1 == 1
    assert out.h2 == 1


def test_three_connectify_scales_witnesses_nine_fold() -> None:
    src = surface_toy()
    out, receipt = three_connectify(src)
    one_crossing = {src.g2.edges[0].id: (src.g1.edges[0].id,)}
    base = witness_cost(src.g1, src.g2, one_crossing)
    lifted = transformed_witness_three_connectify(one_crossing)
    assert witness_cost(out.g1, out.g2, lifted) == 9 * base
    assert target_value(receipt, 7) == 63


def test_wheel_sizes() -> None:
    """A degree-d vertex becomes 3d rim vertices plus a hub; every original
    edge becomes three tracks."""
    src = surface_toy()
    out, _ = three_connectify(src)
    n, m = src.g1.n_vertices, src.g1.n_edges
    assert out.g1.n_vertices == sum(
        3 * src.g1.degree(v) + 1 for v in src.g1.vertices
    )
    # per vertex: 3d rim edges and 3d spokes; per edge: three tracks
    assert out.g1.n_edges == sum(
        6 * src.g1.degree(v) for v in src.g1.vertices
    ) + 3 * m


# -- unary expansion ------------------------------------------------------------


@given(connected_graphs(max_vertices=6, max_weight=4))
@settings(max_examples=40, deadline=None)
def test_expand_weights_preserves_totals(g: WeightedMultigraph) -> None:
    from jointcross import GraphBundle

    out, receipt = expand_weights(GraphBundle(g, None, name="g"))
    assert out.graph.total_weight() == g.total_weight()
    assert out.graph.n_edges == g.total_weight()
    assert all(e.weight == 1 for e in out.graph.edges)
    assert sorted(out.graph.vertices) == sorted(g.vertices)


def test_expand_weights_subdivide_shape() -> None:
    """One weight-3 edge becomes the 5-vertex, 8-edge plumbing fixture."""
    from jointcross import GraphBundle

    g = WeightedMultigraph(("u", "v"), (Edge("e", "u", "v", 3),))
    out, _ = expand_weights(GraphBundle(g, None), preserve_simple_3conn=True)
    assert out.graph.n_vertices == 5
    assert out.graph.n_edges == 8
    assert out.graph.is_simple()
    assert all(out.graph.degree(x) >= 3 for x in out.graph.vertices if x not in ("u", "v"))


def test_expand_weights_flag_refused_on_anchored_kinds() -> None:
    with pytest.raises(ValidationError):
        expand_weights(path_pair_fa(2), preserve_simple_3conn=True)


def test_expand_weights_bound() -> None:
    from jointcross import GraphBundle

    g = WeightedMultigraph(("u", "v"), (Edge("e", "u", "v", 50),))
    with pytest.raises(ValidationError):
        expand_weights(GraphBundle(g, None), unary_bound=10)


# -- dummy anchors and the full pipeline ----------------------------------------


def test_pad_dummy_anchors() -> None:
    fa = path_pair_fa(2)
    padded = pad_dummy_anchors(fa, 2)
    assert len(padded.anchors) == 4
    assert euler_genus(padded.promise1) == 0
    out, _ = fa_to_surface(padded)
    assert out.h == 4


def test_full_pipeline_composes() -> None:
    out, receipt = full_pipeline(triangle_star_anchored())
    assert out.h == 6
    kinds = [stage.kind for stage in receipt.stages]
    assert kinds == [
        "anchored_to_fa6",
        "fa_to_surface",
        "three_connectify",
        "expand_weights",
    ]
    # chain weights are astronomically past any unary bound: auto must skip
    assert receipt.stage_of_kind("expand_weights").int_param("skipped") == 1
    for s in (0, 1, 2, 5):
        assert recover_s(target_value(receipt, s), receipt) == s
    receipt.validate()


def test_full_pipeline_h7_pads() -> None:
    out, receipt = full_pipeline(triangle_star_anchored(), PipelineOptions(h=7))
    assert out.h == 7
    assert len(receipt.stage_of_kind("fa_to_surface").list_param("g_list")) == 7


def test_full_pipeline_rejects_small_h() -> None:
    with pytest.raises(ValidationError):
        full_pipeline(triangle_star_anchored(), PipelineOptions(h=5))


def test_receipt_text_roundtrip() -> None:
    _, receipt = full_pipeline(triangle_star_anchored())
    text = receipt_to_text(receipt)
    back = receipt_from_text(text)
    assert receipt_to_text(back) == text
    assert back.forward(3) == receipt.forward(3)
