"""Acceptance gate: one test per criterion, one PASS/FAIL line each.

Every criterion times itself against its stated budget and prints

    criterion N: PASS <description> (X.XXs, budget Ys)

(run with `pytest -v -s tests/test_acceptance.py` to see the lines as they
happen; under plain `-v` the per-test PASSED/FAILED markers carry the same
information).

Scope note: these criteria certify the *constructions* at desk scale: the
gadget counts, the cut structure, the exact genus of every splice, the value
transport along the chain and the brute-force optima of toy instances. The
hardness theorem itself (that deciding the joint crossing number is NP-hard)
quantifies over all instances and is not desk-reproducible; no test here
claims to check it.
"""

from __future__ import annotations

from itertools import permutations
from random import Random
from time import perf_counter

import networkx as nx

from jointcross import (
    FaceAnchor,
    FaJointInstance,
    WeightedMultigraph,
    anchored_to_fa6,
    beta,
    beta_sum,
    build_f2,
    build_fa_instance,
    canonical_fa_count,
    canonical_fa_count_sum,
    canonical_fplus_count,
    canonical_fplus_count_sum,
    canonical_fplus_witness,
    dual_edge_width_torus,
    euler_genus,
    expand_weights,
    fa_joint_planar_oracle,
    fa_to_surface,
    full_pipeline,
    gamma,
    gamma_sum,
    is_planar,
    l_gadget,
    min_cut_weight,
    min_pair_gap,
    mirror_join,
    ordering_gap,
    pad_dummy_anchors,
    recover_s,
    target_value,
    three_connectify,
    toroidal_grid,
    torus_gadget,
    validate_drawn_witness,
)
from jointcross.reductions import transformed_witness_three_connectify
from jointcross.witness import witness_cost

from .test_reductions import surface_toy, to_nx
from .toys import (
    Edge,
    cube_opposite_faces,
    k4_adjacent_faces,
    k4_same_face,
    path_pair_fa,
    probe_pair,
    triangle_star_anchored,
)


def _run(n: int, description: str, budget_s: float, body) -> None:
    t0 = perf_counter()
    try:
        body()
    except BaseException:
        elapsed = perf_counter() - t0
        print(f"criterion {n}: FAIL {description} ({elapsed:.2f}s, budget {budget_s}s)")
        raise
    elapsed = perf_counter() - t0
    verdict = "PASS" if elapsed < budget_s else "FAIL"
    print(f"criterion {n}: {verdict} {description} ({elapsed:.2f}s, budget {budget_s}s)")
    assert elapsed < budget_s, f"criterion {n} overran its {budget_s}s budget"


def test_criterion_1_counting_formulas() -> None:
    def body() -> None:
        for k in range(2, 201):
            assert gamma(k) == gamma_sum(k)
        for k in range(2, 51):
            for big_t in (1, 7, 10):
                assert beta(k, big_t) == beta_sum(k, big_t)
                assert canonical_fa_count(k, big_t) == canonical_fa_count_sum(k, big_t)
                assert canonical_fplus_count(k, big_t) == canonical_fplus_count_sum(
                    k, big_t
                )
        # frozen spot values, derived once by hand-checked summation
        assert gamma(2) == 18
        assert gamma(3) == 172
        assert beta(2, 10) == 780
        assert canonical_fa_count(2, 10) == 38780
        assert canonical_fplus_count(2, 10) == 77560
        assert canonical_fa_count(3, 10) == 122920

    _run(1, "closed-form counts equal direct summations", 5.0, body)


def test_criterion_2_ladder_cuts() -> None:
    def body() -> None:
        names = ("a1", "a2", "a3", "a4")
        for k in range(2, 31):
            g, _, _, _ = build_f2(k)
            rung_total = k * (k + 1) // 2
            want = {
                "a1": k**3 + rung_total,
                "a2": k**3,
                "a3": k**3,
                "a4": k**3 + rung_total,
            }
            for a in names:
                rest = tuple(x for x in names if x != a)
                assert min_cut_weight(g, (a,), rest) == want[a]

    _run(2, "ladder anchor cuts match k^3 formulas for k = 2..30", 10.0, body)


def test_criterion_3_exact_genus() -> None:
    def body() -> None:
        for k in range(2, 11):
            pair = mirror_join(build_fa_instance(k, 3)).instance
            assert euler_genus(pair.promise1) == 0
            assert euler_genus(pair.promise2) == 0
        for p in range(3, 9):
            for q in range(3, 9):
                _, rs = toroidal_grid(p, q)
                assert euler_genus(rs) == 1
        for h in range(1, 7):
            out, receipt = fa_to_surface(path_pair_fa(h))
            assert out.h1 == h and out.h2 == h
            receipt.validate()

    _run(3, "gadget embeddings land on the exact surface", 10.0, body)


def test_criterion_4_edge_width() -> None:
    def body() -> None:
        for p in range(3, 7):
            for q in range(3, 7):
                _, rs = toroidal_grid(p, q)
                assert dual_edge_width_torus(rs) == min(p, q)
        assert dual_edge_width_torus(torus_gadget(1, 1).rotation) == 6

    _run(4, "dual edge width: grids min(p,q), capped gadget 6", 30.0, body)


def test_criterion_5_ordering_lemma() -> None:
    def body() -> None:
        def check(a: tuple[int, ...], b: tuple[int, ...]) -> None:
            bound = min_pair_gap(a) * min_pair_gap(b)
            for perm in permutations(range(len(a))):
                gap = ordering_gap(a, b, perm)
                if perm == tuple(range(len(a))):
                    assert gap == 0
                else:
                    assert gap >= bound

        for n in range(2, 7):
            check(tuple(range(1, n + 1)), tuple(range(2 * n, 0, -2)))
        rng = Random(20260816)
        for _ in range(1000):
            n = rng.randint(2, 6)
            a = tuple(sorted(rng.sample(range(1, 500), n)))
            b = tuple(sorted(rng.sample(range(1, 500), n), reverse=True))
            check(a, b)

    _run(5, "identity pairing optimal, exhaustive perms + 1000 random pairs", 5.0, body)


def test_criterion_6_oracle_trio() -> None:
    def body() -> None:
        for builder, want in (
            (k4_same_face, 0),
            (k4_adjacent_faces, 1),
            (cube_opposite_faces, 2),
        ):
            result = fa_joint_planar_oracle(builder())
            assert not result.exceeded
            assert result.value == want

    _run(6, "brute-force optima 0 / 1 / 2 on the anchored toys", 60.0, body)


def _weighted_toys() -> list[FaJointInstance]:
    toys = []
    for builder in (k4_same_face, k4_adjacent_faces):
        base = builder()
        for w in (1, 2, 3):
            toys.append(
                FaJointInstance(
                    base.g1, probe_pair(weight=w), base.anchors, promise1=base.promise1
                )
            )
    base = k4_adjacent_faces()
    path = WeightedMultigraph(
        ("y1", "y2", "y3"),
        (Edge("f0", "y1", "y2", 2), Edge("f1", "y2", "y3", 1)),
    )
    toys.append(
        FaJointInstance(
            base.g1,
            path,
            (
                FaceAnchor(base.anchors[0].cycle, "y1"),
                FaceAnchor(base.anchors[1].cycle, "y3"),
            ),
            promise1=base.promise1,
        )
    )
    return toys


def test_criterion_7_weight_expansion_and_blowup() -> None:
    def body() -> None:
        for toy in _weighted_toys():
            assert toy.g2.n_edges <= 6
            assert all(e.weight <= 3 for e in toy.g2.edges)
            weighted = fa_joint_planar_oracle(toy)
            expanded, _ = expand_weights(toy)
            unweighted = fa_joint_planar_oracle(expanded)
            assert not weighted.exceeded and not unweighted.exceeded
            assert weighted.value == unweighted.value

        for src in (surface_toy(), fa_to_surface(path_pair_fa(1))[0]):
            out, receipt = three_connectify(src)
            for g in (out.g1, out.g2):
                assert g.is_simple()
                assert nx.node_connectivity(to_nx(g)) >= 3
            assert out.h == src.h
            one = {src.g2.edges[0].id: (src.g1.edges[0].id,)}
            lifted = transformed_witness_three_connectify(one)
            assert witness_cost(out.g1, out.g2, lifted) == 9 * witness_cost(
                src.g1, src.g2, one
            )

    _run(
        7,
        "unit expansion keeps optima; wheel blow-up is simple, 3-connected, 9x",
        300.0,
        body,
    )


def _twenty_receipts() -> list:
    receipts = []
    for h in range(1, 7):
        receipts.append(fa_to_surface(path_pair_fa(h))[1])
    for h in range(1, 4):
        base = path_pair_fa(h)
        heavier = WeightedMultigraph(
            base.g2.vertices,
            tuple(Edge(e.id, e.u, e.v, 2 * e.weight) for e in base.g2.edges),
        )
        doubled = FaJointInstance(
            base.g1, heavier, base.anchors, promise1=base.promise1
        )
        receipts.append(fa_to_surface(doubled)[1])
    receipts.append(fa_to_surface(pad_dummy_anchors(path_pair_fa(2), 2))[1])
    star = triangle_star_anchored()
    receipts.append(anchored_to_fa6(star)[1])
    heavier_star = WeightedMultigraph(
        star.g2.vertices,
        tuple(Edge(e.id, e.u, e.v, 2) for e in star.g2.edges),
    )
    from jointcross import AnchoredInstance

    star2 = AnchoredInstance(
        star.g1, heavier_star, star.a1, star.a2_groups, star.sigma
    )
    receipts.append(anchored_to_fa6(star2)[1])
    star3 = AnchoredInstance(
        star.g1, star.g2, star.a1, star.a2_groups, tuple(reversed(star.sigma))
    )
    receipts.append(anchored_to_fa6(star3)[1])
    receipts.append(three_connectify(surface_toy())[1])
    receipts.append(three_connectify(fa_to_surface(path_pair_fa(1))[0])[1])
    receipts.append(expand_weights(surface_toy())[1])
    receipts.append(full_pipeline(star)[1])
    from jointcross import PipelineOptions

    receipts.append(full_pipeline(star, PipelineOptions(h=7))[1])
    receipts.append(full_pipeline(star2)[1])
    receipts.append(expand_weights(path_pair_fa(2))[1])
    return receipts


def test_criterion_8_value_transport() -> None:
    def body() -> None:
        receipts = _twenty_receipts()
        assert len(receipts) == 20
        for receipt in receipts:
            for s in (0, 1, 2, 5):
                assert recover_s(target_value(receipt, s), receipt) == s
        for k in (2, 3):
            w = canonical_fplus_witness(k, 10)
            assert validate_drawn_witness(w) == canonical_fplus_count(k, 10)

    _run(8, "20 receipts round-trip s; doubled witness costs match", 30.0, body)


def test_criterion_9_handle_gadgets_refuse_the_plane() -> None:
    def body() -> None:
        for h in range(1, 7):
            for i in range(1, h + 1):
                gadget = torus_gadget(i, h)
                core = gadget.graph.induced_subgraph(
                    [
                        v
                        for v in gadget.graph.vertices
                        if v not in gadget.ring_vertices
                    ]
                )
                ok, _ = is_planar(core)
                assert not ok
        ok, _ = is_planar(l_gadget(1).graph)
        assert not ok

    _run(9, "capped grids minus ring and the K33 wedge are nonplanar", 5.0, body)
