#!/usr/bin/env python3
"""Walk the surface side of the tool chain.

Builds the toroidal grids and capped handle gadgets, reports their exact
genus and dual edge width, and shows a face-anchored toy climbing to its
target genus one handle at a time.
"""

from __future__ import annotations

import argparse

from jointcross import (
    Edge,
    FaceAnchor,
    FaJointInstance,
    WeightedMultigraph,
    dual_edge_width_torus,
    euler_genus,
    fa_to_surface,
    rotations_from_layout,
    toroidal_grid,
    torus_gadget,
)


def strip_toy(h: int) -> FaJointInstance:
    tops = [f"t{i}" for i in range(h + 1)]
    bots = [f"b{i}" for i in range(h + 1)]
    es = []
    pos = {}
    for i in range(h + 1):
        pos[tops[i]] = (i, 0)
        pos[bots[i]] = (i, 1)
        es.append(Edge(f"v{i}", tops[i], bots[i]))
        if i < h:
            es.append(Edge(f"t{i}", tops[i], tops[i + 1]))
            es.append(Edge(f"b{i}", bots[i], bots[i + 1]))
    g1 = WeightedMultigraph(tops + bots, es)
    ys = [f"y{i}" for i in range(h + 1)]
    g2 = WeightedMultigraph(ys, [Edge(f"p{i}", ys[i], ys[i + 1]) for i in range(h)])
    anchors = tuple(
        FaceAnchor((tops[i], tops[i + 1], bots[i + 1], bots[i]), ys[i])
        for i in range(h)
    )
    return FaJointInstance(g1, g2, anchors, promise1=rotations_from_layout(g1, pos))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-genus", type=int, default=6)
    args = parser.parse_args()

    print("-- toroidal grids --")
    for p, q in ((3, 3), (3, 6), (4, 5), (6, 6)):
        g, rs = toroidal_grid(p, q)
        print(
            f"C_{p} x C_{q}: {g.n_vertices} vertices, genus {euler_genus(rs)}, "
            f"edge width {dual_edge_width_torus(rs)}"
        )

    print("\n-- capped handle gadgets --")
    for h in range(1, args.max_genus + 1):
        gadget = torus_gadget(1, h)
        print(
            f"T_1 of {h}: {gadget.graph.n_vertices} vertices, "
            f"genus {euler_genus(gadget.rotation)}, "
            f"edge width {dual_edge_width_torus(gadget.rotation)}"
        )

    print("\n-- face anchors traded for handles --")
    for h in range(1, args.max_genus + 1):
        out, receipt = fa_to_surface(strip_toy(h))
        print(
            f"h = {h}: g1 {out.g1.n_vertices}/{out.g1.n_edges} at genus {out.h1}, "
            f"g2 {out.g2.n_vertices}/{out.g2.n_edges} at genus {out.h2}, "
            f"p = {receipt.int_param('p')}"
        )


if __name__ == "__main__":
    main()
