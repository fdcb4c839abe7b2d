"""Generators for the anchored gadget pair and its mirror join.

The pair F1/F2 is parameterized by a ladder length k >= 2 and a big weight T:

* F1 is a 3 x (k+3) grid with column roles (x_1, x_2, c_1 .. c_{k-1}, x_3,
  x_4) per row. Weights: T^4 on the 8 outer-frame edges (both x_1x_2 and
  x_3x_4 horizontals in every row, plus the two x_1-column verticals), T^3 on
  the six verticals of the x_2, x_3 and x_4 columns, T^2 on the 3k row-path
  edges between x_2 and x_3, and j*T / (k-j)*T on the upper/lower verticals
  of column c_j. The four anchor cycles are the grid squares of the x_1x_2
  and x_3x_4 column pairs.
* F2 is a ladder on two paths a_1-b_1-..-b_k-a_3 (edge l weighing t_{k-l})
  and a_2-b'_1-..-b'_k-a_4 (edge l weighing t_l), rungs b_jb'_j of weight
  k+1, where t_0 = k^3 and t_j = t_{j-1} + j.

Each generator fixes an integer straight-line layout; canonical rotations
are derived from it, so all drawings share one orientation convention. The
mirror join doubles the pair across the x_3/x_4 columns: a reflected copy is
glued by x^i_3 ~ mirror-x^i_4 and x^i_4 ~ mirror-x^i_3 (dropping the mirror
copies of the seven shared interface edges), and the ladder copies share
a_3 and a_4. The joined instance carries six anchors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import ladder_weight_seq
from .graphs import Edge, WeightedMultigraph, identify_vertices
from .instances import FaceAnchor, FaJointInstance, ValidationError
from .rotations import RotationSystem, rotations_from_layout

Layout = dict[str, tuple[int, int]]


@dataclass
class GadgetInstance:
    """A built gadget instance plus the structure the reductions need."""

    instance: FaJointInstance
    k: int
    big_t: int
    mirrored: bool
    layout1: Layout  # straight-line coordinates of g1 (and of the joint drawing)
    layout2: Layout  # overlay coordinates of g2 in the joint drawing
    q_paths: dict[str, tuple[str, ...]]  # ladder paths keyed by group "1".."4"
    r_paths: dict[str, tuple[str, ...]]  # row paths keyed "r1","r3","mr1","mr3"
    t_seq: tuple[int, ...]
    ident_maps: dict[str, dict[str, str]]


def _f1_column(k: int, col: int) -> str:
    """Vertex-name stem of a big column index 0..k+2."""
    if col == 0:
        return "1"
    if col == 1:
        return "2"
    if col == k + 1:
        return "3"
    if col == k + 2:
        return "4"
    return f"c{col - 1}"  # c_j sits at big column j+1


def _f1_vertex(row: int, k: int, col: int) -> str:
    stem = _f1_column(k, col)
    if stem.startswith("c"):
        return f"c{row}_{stem[1:]}"
    return f"x{row}_{stem}"


def build_f1(
    k: int, big_t: int
) -> tuple[WeightedMultigraph, RotationSystem, Layout, dict[str, tuple[str, ...]]]:
    """The 3 x (k+3) weighted grid, its canonical rotation and layout, and the
    two attachment row paths r1/r3 (x_2 through the c-columns to x_3)."""
    if k < 2:
        raise ValidationError(f"k must be >= 2, got {k}")
    if big_t < 1:
        raise ValidationError(f"T must be >= 1, got {big_t}")
    t4, t3, t2 = big_t**4, big_t**3, big_t**2

    vertices: list[str] = []
    layout: Layout = {}
    for row in (1, 2, 3):
        for col in range(k + 3):
            v = _f1_vertex(row, k, col)
            vertices.append(v)
            layout[v] = (4 * col, 4 * row)

    def h_weight(col: int) -> int:
        return t4 if col in (0, k + 1) else t2

    def v_weight(row: int, col: int) -> int:
        if col == 0:
            return t4
        if col in (1, k + 1, k + 2):
            return t3
        j = col - 1  # column c_j
        return j * big_t if row == 1 else (k - j) * big_t

    edges: list[Edge] = []
    for row in (1, 2, 3):
        for col in range(k + 2):
            edges.append(
                Edge(
                    f"h{row}_{col}",
                    _f1_vertex(row, k, col),
                    _f1_vertex(row, k, col + 1),
                    h_weight(col),
                )
            )
    for row in (1, 2):
        for col in range(k + 3):
            edges.append(
                Edge(
                    f"v{row}_{col}",
                    _f1_vertex(row, k, col),
                    _f1_vertex(row + 1, k, col),
                    v_weight(row, col),
                )
            )

    g = WeightedMultigraph(vertices, edges)
    rot = rotations_from_layout(g, layout)
    r_paths = {
        "r1": tuple(_f1_vertex(1, k, c) for c in range(1, k + 2)),
        "r3": tuple(_f1_vertex(3, k, c) for c in range(1, k + 2)),
    }
    return g, rot, layout, r_paths


def anchor_cycles_f1(k: int) -> dict[str, tuple[str, ...]]:
    """The four anchor squares of F1 (grid faces, hence facial)."""

    def square(row: int, col: int) -> tuple[str, ...]:
        return (
            _f1_vertex(row, k, col),
            _f1_vertex(row, k, col + 1),
            _f1_vertex(row + 1, k, col + 1),
            _f1_vertex(row + 1, k, col),
        )

    return {
        "c1": square(1, 0),
        "c2": square(2, 0),
        "c3": square(1, k + 1),
        "c4": square(2, k + 1),
    }


def build_f2(
    k: int,
) -> tuple[WeightedMultigraph, RotationSystem, Layout, dict[str, tuple[str, ...]]]:
    """The weighted ladder F2, canonical rotation, overlay layout, paths."""
    if k < 2:
        raise ValidationError(f"k must be >= 2, got {k}")
    t_seq = ladder_weight_seq(k)

    top = ["a1"] + [f"b{j}" for j in range(1, k + 1)] + ["a3"]
    bot = ["a2"] + [f"bp{j}" for j in range(1, k + 1)] + ["a4"]
    vertices = top + bot
    layout: Layout = {}
    for idx, v in enumerate(top):
        # interior vertices sit at face centers of the F1 overlay: a1 inside
        # the left anchor square, b_j inside the j-th top band face, a3 inside
        # the right anchor square
        layout[v] = (4 * idx + 2, 6)
    for idx, v in enumerate(bot):
        layout[v] = (4 * idx + 2, 10)

    edges: list[Edge] = []
    for l in range(k + 1):
        edges.append(Edge(f"qt{l}", top[l], top[l + 1], t_seq[k - l]))
    for l in range(k + 1):
        edges.append(Edge(f"qb{l}", bot[l], bot[l + 1], t_seq[l]))
    for j in range(1, k + 1):
        edges.append(Edge(f"qv{j}", f"b{j}", f"bp{j}", k + 1))

    g = WeightedMultigraph(vertices, edges)
    rot = rotations_from_layout(g, layout)
    q_paths = {"1": tuple(top), "2": tuple(bot)}
    return g, rot, layout, q_paths


def build_fa_instance(k: int, big_t: int) -> GadgetInstance:
    """The four-anchor gadget pair: F1 with F2, a_i anchored in square C_i."""
    g1, rot1, layout1, r_paths = build_f1(k, big_t)
    g2, rot2, layout2, q_paths = build_f2(k)
    cycles = anchor_cycles_f1(k)
    anchors = tuple(
        FaceAnchor(cycles[c], a)
        for c, a in (("c1", "a1"), ("c2", "a2"), ("c3", "a3"), ("c4", "a4"))
    )
    inst = FaJointInstance(g1, g2, anchors, rot1, rot2, name1="f1", name2="f2")
    return GadgetInstance(
        instance=inst,
        k=k,
        big_t=big_t,
        mirrored=False,
        layout1=layout1,
        layout2=layout2,
        q_paths=q_paths,
        r_paths=r_paths,
        t_seq=ladder_weight_seq(k),
        ident_maps={},
    )


def _mirror_graph(
    g: WeightedMultigraph, layout: Layout, x_max: int, drop_edges: set[str]
) -> tuple[WeightedMultigraph, Layout]:
    """Reflected copy of g: names prefixed m_, x-coordinates flipped."""
    vertices = [f"m_{v}" for v in g.vertices]
    edges = [
        Edge(f"m_{e.id}", f"m_{e.u}", f"m_{e.v}", e.weight)
        for e in g.edges
        if e.id not in drop_edges
    ]
    mlayout = {f"m_{v}": (x_max - x, y) for v, (x, y) in layout.items()}
    return WeightedMultigraph(vertices, edges), mlayout


def _glue(
    g: WeightedMultigraph,
    mg: WeightedMultigraph,
    pairs: list[tuple[str, str]],
) -> tuple[WeightedMultigraph, dict[str, str]]:
    combined = WeightedMultigraph(
        list(g.vertices) + list(mg.vertices), list(g.edges) + list(mg.edges)
    )
    glued, vmap = identify_vertices(combined, pairs)
    return glued, {old: new for old, new in vmap.items() if old != new}


def mirror_join(gadget: GadgetInstance) -> GadgetInstance:
    """Double the four-anchor pair across its x_3/x_4 columns.

    The grid gains a reflected copy glued along those columns (the seven
    interface edges exist once), the ladder gains a reflected copy sharing
    a_3 and a_4, and the two left-end anchor squares of the mirror copy
    become anchors five and six. The joined drawing's crossing count is
    exactly twice the single pair's.
    """
    if gadget.mirrored:
        raise ValidationError("mirror_join applied twice; the instance is already joined")
    k = gadget.k
    x_max = 8 * k + 12  # full double-grid width: big columns 0 .. 2k+3

    g1, layout1 = gadget.instance.g1, gadget.layout1
    # interface edges: the x_3x_4 horizontals and both columns' verticals
    interface = {f"h{row}_{k + 1}" for row in (1, 2, 3)}
    interface |= {f"v{row}_{col}" for row in (1, 2) for col in (k + 1, k + 2)}
    m1, mlayout1 = _mirror_graph(g1, layout1, x_max, interface)
    pairs1 = []
    for row in (1, 2, 3):
        pairs1.append((_f1_vertex(row, k, k + 2), f"m_{_f1_vertex(row, k, k + 1)}"))
        pairs1.append((_f1_vertex(row, k, k + 1), f"m_{_f1_vertex(row, k, k + 2)}"))
    g1p, ident1 = _glue(g1, m1, pairs1)
    layout1p = dict(layout1)
    for v, xy in mlayout1.items():
        if v not in ident1:
            layout1p[v] = xy

    g2, layout2 = gadget.instance.g2, gadget.layout2
    m2, mlayout2 = _mirror_graph(g2, layout2, x_max, set())
    pairs2 = [("a3", "m_a3"), ("a4", "m_a4")]
    g2p, ident2 = _glue(g2, m2, pairs2)
    layout2p = dict(layout2)
    for v, xy in mlayout2.items():
        if v not in ident2:
            layout2p[v] = xy

    rot1p = rotations_from_layout(g1p, layout1p)
    rot2p = rotations_from_layout(g2p, layout2p)

    cycles = anchor_cycles_f1(k)
    mirror_c1 = tuple(f"m_{v}" for v in cycles["c1"])
    mirror_c2 = tuple(f"m_{v}" for v in cycles["c2"])
    anchors = (
        FaceAnchor(cycles["c1"], "a1"),
        FaceAnchor(cycles["c2"], "a2"),
        FaceAnchor(cycles["c3"], "a3"),
        FaceAnchor(cycles["c4"], "a4"),
        FaceAnchor(mirror_c1, "m_a1"),
        FaceAnchor(mirror_c2, "m_a2"),
    )
    inst = FaJointInstance(g1p, g2p, anchors, rot1p, rot2p, name1="f1p", name2="f2p")

    q1, q2 = gadget.q_paths["1"], gadget.q_paths["2"]
    q_paths = {
        "1": q1,
        "2": q2,
        # mirror ladder paths end at the shared a_3 / a_4
        "4": tuple(f"m_{v}" for v in q1[:-1]) + (q1[-1],),
        "3": tuple(f"m_{v}" for v in q2[:-1]) + (q2[-1],),
    }
    r1, r3 = gadget.r_paths["r1"], gadget.r_paths["r3"]
    r_paths = {
        "r1": r1,
        "r3": r3,
        # mirror row paths end at the glued column vertex x{row}_4
        "mr1": tuple(f"m_{v}" for v in r1[:-1]) + (_f1_vertex(1, k, k + 2),),
        "mr3": tuple(f"m_{v}" for v in r3[:-1]) + (_f1_vertex(3, k, k + 2),),
    }
    return GadgetInstance(
        instance=inst,
        k=k,
        big_t=gadget.big_t,
        mirrored=True,
        layout1=layout1p,
        layout2=layout2p,
        q_paths=q_paths,
        r_paths=r_paths,
        t_seq=gadget.t_seq,
        ident_maps={"grid": ident1, "ladder": ident2},
    )


def ring_slots(gadget: GadgetInstance) -> list[tuple[str, str]]:
    """The outer-boundary attachment ring of the joined gadget.

    Returns (kind, vertex) in cyclic order around the outer face, where kind
    is "q1".."q4" for ladder interior vertices (hosting the four anchored
    groups) or "r" for grid row-path interior vertices (hosting a_1 members).
    Zone order around the ring is group 1, 4, 3, 2.
    """
    if not gadget.mirrored:
        raise ValidationError("the attachment ring exists on the mirror-joined gadget")

    def interleave(kind: str, qs: tuple[str, ...], rs: tuple[str, ...]):
        out: list[tuple[str, str]] = []
        for i, b in enumerate(qs):
            out.append((kind, b))
            if i < len(rs):
                out.append(("r", rs[i]))
        return out

    q = {key: path[1:-1] for key, path in gadget.q_paths.items()}
    r = {key: path[1:-1] for key, path in gadget.r_paths.items()}
    ring: list[tuple[str, str]] = []
    ring += interleave("q1", q["1"], r["r1"])  # top-left, west to east
    ring += interleave("q4", tuple(reversed(q["4"])), tuple(reversed(r["mr1"])))
    ring += interleave("q3", q["3"], r["mr3"])  # bottom-right, east to west
    ring += interleave("q2", tuple(reversed(q["2"])), tuple(reversed(r["r3"])))
    return ring
