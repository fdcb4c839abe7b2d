"""Toroidal grids, the capped handle gadget, and the K33 wedge gadget.

The handle gadget of index i at surface genus h starts from the toroidal grid
C_g x C_q with g = 5 + i and q = h + 6, vertex rotations (a+, b+, a-, b-)
everywhere, which embeds with gq quadrilateral faces (genus 1). Removing the
two parallel rung edges of one quad merges three quads into an octagonal face
whose boundary carries the four degree-3 endpoints in the cyclic order
u1 = (0,0), u4 = (0,1), u3 = (1,1), u2 = (1,0) (in face-walk direction:
u4, u3, u2, u1). A separate attachment cycle placed inside that octagon is
joined to the four endpoints by connector edges; with the connector spliced
into each endpoint's vacated rotation slot and into the attachment cycle
between its two ring edges, the octagon splits into four collar faces (two
quadrilaterals and two hexagons carrying the octagon's side arcs) plus the
disk bounded by the attachment cycle alone, and the whole gadget is again a
genus-1 rotation system. Gluing it into a face of another
embedding through that disk adds exactly one handle.

Matching orientation rule, derived by tracing: walking the attachment ring in
its disk-face direction, the four connector targets must be visited in the
order u1, u2, u3, u4.

The K33 wedge gadget is a K33 with two light edges sharing an endpoint and
seven heavy edges; parts' cyclic orders aligned gives three hexagonal faces,
so it also carries genus 1. Its attachment vertex is a heavy-degree one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Edge, WeightedMultigraph
from .instances import ValidationError
from .rotations import RotationSystem


def grid_vertex(a: int, b: int, prefix: str = "") -> str:
    return f"{prefix}g{a}_{b}"


def toroidal_grid(
    p: int, q: int, prefix: str = ""
) -> tuple[WeightedMultigraph, RotationSystem]:
    """C_p x C_q with the canonical genus-1 rotation, unit weights."""
    if p < 3 or q < 3:
        raise ValidationError(f"toroidal grid needs p, q >= 3, got {p} x {q}")
    vertices = [grid_vertex(a, b, prefix) for a in range(p) for b in range(q)]
    edges: list[Edge] = []
    for a in range(p):
        for b in range(q):
            edges.append(
                Edge(f"{prefix}ea{a}_{b}", grid_vertex(a, b, prefix), grid_vertex((a + 1) % p, b, prefix))
            )
            edges.append(
                Edge(f"{prefix}eb{a}_{b}", grid_vertex(a, b, prefix), grid_vertex(a, (b + 1) % q, prefix))
            )
    g = WeightedMultigraph(vertices, edges)
    rot = {}
    for a in range(p):
        for b in range(q):
            rot[grid_vertex(a, b, prefix)] = (
                f"{prefix}ea{a}_{b}",                    # a+
                f"{prefix}eb{a}_{b}",                    # b+
                f"{prefix}ea{(a - 1) % p}_{b}",          # a-
                f"{prefix}eb{a}_{(b - 1) % q}",          # b-
            )
    return g, RotationSystem(g, rot)


def gadget_dimensions(index: int, genus: int) -> tuple[int, int]:
    """Grid dimensions (g, q) of handle gadget `index` at surface genus `genus`."""
    if not (1 <= index <= genus):
        raise ValidationError(f"gadget index must satisfy 1 <= i <= h, got i={index}, h={genus}")
    return 5 + index, genus + 6


def insert_after(order: tuple[str, ...], after: str, new: str) -> tuple[str, ...]:
    """Insert `new` immediately after `after` in a cyclic tuple."""
    if after not in order:
        raise ValidationError(f"cannot insert after unknown edge {after!r}")
    i = order.index(after)
    return order[: i + 1] + (new,) + order[i + 1 :]


def splice_torus_part(
    vertices: list[str],
    edges: list[Edge],
    rot: dict[str, tuple[str, ...]],
    ring: list[str],
    ring_prev_edge: dict[str, str],
    index: int,
    genus: int,
    prefix: str,
) -> tuple[list[str], list[str]]:
    """Add the capped handle interior behind an existing attachment ring.

    `ring` lists the attachment cycle in its disk-face walk direction;
    `ring_prev_edge[v]` is the ring edge arriving at v in that direction.
    The grid, its two-edge deletion and the four connectors are appended to
    the builder state in place; each connector is spliced into its ring
    vertex's rotation directly after the arriving ring edge, which points it
    into the disk face. Returns (grid vertex names, connector edge ids).
    """
    g_dim, q_dim = gadget_dimensions(index, genus)
    if len(ring) < 4:
        raise ValidationError("attachment ring needs at least four vertices")

    grid, grid_rot = toroidal_grid(g_dim, q_dim, prefix)
    deleted = {f"{prefix}eb0_0", f"{prefix}eb1_0"}
    vertices.extend(grid.vertices)
    for e in grid.edges:
        if e.id not in deleted:
            edges.append(e)
    for v in grid.vertices:
        order = tuple(eid for eid in grid_rot.rotation(v) if eid not in deleted)
        rot[v] = order

    # degree-3 endpoints of the deleted rungs, in the order the disk-face walk
    # of the attachment ring must meet them (see module docstring)
    u = [
        grid_vertex(0, 0, prefix),
        grid_vertex(1, 0, prefix),
        grid_vertex(1, 1, prefix),
        grid_vertex(0, 1, prefix),
    ]
    length = len(ring)
    slots = [(m * length) // 4 for m in range(4)]
    connector_ids: list[str] = []
    for m in range(4):
        conn = f"{prefix}cn{m + 1}"
        connector_ids.append(conn)
        anchor_vertex = ring[slots[m]]
        edges.append(Edge(conn, u[m], anchor_vertex))
        # grid side: the connector takes the vacated slot of the deleted rung
        if m == 0:
            rot[u[0]] = (f"{prefix}ea0_0", conn, f"{prefix}ea{g_dim - 1}_0", f"{prefix}eb0_{q_dim - 1}")
        elif m == 1:
            rot[u[1]] = (f"{prefix}ea1_0", conn, f"{prefix}ea0_0", f"{prefix}eb1_{q_dim - 1}")
        elif m == 2:
            rot[u[2]] = (f"{prefix}ea1_1", f"{prefix}eb1_1", f"{prefix}ea0_1", conn)
        else:
            rot[u[3]] = (f"{prefix}ea0_1", f"{prefix}eb0_1", f"{prefix}ea{g_dim - 1}_1", conn)
        # ring side: splice after the arriving ring edge
        rot[anchor_vertex] = insert_after(rot[anchor_vertex], ring_prev_edge[anchor_vertex], conn)
    return list(grid.vertices), connector_ids


@dataclass
class HandleGadget:
    graph: WeightedMultigraph
    rotation: RotationSystem
    grid_vertices: tuple[str, ...]
    ring_vertices: tuple[str, ...]
    connector_edges: tuple[str, ...]
    index: int
    genus: int


def torus_gadget(index: int, genus: int) -> HandleGadget:
    """The standalone capped handle gadget with a fresh 4-cycle attachment ring."""
    ring = [f"c{j}" for j in range(4)]
    ring_edges = [Edge(f"ce{j}", ring[j], ring[(j + 1) % 4]) for j in range(4)]
    vertices = list(ring)
    edges = list(ring_edges)
    rot: dict[str, tuple[str, ...]] = {}
    ring_prev: dict[str, str] = {}
    for j in range(4):
        # disk-face direction is increasing index: arrive via ce_{j-1}, leave via ce_j
        rot[ring[j]] = (f"ce{(j - 1) % 4}", f"ce{j}")
        ring_prev[ring[j]] = f"ce{(j - 1) % 4}"
    grid_vs, conns = splice_torus_part(
        vertices, edges, rot, ring, ring_prev, index, genus, prefix=""
    )
    g = WeightedMultigraph(vertices, edges)
    return HandleGadget(
        graph=g,
        rotation=RotationSystem(g, rot),
        grid_vertices=tuple(grid_vs),
        ring_vertices=tuple(ring),
        connector_edges=tuple(conns),
        index=index,
        genus=genus,
    )


@dataclass
class WedgeGadget:
    graph: WeightedMultigraph
    rotation: RotationSystem
    attach_vertex: str
    heavy_weight: int


def l_gadget(heavy_weight: int, prefix: str = "") -> WedgeGadget:
    """K33 with two unit edges at a shared endpoint, seven heavy edges.

    The aligned rotation (every left vertex reads the right part in the same
    cyclic order and vice versa) yields three hexagonal faces: genus 1.
    """
    if heavy_weight < 1:
        raise ValidationError("heavy weight must be positive")
    left = [f"{prefix}lu{i}" for i in range(3)]
    right = [f"{prefix}lv{j}" for j in range(3)]
    edges = []
    for i in range(3):
        for j in range(3):
            w = 1 if (i, j) in ((0, 0), (0, 1)) else heavy_weight
            edges.append(Edge(f"{prefix}le{i}{j}", left[i], right[j], w))
    g = WeightedMultigraph(left + right, edges)
    rot = {}
    for i in range(3):
        rot[left[i]] = tuple(f"{prefix}le{i}{j}" for j in range(3))
    for j in range(3):
        rot[right[j]] = tuple(f"{prefix}le{i}{j}" for i in range(3))
    return WedgeGadget(
        graph=g,
        rotation=RotationSystem(g, rot),
        attach_vertex=f"{prefix}lu1",
        heavy_weight=heavy_weight,
    )
