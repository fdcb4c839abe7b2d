"""Instance types for the three problems the reductions connect.

AnchoredInstance   two planar graphs drawn in a disk with chosen boundary
                   vertices (anchors) interleaved along the boundary circle in
                   a prescribed cyclic order sigma; the second graph's anchors
                   carry a 4-partition. Crossings happen between the graphs.
FaJointInstance    the face-anchored joint planarity/crossing problem: g1 and
                   g2 each planar, plus anchors (C, a): in a joint drawing the
                   g2-vertex a must lie in a g1-face bounded by the cycle C.
SurfaceJointInstance  both graphs together with rotation systems of a common
                   genus h; the question is joint crossings in that surface.

Validation here is eager: an instance that violates its structural promises
raises ValidationError at construction. Expensive embedding certificates are
only computed when no promise embedding is supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import WeightedMultigraph, simple_cycle_in_graph
from .planarity import (
    boundary_face_with_order,
    is_planar,
    rotation_with_facial_cycles,
)
from .receipts import CompositeReceipt, ReductionReceipt
from .rotations import EmbeddingError, RotationSystem, euler_genus, genus_by_component


class ValidationError(ValueError):
    """Instance data breaks a structural promise."""


def _check_promise_planar(
    g: WeightedMultigraph, rs: RotationSystem | None, side: str
) -> None:
    if rs is None:
        return
    if rs.graph != g:
        raise ValidationError(f"promise embedding of {side} is for a different graph")
    for comp, h in genus_by_component(rs).items():
        if h != 0:
            raise ValidationError(
                f"promise embedding of {side} has genus {h} on a component"
            )


@dataclass(frozen=True)
class GraphBundle:
    """A bare graph with an optional rotation system; the payload of gadget
    generator output files (grids, torus gadgets...)."""

    graph: WeightedMultigraph
    rotation: RotationSystem | None = None
    name: str = "g"

    def __post_init__(self) -> None:
        if self.rotation is not None and self.rotation.graph != self.graph:
            raise ValidationError("bundle rotation is for a different graph")


@dataclass(frozen=True)
class FaceAnchor:
    """Anchor (C, a): cycle C in g1 (vertex sequence), vertex a of g2."""

    cycle: tuple[str, ...]
    vertex: str

    def __post_init__(self) -> None:
        if len(self.cycle) < 3:
            raise ValidationError("anchor cycles need at least three vertices")


@dataclass(frozen=True)
class FaJointInstance:
    g1: WeightedMultigraph
    g2: WeightedMultigraph
    anchors: tuple[FaceAnchor, ...]
    promise1: RotationSystem | None = None
    promise2: RotationSystem | None = None
    name1: str = "g1"
    name2: str = "g2"

    def __post_init__(self) -> None:
        if not self.g1.is_connected():
            raise ValidationError("g1 must be connected")
        for anchor in self.anchors:
            if not simple_cycle_in_graph(self.g1, anchor.cycle):
                raise ValidationError(
                    f"anchor cycle {anchor.cycle} is not a simple cycle of g1"
                )
            if anchor.vertex not in self.g2:
                raise ValidationError(f"anchored vertex {anchor.vertex!r} not in g2")
        seen = [a.vertex for a in self.anchors]
        if len(set(seen)) != len(seen):
            raise ValidationError("anchored vertices must be distinct")
        _check_promise_planar(self.g1, self.promise1, "g1")
        _check_promise_planar(self.g2, self.promise2, "g2")
        ok2, _ = is_planar(self.g2)
        if not ok2:
            raise ValidationError("g2 is not planar")
        # g1 must admit one planar embedding with every anchor cycle facial;
        # with a promise this is a direct check, otherwise a certificate is
        # searched (raises for large promise-less graphs, by design).
        try:
            rotation_with_facial_cycles(
                self.g1, [a.cycle for a in self.anchors], self.promise1
            )
        except EmbeddingError as exc:
            raise ValidationError(f"anchor cycles not simultaneously facial: {exc}") from exc

    def anchor_cycles(self) -> list[tuple[str, ...]]:
        return [a.cycle for a in self.anchors]


@dataclass(frozen=True)
class AnchoredInstance:
    g1: WeightedMultigraph
    g2: WeightedMultigraph
    a1: tuple[str, ...]
    a2_groups: tuple[tuple[str, ...], ...]  # four groups
    sigma: tuple[str, ...]  # cyclic order of a1 + all a2 members
    promise1: RotationSystem | None = None
    promise2: RotationSystem | None = None
    name1: str = "g1"
    name2: str = "g2"

    def __post_init__(self) -> None:
        for side, g in (("g1", self.g1), ("g2", self.g2)):
            if not g.is_connected():
                raise ValidationError(f"{side} must be connected")
            ok, _ = is_planar(g)
            if not ok:
                raise ValidationError(f"{side} is not planar")
        if len(self.a2_groups) != 4:
            raise ValidationError("a2 must come as exactly four groups")
        if not self.a1:
            raise ValidationError("a1 must be non-empty")
        a2 = [v for grp in self.a2_groups for v in grp]
        if not a2:
            raise ValidationError("a2 must be non-empty")
        if len(set(self.a1)) != len(self.a1) or any(v not in self.g1 for v in self.a1):
            raise ValidationError("a1 must be distinct vertices of g1")
        if len(set(a2)) != len(a2) or any(v not in self.g2 for v in a2):
            raise ValidationError("a2 groups must be disjoint vertices of g2")
        if set(self.a1) & set(a2):
            raise ValidationError(
                "anchor names must not collide between g1 and g2 "
                "(the boundary order could not name them apart)"
            )
        if sorted(self.sigma) != sorted(self.a1 + tuple(a2)):
            raise ValidationError("sigma must list each anchor exactly once")
        # each group must be cyclically consecutive within sigma restricted to a2
        group_of = {v: i for i, grp in enumerate(self.a2_groups) for v in grp}
        ring = [group_of[v] for v in self.sigma if v in group_of]
        n = len(ring)
        for gi in range(4):
            positions = [i for i, val in enumerate(ring) if val == gi]
            if not positions:
                continue
            # contiguous on a cycle iff the complement positions are contiguous
            block = len(positions)
            ok = any(
                all(ring[(start + off) % n] == gi for off in range(block))
                for start in positions
            )
            if not ok:
                raise ValidationError(
                    f"group {gi + 1} is not consecutive along the boundary order"
                )
        _check_promise_planar(self.g1, self.promise1, "g1")
        _check_promise_planar(self.g2, self.promise2, "g2")
        if self.promise1 is not None and boundary_face_with_order(
            self.promise1, self.sigma_restricted(self.a1)
        ) is None:
            raise ValidationError(
                "g1 promise embedding has no face carrying a1 in boundary order"
            )
        if self.promise2 is not None and boundary_face_with_order(
            self.promise2, self.sigma_restricted(a2)
        ) is None:
            raise ValidationError(
                "g2 promise embedding has no face carrying a2 in boundary order"
            )

    def a2_all(self) -> tuple[str, ...]:
        return tuple(v for grp in self.a2_groups for v in grp)

    def sigma_restricted(self, members: Sequence[str]) -> tuple[str, ...]:
        keep = set(members)
        return tuple(v for v in self.sigma if v in keep)


@dataclass(frozen=True)
class SurfaceJointInstance:
    g1: WeightedMultigraph
    g2: WeightedMultigraph
    rot1: RotationSystem
    rot2: RotationSystem
    h: int
    receipt: ReductionReceipt | CompositeReceipt | None = None
    name1: str = "g1"
    name2: str = "g2"

    def __post_init__(self) -> None:
        if self.h < 0:
            raise ValidationError("genus must be non-negative")
        for side, g, rs in (("g1", self.g1, self.rot1), ("g2", self.g2, self.rot2)):
            if rs.graph != g:
                raise ValidationError(f"rotation of {side} is for a different graph")
            if not g.is_connected():
                raise ValidationError(f"{side} must be connected to live on one surface")
        if self.h1 > self.h or self.h2 > self.h:
            raise ValidationError(
                f"embedding genus ({self.h1}, {self.h2}) exceeds the declared surface genus {self.h}"
            )

    @property
    def h1(self) -> int:
        return euler_genus(self.rot1)

    @property
    def h2(self) -> int:
        return euler_genus(self.rot2)
