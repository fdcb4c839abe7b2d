"""Plain-text instance files.

One line-oriented format covers all four instance kinds. Sections start
with a bracketed header; within a section each line is a single record.

    format = jointcross-instance 1

    [graph <name>]            one or two blocks; first block is g1
    vertex <v>
    edge <id> <u> <v> <weight>

    [promise-embedding <name>]  clockwise rotations, one line per vertex
    rot <v> = <edge id> ...     (required for surface instances, where it
                                 is the embedding rather than a promise)

    [anchors]                   face-anchored instances, order significant
    anchor <g2 vertex> = <cycle vertex> ...

    [boundary]                  anchored instances
    a1 = <v> ...
    sigma = <v> ...

    [partition]                 anchored instances
    group1 = <v> ...            (through group4; a group may be empty)

    [surface]                   surface instances
    genus = <h>

The kind is inferred from the sections present: [surface] wins, then
[boundary]/[partition], then [anchors]; a single bare graph block is a
graph bundle. Blank lines and whole-line # comments are skipped on parse.
`serialize_instance` emits a canonical form (no comments, fixed section
order, stored vertex/edge order), so parse -> serialize is byte-stable.
Receipts are not part of instance files; they live in sidecar files
handled by the receipts module, and a surface instance's receipt field is
dropped on serialization.

All integers are decimal and arbitrary precision; the chain's weights
overflow 64-bit types quickly, which is why the format never goes binary.
"""

from __future__ import annotations

from .graphs import Edge, GraphError, WeightedMultigraph
from .instances import (
    AnchoredInstance,
    FaceAnchor,
    FaJointInstance,
    GraphBundle,
    SurfaceJointInstance,
    ValidationError,
)
from .rotations import RotationSystem

FORMAT_LINE = "format = jointcross-instance 1"

Instance = GraphBundle | FaJointInstance | AnchoredInstance | SurfaceJointInstance


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _check_token(token: str, what: str) -> str:
    if not token or any(c.isspace() for c in token) or "=" in token or "[" in token:
        raise ValidationError(f"{what} {token!r} cannot be written to a file")
    return token


# ---------------------------------------------------------------------------
# serialization


def _graph_lines(name: str, g: WeightedMultigraph) -> list[str]:
    out = [f"[graph {_check_token(name, 'graph name')}]"]
    for v in g.vertices:
        out.append(f"vertex {_check_token(v, 'vertex name')}")
    for e in g.edges:
        _check_token(e.id, "edge id")
        out.append(f"edge {e.id} {e.u} {e.v} {e.weight}")
    return out


def _rotation_lines(name: str, g: WeightedMultigraph, rs: RotationSystem) -> list[str]:
    out = [f"[promise-embedding {name}]"]
    for v in g.vertices:
        out.append(f"rot {v} = {' '.join(rs.rotation(v))}".rstrip())
    return out


def serialize_instance(inst: Instance) -> str:
    lines = [FORMAT_LINE, ""]
    if isinstance(inst, GraphBundle):
        lines += _graph_lines(inst.name, inst.graph)
        if inst.rotation is not None:
            lines.append("")
            lines += _rotation_lines(inst.name, inst.graph, inst.rotation)
        return "\n".join(lines) + "\n"

    if isinstance(inst, SurfaceJointInstance):
        name1, name2 = inst.name1, inst.name2
        if name1 == name2:
            raise ValidationError("the two graphs need distinct names in a file")
        lines += _graph_lines(name1, inst.g1)
        lines.append("")
        lines += _graph_lines(name2, inst.g2)
        lines.append("")
        lines += _rotation_lines(name1, inst.g1, inst.rot1)
        lines.append("")
        lines += _rotation_lines(name2, inst.g2, inst.rot2)
        lines += ["", "[surface]", f"genus = {inst.h}"]
        return "\n".join(lines) + "\n"

    if isinstance(inst, FaJointInstance):
        name1, name2 = inst.name1, inst.name2
        if name1 == name2:
            raise ValidationError("the two graphs need distinct names in a file")
        lines += _graph_lines(name1, inst.g1)
        lines.append("")
        lines += _graph_lines(name2, inst.g2)
        for name, g, rs in (
            (name1, inst.g1, inst.promise1),
            (name2, inst.g2, inst.promise2),
        ):
            if rs is not None:
                lines.append("")
                lines += _rotation_lines(name, g, rs)
        lines += ["", "[anchors]"]
        for a in inst.anchors:
            lines.append(f"anchor {a.vertex} = {' '.join(a.cycle)}")
        return "\n".join(lines) + "\n"

    if isinstance(inst, AnchoredInstance):
        name1, name2 = inst.name1, inst.name2
        if name1 == name2:
            raise ValidationError("the two graphs need distinct names in a file")
        lines += _graph_lines(name1, inst.g1)
        lines.append("")
        lines += _graph_lines(name2, inst.g2)
        for name, g, rs in (
            (name1, inst.g1, inst.promise1),
            (name2, inst.g2, inst.promise2),
        ):
            if rs is not None:
                lines.append("")
                lines += _rotation_lines(name, g, rs)
        lines += [
            "",
            "[boundary]",
            f"a1 = {' '.join(inst.a1)}",
            f"sigma = {' '.join(inst.sigma)}",
            "",
            "[partition]",
        ]
        for i, grp in enumerate(inst.a2_groups, start=1):
            lines.append(f"group{i} = {' '.join(grp)}".rstrip())
        return "\n".join(lines) + "\n"

    raise ValidationError(f"cannot serialize {type(inst).__name__}")


# ---------------------------------------------------------------------------
# parsing


class _Sections:
    def __init__(self) -> None:
        self.graphs: list[tuple[str, list[str], list[Edge], int]] = []
        self.rotations: dict[str, tuple[dict[str, tuple[str, ...]], int]] = {}
        self.anchors: list[FaceAnchor] | None = None
        self.boundary: dict[str, tuple[str, ...]] | None = None
        self.partition: dict[str, tuple[str, ...]] | None = None
        self.genus: int | None = None


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"{what} must be a decimal integer, got {token!r}")


def _split_record(line: str, lineno: int) -> tuple[str, list[str]]:
    """Split 'key name = a b c' records into (left tokens, right tokens)."""
    if "=" not in line:
        raise ParseError(lineno, f"expected 'lhs = rhs', got {line!r}")
    left, right = line.split("=", 1)
    return left.strip(), right.split()


def parse_instance(text: str) -> Instance:
    sec = _Sections()
    current: str | None = None
    current_name = ""
    saw_format = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not saw_format:
            if line != FORMAT_LINE:
                raise ParseError(lineno, f"first line must be {FORMAT_LINE!r}")
            saw_format = True
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError(lineno, "unterminated section header")
            header = line[1:-1].split()
            if not header:
                raise ParseError(lineno, "empty section header")
            current = header[0]
            if current == "graph":
                if len(header) != 2:
                    raise ParseError(lineno, "graph header needs exactly one name")
                current_name = header[1]
                if any(n == current_name for n, _, _, _ in sec.graphs):
                    raise ParseError(lineno, f"duplicate graph name {current_name!r}")
                sec.graphs.append((current_name, [], [], lineno))
            elif current == "promise-embedding":
                if len(header) != 2:
                    raise ParseError(lineno, "promise-embedding header needs a graph name")
                current_name = header[1]
                if current_name in sec.rotations:
                    raise ParseError(lineno, f"duplicate rotations for {current_name!r}")
                sec.rotations[current_name] = ({}, lineno)
            elif current == "anchors":
                if sec.anchors is not None:
                    raise ParseError(lineno, "duplicate [anchors] section")
                sec.anchors = []
            elif current == "boundary":
                if sec.boundary is not None:
                    raise ParseError(lineno, "duplicate [boundary] section")
                sec.boundary = {}
            elif current == "partition":
                if sec.partition is not None:
                    raise ParseError(lineno, "duplicate [partition] section")
                sec.partition = {}
            elif current == "surface":
                pass
            else:
                raise ParseError(lineno, f"unknown section {current!r}")
            continue
        if current is None:
            raise ParseError(lineno, f"record outside any section: {line!r}")

        if current == "graph":
            tokens = line.split()
            _, vertices, edges, _ = sec.graphs[-1]
            if tokens[0] == "vertex" and len(tokens) == 2:
                vertices.append(tokens[1])
            elif tokens[0] == "edge" and len(tokens) == 5:
                w = _parse_int(tokens[4], lineno, "edge weight")
                edges.append(Edge(tokens[1], tokens[2], tokens[3], w))
            else:
                raise ParseError(lineno, f"expected 'vertex v' or 'edge id u v w', got {line!r}")
        elif current == "promise-embedding":
            left, right = _split_record(line, lineno)
            parts = left.split()
            if len(parts) != 2 or parts[0] != "rot":
                raise ParseError(lineno, f"expected 'rot v = e ...', got {line!r}")
            rot_map, _ = sec.rotations[current_name]
            if parts[1] in rot_map:
                raise ParseError(lineno, f"duplicate rotation for vertex {parts[1]!r}")
            rot_map[parts[1]] = tuple(right)
        elif current == "anchors":
            left, right = _split_record(line, lineno)
            parts = left.split()
            if len(parts) != 2 or parts[0] != "anchor":
                raise ParseError(lineno, f"expected 'anchor v = c1 c2 ...', got {line!r}")
            if len(right) < 3:
                raise ParseError(lineno, "anchor cycles need at least three vertices")
            assert sec.anchors is not None
            sec.anchors.append(FaceAnchor(tuple(right), parts[1]))
        elif current == "boundary":
            left, right = _split_record(line, lineno)
            if left not in ("a1", "sigma"):
                raise ParseError(lineno, f"boundary records are 'a1' and 'sigma', got {left!r}")
            assert sec.boundary is not None
            if left in sec.boundary:
                raise ParseError(lineno, f"duplicate boundary record {left!r}")
            sec.boundary[left] = tuple(right)
        elif current == "partition":
            left, right = _split_record(line, lineno)
            if left not in ("group1", "group2", "group3", "group4"):
                raise ParseError(lineno, f"partition records are group1..group4, got {left!r}")
            assert sec.partition is not None
            if left in sec.partition:
                raise ParseError(lineno, f"duplicate partition record {left!r}")
            sec.partition[left] = tuple(right)
        elif current == "surface":
            left, right = _split_record(line, lineno)
            if left != "genus" or len(right) != 1:
                raise ParseError(lineno, f"expected 'genus = h', got {line!r}")
            sec.genus = _parse_int(right[0], lineno, "genus")
        else:  # pragma: no cover - section list is closed above
            raise ParseError(lineno, f"unhandled section {current!r}")

    if not saw_format:
        raise ParseError(1, f"empty input; first line must be {FORMAT_LINE!r}")
    return _assemble(sec)


def _build_graph(name: str, vertices: list[str], edges: list[Edge], lineno: int) -> WeightedMultigraph:
    try:
        return WeightedMultigraph(vertices, edges)
    except GraphError as exc:
        raise ParseError(lineno, f"graph {name!r}: {exc}") from exc


def _rotation_for(
    sec: _Sections, name: str, g: WeightedMultigraph
) -> RotationSystem | None:
    if name not in sec.rotations:
        return None
    rot_map, lineno = sec.rotations.pop(name)
    try:
        return RotationSystem(g, rot_map)
    except Exception as exc:
        raise ParseError(lineno, f"rotations for {name!r}: {exc}") from exc


def _assemble(sec: _Sections) -> Instance:
    if not sec.graphs:
        raise ParseError(1, "no [graph] section")
    built = [
        (name, _build_graph(name, vs, es, ln)) for name, vs, es, ln in sec.graphs
    ]

    is_surface = sec.genus is not None
    is_anchored = sec.boundary is not None or sec.partition is not None
    is_fa = sec.anchors is not None
    if sum((is_surface, is_anchored, is_fa)) > 1:
        raise ParseError(1, "sections mix more than one instance kind")

    if is_surface or is_anchored or is_fa:
        if len(built) != 2:
            raise ParseError(1, "this instance kind needs exactly two graph blocks")
        (name1, g1), (name2, g2) = built
        rot1 = _rotation_for(sec, name1, g1)
        rot2 = _rotation_for(sec, name2, g2)
        if sec.rotations:
            extra = sorted(sec.rotations)
            raise ParseError(
                sec.rotations[extra[0]][1],
                f"promise-embedding for unknown graph {extra[0]!r}",
            )
        try:
            if is_surface:
                assert sec.genus is not None
                if rot1 is None or rot2 is None:
                    raise ParseError(1, "surface instances need both embeddings")
                return SurfaceJointInstance(
                    g1, g2, rot1, rot2, sec.genus, name1=name1, name2=name2
                )
            if is_anchored:
                if sec.boundary is None or sec.partition is None:
                    raise ParseError(
                        1, "anchored instances need both [boundary] and [partition]"
                    )
                for key in ("a1", "sigma"):
                    if key not in sec.boundary:
                        raise ParseError(1, f"[boundary] is missing {key!r}")
                groups = tuple(
                    sec.partition.get(f"group{i}", ()) for i in range(1, 5)
                )
                return AnchoredInstance(
                    g1,
                    g2,
                    a1=sec.boundary["a1"],
                    a2_groups=groups,
                    sigma=sec.boundary["sigma"],
                    promise1=rot1,
                    promise2=rot2,
                    name1=name1,
                    name2=name2,
                )
            assert sec.anchors is not None
            return FaJointInstance(
                g1,
                g2,
                tuple(sec.anchors),
                promise1=rot1,
                promise2=rot2,
                name1=name1,
                name2=name2,
            )
        except ValidationError as exc:
            raise ParseError(1, f"instance validation failed: {exc}") from exc

    if len(built) != 1:
        raise ParseError(
            1, "two graph blocks but no anchors/boundary/surface section"
        )
    name, g = built[0]
    rot = _rotation_for(sec, name, g)
    if sec.rotations:
        extra = sorted(sec.rotations)
        raise ParseError(
            sec.rotations[extra[0]][1],
            f"promise-embedding for unknown graph {extra[0]!r}",
        )
    return GraphBundle(g, rot, name=name)


# ---------------------------------------------------------------------------
# graphviz export


def _dot_graph_body(g: WeightedMultigraph, indent: str) -> list[str]:
    out = []
    for v in g.vertices:
        out.append(f'{indent}"{v}";')
    for e in g.edges:
        label = f' [label="{e.weight}"]' if e.weight != 1 else ""
        out.append(f'{indent}"{e.u}" -- "{e.v}"{label};')
    return out


def to_dot(inst: Instance) -> str:
    """Graphviz text for an instance: one graph, or two clustered graphs."""
    if isinstance(inst, GraphBundle):
        lines = [f'graph "{inst.name}" {{']
        lines += _dot_graph_body(inst.graph, "  ")
        lines.append("}")
        return "\n".join(lines) + "\n"
    pairs = (
        (inst.name1, inst.g1),
        (inst.name2, inst.g2),
    )
    lines = ['graph "joint" {']
    for name, g in pairs:
        lines.append(f'  subgraph "cluster_{name}" {{')
        lines.append(f'    label = "{name}";')
        lines += _dot_graph_body(g, "    ")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
