"""Command-line front end.

Subcommands map one-to-one onto library operation families:

    gen         grid | fkt | fplus | torus-gadget | l-gadget
    reduce      weights | 3conn | fa2surface | anchored2fa6 | full
    verify      counts | cuts | genus | edge-width | a2 | ordering
    oracle      brute-force optimum on a face-anchored instance file
    export-dot  graphviz text for any instance file

Exit codes: 0 success, 1 validation or verification failure, 2 usage error.
Outputs are canonical serializations, so identical invocations on identical
inputs produce byte-identical artifacts; the one run-dependent output is the
elapsed-milliseconds field of the oracle report line, which the oracle
module's report contract includes. All integers print in decimal.

Flags are long-form; `--out` additionally accepts `-o` so the documented
one-line examples work verbatim. Every subcommand takes `--check`, which
re-validates the command's own output (round-trip stability, genus and
receipt invariants, witness cost agreement) before it returns.
"""

from __future__ import annotations

import argparse
import sys
from itertools import permutations
from random import Random

from .edgewidth import dual_edge_width_torus
from .fileformat import Instance, ParseError, parse_instance, serialize_instance, to_dot
from .formulas import (
    FormulaError,
    beta,
    beta_sum,
    canonical_fa_count,
    canonical_fa_count_sum,
    canonical_fplus_count,
    canonical_fplus_count_sum,
    gamma,
    gamma_sum,
    min_pair_gap,
    ordering_gap,
)
from .gadgets import build_fa_instance, build_f2, mirror_join
from .graphs import GraphError
from .instances import (
    AnchoredInstance,
    FaJointInstance,
    GraphBundle,
    SurfaceJointInstance,
    ValidationError,
)
from .oracle import (
    OracleCaps,
    OracleInputError,
    fa_joint_planar_oracle,
    oracle_report_line,
    witness_count,
)
from .planarity import is_planar, min_cut_weight
from .receipts import (
    CompositeReceipt,
    ReceiptError,
    ReductionReceipt,
    receipt_to_text,
    recover_s,
    target_value,
)
from .reductions import (
    PipelineOptions,
    anchored_to_fa6,
    expand_weights,
    fa_to_surface,
    full_pipeline,
    three_connectify,
    validate_a2,
)
from .rotations import EmbeddingError, euler_genus
from .torus import l_gadget, toroidal_grid, torus_gadget

_HANDLED = (
    ValidationError,
    ParseError,
    GraphError,
    EmbeddingError,
    OracleInputError,
    FormulaError,
    ReceiptError,
    OSError,
)


class CheckFailure(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# plumbing


def _read_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _write_text(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _summarize(inst: Instance) -> str:
    if isinstance(inst, GraphBundle):
        return (
            f"graph {inst.name}: {inst.graph.n_vertices} vertices, "
            f"{inst.graph.n_edges} edges"
        )
    kind = {
        FaJointInstance: "face-anchored",
        AnchoredInstance: "anchored",
        SurfaceJointInstance: "surface",
    }[type(inst)]
    extra = ""
    if isinstance(inst, FaJointInstance):
        extra = f", {len(inst.anchors)} anchors"
    if isinstance(inst, SurfaceJointInstance):
        extra = f", genus {inst.h}"
    return (
        f"{kind}: g1 {inst.g1.n_vertices}/{inst.g1.n_edges}, "
        f"g2 {inst.g2.n_vertices}/{inst.g2.n_edges}{extra}"
    )


def _check_roundtrip(inst: Instance) -> str:
    text = serialize_instance(inst)
    again = serialize_instance(parse_instance(text))
    if text != again:
        raise CheckFailure("serialized instance does not round-trip byte-stably")
    return text


def _emit_instance(inst: Instance, out: str | None, check: bool) -> None:
    text = _check_roundtrip(inst) if check else serialize_instance(inst)
    _write_text(text, out)
    if out is not None:
        print(f"wrote {out}: {_summarize(inst)}")


def _check_receipt(receipt: ReductionReceipt | CompositeReceipt) -> None:
    receipt.validate()
    for s in (0, 5):
        if recover_s(target_value(receipt, s), receipt) != s:
            raise CheckFailure(f"receipt does not recover s = {s}")


# ---------------------------------------------------------------------------
# gen


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.generator == "grid":
        graph, rot = toroidal_grid(args.p, args.q, prefix=args.prefix)
        bundle = GraphBundle(graph, rot, name=f"grid{args.p}x{args.q}")
        if args.check and euler_genus(rot) != 1:
            raise CheckFailure("toroidal grid rotation is not genus 1")
        _emit_instance(bundle, args.out, args.check)
        return 0
    if args.generator == "fkt":
        inst = build_fa_instance(args.k, args.T).instance
        _emit_instance(inst, args.out, args.check)
        return 0
    if args.generator == "fplus":
        inst = mirror_join(build_fa_instance(args.k, args.T)).instance
        if args.check and len(inst.anchors) != 6:
            raise CheckFailure("mirrored gadget does not carry six anchors")
        _emit_instance(inst, args.out, args.check)
        return 0
    if args.generator == "torus-gadget":
        gadget = torus_gadget(args.index, args.genus)
        if args.check:
            if euler_genus(gadget.rotation) != 1:
                raise CheckFailure("torus gadget rotation is not genus 1")
            ok, _ = is_planar(
                gadget.graph.induced_subgraph(
                    [v for v in gadget.graph.vertices if v not in gadget.ring_vertices]
                )
            )
            if ok:
                raise CheckFailure("torus gadget core minus ring is planar")
        bundle = GraphBundle(
            gadget.graph, gadget.rotation, name=f"torus-gadget{args.index}of{args.genus}"
        )
        _emit_instance(bundle, args.out, args.check)
        return 0
    if args.generator == "l-gadget":
        wedge = l_gadget(args.heavy, prefix=args.prefix)
        if args.check:
            if euler_genus(wedge.rotation) != 1:
                raise CheckFailure("wedge rotation is not genus 1")
            ok, _ = is_planar(wedge.graph)
            if ok:
                raise CheckFailure("wedge graph is planar; it must contain K33")
        bundle = GraphBundle(wedge.graph, wedge.rotation, name="l-gadget")
        _emit_instance(bundle, args.out, args.check)
        return 0
    raise AssertionError(args.generator)


# ---------------------------------------------------------------------------
# reduce


def _cmd_reduce(args: argparse.Namespace) -> int:
    inst = _read_instance(args.infile)
    receipt: ReductionReceipt | CompositeReceipt
    if args.stage == "weights":
        out, receipt = expand_weights(
            inst, preserve_simple_3conn=args.subdivide, unary_bound=args.unary_bound
        )
    elif args.stage == "3conn":
        if not isinstance(inst, SurfaceJointInstance):
            raise ValidationError("reduce 3conn expects a surface instance file")
        out, receipt = three_connectify(inst)
    elif args.stage == "fa2surface":
        if not isinstance(inst, FaJointInstance):
            raise ValidationError("reduce fa2surface expects a face-anchored instance file")
        out, receipt = fa_to_surface(inst)
    elif args.stage == "anchored2fa6":
        if not isinstance(inst, AnchoredInstance):
            raise ValidationError("reduce anchored2fa6 expects an anchored instance file")
        out, receipt = anchored_to_fa6(inst)
    elif args.stage == "full":
        if not isinstance(inst, AnchoredInstance):
            raise ValidationError("reduce full expects an anchored instance file")
        opts = PipelineOptions(
            h=args.genus, expand_mode=args.expand_mode, unary_bound=args.unary_bound
        )
        out, receipt = full_pipeline(inst, opts)
    else:
        raise AssertionError(args.stage)

    if args.check:
        _check_receipt(receipt)
    _emit_instance(out, args.out, args.check)
    if args.receipt is not None:
        _write_text(receipt_to_text(receipt), args.receipt)
        print(f"receipt: {args.receipt}")
    return 0


# ---------------------------------------------------------------------------
# verify


def _verify_counts(args: argparse.Namespace) -> int:
    k, big_t = args.k, args.T
    rows = (
        ("gamma", f"({k})", gamma(k), gamma_sum(k)),
        ("beta", f"({k},{big_t})", beta(k, big_t), beta_sum(k, big_t)),
        (
            "canonical_fa_count",
            f"({k},{big_t})",
            canonical_fa_count(k, big_t),
            canonical_fa_count_sum(k, big_t),
        ),
        (
            "canonical_fplus_count",
            f"({k},{big_t})",
            canonical_fplus_count(k, big_t),
            canonical_fplus_count_sum(k, big_t),
        ),
    )
    bad = 0
    for name, arg_text, closed, summed in rows:
        status = "ok" if closed == summed else f"MISMATCH (summation {summed})"
        print(f"{name}{arg_text} = {closed}  [closed form == summation: {status}]")
        bad += closed != summed
    return 1 if bad else 0


def _verify_cuts(args: argparse.Namespace) -> int:
    k = args.k
    g, _, _, _ = build_f2(k)
    names = ("a1", "a2", "a3", "a4")
    expected = {
        "a1": k**3 + k * (k + 1) // 2,
        "a2": k**3,
        "a3": k**3,
        "a4": k**3 + k * (k + 1) // 2,
    }
    bad = 0
    for a in names:
        others = tuple(x for x in names if x != a)
        cut = min_cut_weight(g, (a,), others)
        status = "ok" if cut == expected[a] else f"MISMATCH (expected {expected[a]})"
        print(f"mincut({a} | rest) = {cut}  [{status}]")
        bad += cut != expected[a]
    return 1 if bad else 0


def _verify_genus(args: argparse.Namespace) -> int:
    inst = _read_instance(args.infile)
    if isinstance(inst, GraphBundle):
        if inst.rotation is None:
            raise ValidationError("the graph file carries no embedding to measure")
        h = euler_genus(inst.rotation)
        print(f"euler genus = {h}")
        if args.expect is not None and h != args.expect:
            print(f"MISMATCH: expected {args.expect}")
            return 1
        return 0
    if isinstance(inst, SurfaceJointInstance):
        h1, h2 = inst.h1, inst.h2
        print(f"declared genus = {inst.h}; g1 embedding = {h1}; g2 embedding = {h2}")
        want = inst.h if args.expect is None else args.expect
        if h1 != want or h2 != want:
            print(f"MISMATCH: expected both sides at {want}")
            return 1
        return 0
    bad = 0
    for name, rs in ((inst.name1, inst.promise1), (inst.name2, inst.promise2)):
        if rs is None:
            print(f"{name}: no promise embedding in file")
            continue
        h = euler_genus(rs)
        print(f"{name}: promise embedding genus = {h}")
        want = 0 if args.expect is None else args.expect
        bad += h != want
    if bad:
        print(f"MISMATCH: expected genus {0 if args.expect is None else args.expect}")
        return 1
    return 0


def _verify_edge_width(args: argparse.Namespace) -> int:
    inst = _read_instance(args.infile)
    if not isinstance(inst, GraphBundle) or inst.rotation is None:
        raise ValidationError("verify edge-width expects a graph file with an embedding")
    width = dual_edge_width_torus(inst.rotation)
    print(f"dual edge width = {width}")
    if args.expect is not None and width != args.expect:
        print(f"MISMATCH: expected {args.expect}")
        return 1
    return 0


def _verify_a2(args: argparse.Namespace) -> int:
    inst = _read_instance(args.infile)
    if not isinstance(inst, AnchoredInstance):
        raise ValidationError("verify a2 expects an anchored instance file")
    report = validate_a2(inst)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def _monotone_pair(rng: Random, max_len: int) -> tuple[list[int], list[int]]:
    n = rng.randint(2, max_len)
    a = sorted(rng.sample(range(1, 200), n))
    b = sorted(rng.sample(range(1, 200), n), reverse=True)
    return a, b


def _verify_ordering(args: argparse.Namespace) -> int:
    """Exhaustively confirm the pairing bound on monotone sequences.

    For strictly increasing a and strictly decreasing b, the identity
    pairing minimizes sum a_i b_{pi(i)}, and every other permutation loses
    at least (min gap of a) * (min gap of b); with integer entries that
    product dominates either single gap.
    """
    rng = Random(args.seed)
    violations = 0
    checked = 0
    for _ in range(args.samples):
        a, b = _monotone_pair(rng, args.max_len)
        bound = min_pair_gap(a) * min_pair_gap(b)
        for perm in permutations(range(len(a))):
            gap = ordering_gap(a, b, perm)
            checked += 1
            identity = perm == tuple(range(len(a)))
            if identity and gap != 0:
                violations += 1
            if not identity and gap < bound:
                violations += 1
    print(
        f"ordering lemma: {checked} pairings over {args.samples} monotone pairs, "
        f"{violations} violations"
    )
    return 1 if violations else 0


def _cmd_verify(args: argparse.Namespace) -> int:
    handler = {
        "counts": _verify_counts,
        "cuts": _verify_cuts,
        "genus": _verify_genus,
        "edge-width": _verify_edge_width,
        "a2": _verify_a2,
        "ordering": _verify_ordering,
    }[args.checkname]
    return handler(args)


# ---------------------------------------------------------------------------
# oracle and export


def _cmd_oracle(args: argparse.Namespace) -> int:
    inst = _read_instance(args.infile)
    if not isinstance(inst, FaJointInstance):
        raise ValidationError("the oracle runs on face-anchored instance files")
    caps = OracleCaps()
    result = fa_joint_planar_oracle(inst, max_crossings=args.max_crossings, caps=caps)
    print(oracle_report_line(inst, result))
    if args.check and result.value is not None and result.pattern is not None:
        cost = witness_count(inst, result.pattern, caps=caps)
        if cost != result.value:
            raise CheckFailure(
                f"oracle pattern costs {cost}, but the oracle reported {result.value}"
            )
    return 0


def _cmd_export_dot(args: argparse.Namespace) -> int:
    inst = _read_instance(args.infile)
    if args.check:
        _check_roundtrip(inst)
    _write_text(to_dot(inst), args.out)
    if args.out is not None:
        print(f"wrote {args.out}")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jointcross",
        description="gadget generators, reductions and oracles for joint crossing numbers",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", "-o", default=None, help="output file (default stdout)")

    def add_check(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--check", action="store_true", help="re-validate the command's output"
        )

    gen = sub.add_parser("gen", help="generate gadget instances")
    gen_sub = gen.add_subparsers(dest="generator", required=True)
    g = gen_sub.add_parser("grid", help="toroidal p x q grid with its embedding")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--prefix", default="", help="vertex name prefix")
    add_out(g)
    add_check(g)
    g = gen_sub.add_parser("fkt", help="the four-anchor grid/ladder pair")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--T", type=int, required=True)
    add_out(g)
    add_check(g)
    g = gen_sub.add_parser("fplus", help="the mirrored six-anchor pair")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--T", type=int, required=True)
    add_out(g)
    add_check(g)
    g = gen_sub.add_parser("torus-gadget", help="capped toroidal grid gadget")
    g.add_argument("--index", type=int, required=True, help="anchor index i, 1-based")
    g.add_argument("--genus", type=int, required=True, help="total handle count h")
    add_out(g)
    add_check(g)
    g = gen_sub.add_parser("l-gadget", help="K33 wedge with one thin edge pair")
    g.add_argument("--heavy", type=int, required=True, help="weight of the seven heavy edges")
    g.add_argument("--prefix", default="", help="name prefix")
    add_out(g)
    add_check(g)

    red = sub.add_parser("reduce", help="run one reduction stage or the pipeline")
    red_sub = red.add_subparsers(dest="stage", required=True)
    for stage, blurb in (
        ("weights", "expand weights into unit bunches"),
        ("3conn", "wheel blow-up to simple 3-connected form"),
        ("fa2surface", "trade face anchors for handles"),
        ("anchored2fa6", "glue onto the mirrored gadget pair"),
        ("full", "anchored input through the whole chain"),
    ):
        p = red_sub.add_parser(stage, help=blurb)
        p.add_argument("--in", dest="infile", required=True, help="input instance file")
        add_out(p)
        p.add_argument("--receipt", default=None, help="write the receipt sidecar here")
        add_check(p)
        if stage == "weights":
            p.add_argument(
                "--subdivide",
                action="store_true",
                help="subdivide bunches to remove parallel edges",
            )
            p.add_argument("--unary-bound", type=int, default=10**7)
        if stage == "full":
            p.add_argument("--genus", type=int, default=6, help="target genus, >= 6")
            p.add_argument(
                "--expand-mode", choices=("auto", "force", "skip"), default="auto"
            )
            p.add_argument("--unary-bound", type=int, default=10**7)

    ver = sub.add_parser("verify", help="check formulas, cuts, embeddings, orders")
    ver_sub = ver.add_subparsers(dest="checkname", required=True)
    p = ver_sub.add_parser("counts", help="closed forms against direct summation")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--T", type=int, required=True)
    add_check(p)
    p = ver_sub.add_parser("cuts", help="ladder anchor cuts against k^3 formulas")
    p.add_argument("--k", type=int, required=True)
    add_check(p)
    p = ver_sub.add_parser("genus", help="euler genus of embeddings in a file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--expect", type=int, default=None)
    add_check(p)
    p = ver_sub.add_parser("edge-width", help="dual edge width of a genus-1 embedding")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--expect", type=int, default=None)
    add_check(p)
    p = ver_sub.add_parser("a2", help="group separation condition on an anchored file")
    p.add_argument("--in", dest="infile", required=True)
    add_check(p)
    p = ver_sub.add_parser("ordering", help="pairing bound on monotone sequences")
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=20260816)
    add_check(p)

    orc = sub.add_parser("oracle", help="brute-force optimum of a face-anchored file")
    orc.add_argument("--in", dest="infile", required=True)
    orc.add_argument("--max-crossings", type=int, default=None)
    add_check(orc)

    exp = sub.add_parser("export-dot", help="graphviz text for an instance file")
    exp.add_argument("--in", dest="infile", required=True)
    add_out(exp)
    add_check(exp)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "gen": _cmd_gen,
        "reduce": _cmd_reduce,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
        "export-dot": _cmd_export_dot,
    }[args.command]
    try:
        return handler(args)
    except CheckFailure as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except _HANDLED as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
