"""Command-line front end: ``signed-batteries {analyze,balance,oracle,verify,gen}``.

Exit codes: 0 ok, 1 usage or parse error, 2 circle cap exceeded,
3 structural/oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .edge_battery import EdgeBatteryAnalysis, negative_batteries_from, positive_batteries_from
from .errors import CircleCapExceeded, GraphError, InvariantViolation
from .fileformat import format_switching, graph_to_dict, load_graph, serialize_graph
from .generators import (
    CUSTOM_MODE,
    NEGATIVE_MODE,
    POSITIVE_MODE,
    builtin_corpus,
    gen_k4_subdivision,
    gen_layered,
    gen_random,
    gen_theta,
    parse_sign_token,
    random_signs,
)
from .graph import SignedGraph, sign_symbol
from .oracle import DEFAULT_CAP, enumerate_circles
from .switching import is_balanced
from .vertex_battery import VertexBatteryAnalysis

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_INVARIANT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which is our resource code
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _battery_label(neg: bool, pos: bool) -> str:
    if neg and pos:
        return "negative+positive"
    return "negative" if neg else "positive" if pos else "-"


def cmd_analyze(args: argparse.Namespace) -> int:
    g = load_graph(args.file)
    edges = EdgeBatteryAnalysis(g, args.max_circles)
    vertices = VertexBatteryAnalysis(g, args.max_circles, edges)
    edge_ids = [e.id for e in g.edges]
    vertex_ids = sorted(g.vertices)
    if args.block is not None:
        if not 0 <= args.block < len(edges.blocks.blocks):
            raise GraphError(f"no block with index {args.block}")
        block = edges.blocks.blocks[args.block]
        edge_ids = [eid for eid in edge_ids if eid in block]
        vertex_ids = [v for v in vertex_ids if args.block in edges.blocks.blocks_of_vertex.get(v, ())]
    edge_certs = [edges.certificate(eid) for eid in edge_ids]
    vertex_certs = [vertices.certificate(v) for v in vertex_ids]
    if args.format == "json":
        print(_dump({
            "graph": graph_to_dict(g),
            "edges": [c.to_dict() for c in edge_certs],
            "vertices": [c.to_dict() for c in vertex_certs],
        }))
        return EXIT_OK
    print("edge  u  v  sign  block  neg  pos  battery")
    for c in edge_certs:
        e = g.edge(c.edge)
        print(f"{e.id:>4} {e.u:>2} {e.v:>2}  {sign_symbol(e.sign):>4}  {c.block:>5}  {c.counts.negative:>3}  "
              f"{c.counts.positive:>3}  {_battery_label(c.is_negative_battery, c.is_positive_battery)}")
    print()
    print("vertex  neg  pos  battery")
    for c in vertex_certs:
        print(f"{c.vertex:>6}  {c.counts.negative:>3}  {c.counts.positive:>3}  "
              f"{_battery_label(c.is_negative_battery, c.is_positive_battery)}")
    return EXIT_OK


def cmd_balance(args: argparse.Namespace) -> int:
    g = load_graph(args.file)
    report = is_balanced(g)
    if args.format == "json":
        out: dict = {"balanced": report.balanced}
        if report.balanced:
            out["switching"] = {str(v): sign_symbol(s) for v, s in sorted(report.switching.items())}
        else:
            out["negative_circle"] = report.negative_circle.to_dict()
        print(_dump(out))
    elif report.balanced:
        print("balanced")
        sys.stdout.write(format_switching(report.switching))
    else:
        print("unbalanced")
        print("negative circle: " + " ".join(str(e) for e in sorted(report.negative_circle.edges)))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = load_graph(args.file)
    census = enumerate_circles(g, args.max_circles)
    if args.format == "json":
        print(_dump({
            "circles": [c.to_dict() for c in census.circles],
            "edges": {str(e.id): census.edge_tally(e.id).to_dict() for e in g.edges},
            "vertices": {str(v): census.vertex_tally(v).to_dict() for v in sorted(g.vertices)},
        }))
        return EXIT_OK
    print(f"{len(census.circles)} circles")
    for c in census.circles:
        print(f"{sign_symbol(c.sign)} " + " ".join(str(e) for e in sorted(c.edges)))
    return EXIT_OK


def verify_graph(g: SignedGraph, cap: int = DEFAULT_CAP) -> list[str]:
    """Run every structural check against the oracle; returns mismatch messages.

    Disagreements inside classification raise :class:`InvariantViolation`;
    propagation mismatches are collected and returned.
    """
    edges = EdgeBatteryAnalysis(g, cap)
    certs = edges.certificates()
    VertexBatteryAnalysis(g, cap, edges).certificates()
    problems = []
    for cert in certs:
        block = edges.blocks.blocks[cert.block]
        for sign, witness, propagate in (
            (-1, cert.negative, negative_batteries_from),
            (1, cert.positive, positive_batteries_from),
        ):
            if witness is None:
                continue
            expected = {eid for eid in block if edges.census.edge_tally(eid).count(sign) == 1}
            got = set(propagate(g, cert, cap))
            if got != expected:
                problems.append(
                    f"edge {cert.edge} [{sign_symbol(sign)}]: propagation {sorted(got)} != oracle {sorted(expected)}"
                )
    return problems


def cmd_verify(args: argparse.Namespace) -> int:
    if args.files:
        items = [(path, load_graph(path)) for path in args.files]
    else:
        items = builtin_corpus(args.seed)
    failed = 0
    for name, g in items:
        try:
            problems = verify_graph(g, args.max_circles)
        except InvariantViolation as exc:
            problems = [str(exc)]
        if problems:
            failed += 1
            for p in problems:
                print(f"MISMATCH {name}: {p}")
        else:
            print(f"ok {name}")
    return EXIT_INVARIANT if failed else EXIT_OK


def _signs_arg(args: argparse.Namespace, m: int) -> list[int]:
    if args.signs is not None:
        return [parse_sign_token(ch) for ch in args.signs]
    return random_signs(m, args.seed, args.p_neg)


def cmd_gen(args: argparse.Namespace) -> int:
    p = args.params
    if args.kind == "theta":
        if len(p) != 3:
            raise GraphError("theta needs three path lengths")
        g = gen_theta(*p, signs=_signs_arg(args, sum(p)))
    elif args.kind == "k4":
        if len(p) != 6:
            raise GraphError("k4 needs six path lengths")
        g = gen_k4_subdivision(p, _signs_arg(args, sum(p)))
    elif args.kind == "random":
        if len(p) != 2:
            raise GraphError("random needs n and m")
        g = gen_random(p[0], p[1], args.p_neg, args.seed, args.simple)
    else:
        bridges = [b if b == "chord" else int(b) for b in args.bridges.split(",")]
        mode = args.mode
        signs = None
        if args.signs is not None:
            mode = CUSTOM_MODE
            signs = [parse_sign_token(ch) for ch in args.signs]
        handles = p[:2] if p else [1, 1]
        segments = p[2:] if len(p) > 2 else None
        g = gen_layered(handles, segments, bridges, mode, signs)
    if args.format == "json":
        print(_dump(graph_to_dict(g)))
    else:
        sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="signed-batteries", description="Find edges and vertices lying on exactly one circle of a given sign.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, circles: bool = True) -> None:
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if circles:
            sp.add_argument("--max-circles", type=int, default=DEFAULT_CAP, metavar="N")

    sp = sub.add_parser("analyze", help="classify every edge and vertex")
    sp.add_argument("file")
    sp.add_argument("--block", type=int, default=None, help="restrict the report to one block index")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("balance", help="balance test with witness")
    sp.add_argument("file")
    common(sp, circles=False)
    sp.set_defaults(func=cmd_balance)

    sp = sub.add_parser("oracle", help="enumerate all circles")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="cross-check structure against the oracle")
    sp.add_argument("files", nargs="*", help="graph files (default: the built-in corpus)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-circles", type=int, default=DEFAULT_CAP, metavar="N")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="generate a graph file")
    sp.add_argument("kind", choices=("theta", "k4", "layered", "random"))
    sp.add_argument("params", type=int, nargs="*",
                    help="theta: 3 lengths; k4: 6 lengths; random: n m; layered: h1 h2 [segment lengths]")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--signs", default=None, help="explicit signs, e.g. '+-++'")
    sp.add_argument("--p-neg", type=float, default=0.5)
    sp.add_argument("--simple", action="store_true", help="random: no loops or parallel edges")
    sp.add_argument("--mode", choices=(NEGATIVE_MODE, POSITIVE_MODE), default=NEGATIVE_MODE)
    sp.add_argument("--bridges", default="chord", help="layered: comma list of 'chord' or path lengths")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "max_circles", 1) <= 0:
        print("error: --max-circles must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except CircleCapExceeded as exc:
        print(f"error: {exc} (raise --max-circles)", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
