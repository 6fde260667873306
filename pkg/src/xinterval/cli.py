"""Command line interface.

Exit codes: 0 success / verified, 1 verification failure or incomplete
search, 2 usage or input format error, 3 precondition violated.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import generators
from .errors import (BudgetExhausted, InfeasibleDegrees, LengthMismatch,
                     NotProper, ParseError, PreconditionViolated)
from .general import biregular_decompose
from .graph import verify_coloring
from .io import (emit_coloring, emit_dot, emit_graph, parse_coloring,
                 parse_graph)
from .methods import METHOD_NAMES, color
from .oracle import exact_chi_int, extremal_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

BUDGET_ENV = "XINTERVAL_SEARCH_BUDGET"
DEFAULT_BUDGET = 1_000_000


class _Usage(Exception):
    pass


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise _Usage(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _print_json(data) -> None:
    print(json.dumps(data, indent=2))


def cmd_gen(args) -> int:
    if args.kind == "complete":
        g = generators.complete_bipartite(args.m, args.n)
    elif args.kind == "biregular":
        g = generators.random_biregular(args.a, args.b, args.n_x, args.seed)
        if g is None:
            print("no biregular graph found within the retry cap", file=sys.stderr)
            return EXIT_FAIL
    elif args.kind == "random":
        g = generators.random_bipartite(args.n_x, args.n_y, args.max_degree,
                                        args.density, args.seed)
    else:
        g = generators.random_tree(args.n, args.seed)
    _write(args.output, emit_graph(g))
    return EXIT_OK


def cmd_color(args) -> int:
    g = parse_graph(_read(args.graph))
    given = parse_coloring(_read(args.coloring)) if args.coloring else None
    budget = args.budget if args.budget is not None else _default_budget()
    coloring, cert, fallback = color(g, args.method, given, budget)
    out = cert.as_dict()
    out["fallback"] = fallback
    _print_json(out)
    if args.output:
        _write(args.output, emit_coloring(coloring))
    return EXIT_OK if cert.verified else EXIT_FAIL


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    coloring = parse_coloring(_read(args.coloring))
    try:
        report = verify_coloring(g, coloring)
    except LengthMismatch as exc:
        _print_json({"proper": False, "interval_at_X": False, "error": str(exc)})
        return EXIT_FAIL
    _print_json({
        "proper": report.proper,
        "interval_at_X": report.interval_at_X,
        "violating_vertices": report.violating_vertices,
        "violating_edge_pairs": [list(p) for p in report.violating_edge_pairs],
        "colors_used": coloring.max_color,
    })
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_exact(args) -> int:
    g = parse_graph(_read(args.graph))
    budget = args.budget if args.budget is not None else _default_budget()
    try:
        result = exact_chi_int(g, args.t_max, budget)
    except BudgetExhausted:
        _print_json({"chi_int": None, "budget_exhausted": True})
        return EXIT_FAIL
    if result is None:
        _print_json({"chi_int": None, "budget_exhausted": False})
        return EXIT_FAIL
    t, coloring = result
    _print_json({"chi_int": t, "colors": list(coloring.colors)})
    if args.output:
        _write(args.output, emit_coloring(coloring))
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = parse_graph(_read(args.graph))
    d = biregular_decompose(g, args.a, args.b)
    _print_json({
        "parts": [list(p) for p in d.parts],
        "x_assignment": {str(x): i for x, i in sorted(d.x_assignment.items())},
    })
    return EXIT_OK


def _param(text: str):
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        number = float(value) if "." in value else int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric value in {text!r}") from None
    return key, number


def cmd_search(args) -> int:
    spec = generators.GeneratorSpec(args.kind, dict(args.param), args.seed)
    budget = args.budget if args.budget is not None else _default_budget()
    try:
        report = extremal_search(spec, budget, args.frontier, args.resume)
        exhausted = False
    except BudgetExhausted as exc:
        report, exhausted = exc.report, True
    except KeyError as exc:
        raise _Usage(f"missing generator parameter {exc}") from None
    out = report.as_dict()
    out["budget_exhausted"] = exhausted
    _print_json(out)
    return EXIT_FAIL if exhausted else EXIT_OK


def cmd_dot(args) -> int:
    g = parse_graph(_read(args.graph))
    coloring = parse_coloring(_read(args.coloring)) if args.coloring else None
    if coloring is not None and len(coloring) != g.edge_count:
        raise _Usage("coloring length does not match the graph")
    _write(args.output, emit_dot(g, coloring))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xinterval",
        description="One-sided (X-interval) edge colorings of bipartite graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph file")
    gen.add_argument("-o", "--output")
    kinds = gen.add_subparsers(dest="kind", required=True)
    p = kinds.add_parser("complete")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p = kinds.add_parser("biregular")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("n_x", type=int)
    p.add_argument("--seed", type=int, default=0)
    p = kinds.add_parser("random")
    p.add_argument("n_x", type=int)
    p.add_argument("n_y", type=int)
    p.add_argument("max_degree", type=int)
    p.add_argument("density", type=float)
    p.add_argument("--seed", type=int, default=0)
    p = kinds.add_parser("tree")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    gen.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="color a graph and print a bound certificate")
    p.add_argument("graph")
    p.add_argument("--method", choices=METHOD_NAMES, default="auto")
    p.add_argument("--coloring", help="proper input coloring for --method palette")
    p.add_argument("--budget", type=int, help="search node budget (delta6)")
    p.add_argument("-o", "--output", help="write the coloring here")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring for properness and X-intervals")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact chi'_int(G, X) by backtracking")
    p.add_argument("graph")
    p.add_argument("--t-max", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("decompose", help="biregular decomposition into parts")
    p.add_argument("graph")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("search", help="extremal search for chi'_int / Delta^2")
    p.add_argument("--kind", required=True,
                   choices=("enumerate", "random", "biregular", "trees"))
    p.add_argument("--param", type=_param, action="append", default=[],
                   metavar="KEY=VALUE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int,
                   help=f"total node budget (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
    p.add_argument("--frontier", help="resumable progress file")
    p.add_argument("--resume", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("dot", help="Graphviz export")
    p.add_argument("graph")
    p.add_argument("--coloring")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (_Usage, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionViolated, InfeasibleDegrees, NotProper,
            LengthMismatch) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
