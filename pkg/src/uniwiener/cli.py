"""Command-line interface.

Subcommands: construct, wiener, transform, enumerate, minimize, verify.
Exit codes: 0 success (for verify: zero failures), 1 usage or parse error,
2 precondition violation, 3 verification failures found.
"""

from __future__ import annotations

import argparse
import json
import sys

from .enumeration import class_summaries, enumerate_unicyclic, min_wiener
from .errors import GraphError
from .families import (
    hang_at_first,
    make_cycle,
    make_path,
    make_sab,
    make_star,
    theorem1_family,
    theorem2_family,
)
from .formats import format_dot, format_edge_list, parse_edge_list
from .graph import (
    ClassKey,
    Graph,
    UnicyclicGraph,
    build_unicyclic,
    even_degree_count,
    wiener,
)
from .transforms import (
    ShiftSpec,
    contract_and_leaf,
    operation_A,
    rebalance,
    shift,
    shift_over_bridge,
)
from .verify import VerificationReport, has_failures, run_checks

USAGE_EXIT = 1
PRECONDITION_EXIT = 2
VERIFICATION_EXIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _read_graph(path: str | None) -> Graph:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    n, edges = parse_edge_list(text)
    return Graph.from_edges(n, edges)


def _emit_graphs(graphs, fmt: str, out) -> None:
    blocks = []
    for g in graphs:
        raw = g.graph if isinstance(g, UnicyclicGraph) else g
        blocks.append(format_dot(raw) if fmt == "dot" else format_edge_list(raw))
    out.write("\n".join(blocks))


def _add_format_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("edges", "dot"), default="edges")
    p.add_argument("--output", default=None, help="write graphs here instead of stdout")


def build_parser() -> _Parser:
    parser = _Parser(prog="uniwiener", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named graph family")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("cycle")
    q.add_argument("--girth", type=int, required=True)
    q = fam.add_parser("path")
    q.add_argument("--edges", type=int, required=True)
    q = fam.add_parser("star")
    q.add_argument("--branches", type=int, required=True)
    q = fam.add_parser("sab", help="almost-balanced subdivided star (as a tree)")
    q.add_argument("--branches", type=int, required=True)
    q.add_argument("--size", type=int, required=True, help="total branch edges")
    q = fam.add_parser("hsab", help="cycle with a subdivided star at one vertex")
    q.add_argument("--girth", type=int, required=True)
    q.add_argument("--branches", type=int, required=True)
    q.add_argument("--size", type=int, required=True)
    q = fam.add_parser("theorem1", help="structure-family members for (n, r)")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q = fam.add_parser("theorem2", help="characterized minimizer set for (n, r)")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    for name in ("cycle", "path", "star", "sab", "hsab", "theorem1", "theorem2"):
        _add_format_args(fam.choices[name])

    p = sub.add_parser("wiener", help="Wiener index of an edge-list graph")
    p.add_argument("input", nargs="?", default=None, help="edge-list file (default stdin)")

    p = sub.add_parser("transform", help="apply a Wiener-decreasing operation")
    p.add_argument("--op", choices=("shift", "bridge", "contract", "rebalance", "opA"),
                   required=True)
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--u", type=int, help="first cut vertex (shift)")
    p.add_argument("--v", type=int, help="second cut vertex (shift)")
    p.add_argument("--x-side", help="comma-separated vertices of X, incl. u (shift)")
    p.add_argument("--y-side", help="comma-separated vertices of Y, incl. v (shift)")
    p.add_argument("--direction", choices=("xy", "yx"), default="xy")
    p.add_argument("--edge", help="bridge endpoints `u,v` (bridge)")
    p.add_argument("--center", type=int, help="star center (rebalance)")
    p.add_argument("--long", type=int, help="long branch head vertex (rebalance)")
    p.add_argument("--short", type=int, help="short branch head vertex (rebalance)")
    _add_format_args(p)

    p = sub.add_parser("enumerate", help="isomorph-free unicyclic graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=None, help="restrict to r even-degree vertices")
    p.add_argument("--format", choices=("edges", "dot", "count"), default="edges")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", default=None)

    p = sub.add_parser("minimize", help="minimum Wiener value and minimizers of (n, r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="machine-check the structure results")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--check", choices=("theorem1", "theorem2", "claims", "lemmas", "all"),
                   default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--report", default=None, help="also write the JSON report here")
    return parser


def _cmd_construct(args) -> int:
    if args.family == "cycle":
        graphs = [make_cycle(args.girth)]
    elif args.family == "path":
        graphs = [make_path(args.edges)]
    elif args.family == "star":
        graphs = [make_star(args.branches).as_graph()]
    elif args.family == "sab":
        graphs = [make_sab(args.branches, args.size).as_graph()]
    elif args.family == "hsab":
        graphs = [hang_at_first(args.girth, make_sab(args.branches, args.size))]
    else:
        family = theorem1_family if args.family == "theorem1" else theorem2_family
        graphs = family(ClassKey(args.n, args.r))
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        _emit_graphs(graphs, args.format, out)
    finally:
        if args.output:
            out.close()
    return 0


def _cmd_wiener(args) -> int:
    print(wiener(_read_graph(args.input)))
    return 0


def _parse_vertices(text: str) -> frozenset[int]:
    return frozenset(int(tok) for tok in text.split(",") if tok.strip() != "")


def _cmd_transform(args) -> int:
    g = _read_graph(args.input)
    w_before = wiener(g)
    if args.op == "shift":
        for flag in ("u", "v", "x_side", "y_side"):
            if getattr(args, flag) is None:
                raise GraphError(f"--op shift needs --{flag.replace('_', '-')}")
        spec = ShiftSpec(g, args.u, args.v,
                         _parse_vertices(args.x_side), _parse_vertices(args.y_side))
        result = shift(spec, "x_to_y" if args.direction == "xy" else "y_to_x")
    elif args.op == "bridge":
        if args.edge is None:
            raise GraphError("--op bridge needs --edge u,v")
        u, v = (int(t) for t in args.edge.split(","))
        result = shift_over_bridge(g, (u, v))
    else:
        uni = build_unicyclic(g.n, g.edges())
        if args.op == "contract":
            result = contract_and_leaf(uni).graph
        elif args.op == "rebalance":
            for flag in ("center", "long", "short"):
                if getattr(args, flag) is None:
                    raise GraphError(f"--op rebalance needs --{flag}")
            result = rebalance(uni, args.center, args.long, args.short).graph
        else:
            result = operation_A(uni).graph
    w_after = wiener(result)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        _emit_graphs([result], args.format, out)
        if args.output:
            print(f"{w_before} {w_after} {w_before - w_after}")
        else:
            out.write(f"\n{w_before} {w_after} {w_before - w_after}\n")
    finally:
        if args.output:
            out.close()
    return 0


def _cmd_enumerate(args) -> int:
    graphs = enumerate_unicyclic(args.n, jobs=args.jobs)
    if args.r is not None:
        graphs = [g for g in graphs if even_degree_count(g.graph) == args.r]
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if args.format == "count":
            summaries = class_summaries(args.n, jobs=args.jobs)
            keys = sorted(summaries) if args.r is None else [args.r]
            for r in keys:
                if r not in summaries:
                    raise GraphError(f"no unicyclic graph realizes ({args.n}, {r})")
                s = summaries[r]
                out.write(f"{args.n} {r} {s.count} {s.min_wiener}\n")
        else:
            _emit_graphs(graphs, args.format, out)
    finally:
        if args.output:
            out.close()
    return 0


def _cmd_minimize(args) -> int:
    summary = min_wiener(args.n, args.r, jobs=args.jobs)
    if args.json:
        print(json.dumps({
            "n": args.n,
            "r": args.r,
            "count": summary.count,
            "min_wiener": summary.min_wiener,
            "minimizers": [format_edge_list(g.graph) for g in summary.minimizers],
        }, indent=2))
        return 0
    print(f"minW={summary.min_wiener}")
    for g in summary.minimizers:
        print()
        sys.stdout.write(format_edge_list(g.graph))
    return 0


def _format_params(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def _cmd_verify(args) -> int:
    checks = ("theorem1", "theorem2", "claims", "lemmas") if args.check == "all" \
        else (args.check,)
    reports = run_checks(args.n_max, checks, jobs=args.jobs)
    records = [r.as_record() for r in reports]
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(records, fh, indent=2)
    if args.json:
        print(json.dumps(records, indent=2))
    else:
        _print_table(reports)
    return VERIFICATION_EXIT if has_failures(reports) else 0


def _print_table(reports: list[VerificationReport]) -> None:
    header = f"{'check':<28} {'params':<18} {'status':<6} {'cx':>3} {'time':>8}"
    print(header)
    print("-" * len(header))
    for r in reports:
        print(
            f"{r.check:<28} {_format_params(r.params):<18} {r.status:<6} "
            f"{len(r.counterexamples):>3} {r.runtime:>7.2f}s"
        )
        if r.detail:
            print(f"{'':<28} {r.detail}")
        for c in r.counterexamples:
            print(f"{'':<4}expected: {c.expected}")
            print(f"{'':<4}observed: {c.observed}")
            print("    graph:")
            for line in c.edges.strip().splitlines():
                print(f"{'':<6}{line}")
    failures = sum(1 for r in reports if r.status == "fail")
    notes = sum(1 for r in reports if r.status == "note")
    passed = sum(1 for r in reports if r.status == "pass")
    print("-" * len(header))
    print(f"{passed} passed, {failures} failed, {notes} notes")


def run(argv=None) -> int:
    """Dispatch a CLI invocation; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    handlers = {
        "construct": _cmd_construct,
        "wiener": _cmd_wiener,
        "transform": _cmd_transform,
        "enumerate": _cmd_enumerate,
        "minimize": _cmd_minimize,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION_EXIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


def main() -> None:
    sys.exit(run())
