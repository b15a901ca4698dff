"""Command line interface: ``starcsf <command> ...``.

Exit status is 0 on success, 1 when a verification property fails and 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import analysis
from .dnc import star_expand, star_expand_traced
from .forest import ParseError, enumerate_trees, format_edge_list, from_graph6, parse_edge_list, to_graph6
from .harness import SUITES, conjecture_census, run_suite
from .reconstruct import NoCandidate, NotATreeCSF, reconstruct
from .symfunc import from_json, parse_text, to_power

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _read_forest(path: str, graph6: bool):
    text = _read(path)
    try:
        return from_graph6(text) if graph6 else parse_edge_list(text)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _read_symfunc(path: str):
    text = _read(path).strip()
    try:
        if text.startswith("{"):
            return from_json(text)
        return parse_text(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_expand(args) -> int:
    f = _read_forest(args.input, args.graph6)
    if args.trace:
        x, trace = star_expand_traced(f)
        Path(args.trace).write_text(trace.to_dot())
    else:
        x = star_expand(f)
    if args.basis == "power":
        x = to_power(x)
    print(x.to_json(indent=2) if args.format == "json" else x.to_text())
    return EXIT_OK


def cmd_analyze(args) -> int:
    f = _read_symfunc(args.input)
    if f.basis != "star":
        raise InputError("analyze expects a star-basis function")
    print(json.dumps(analysis.analyze(f).to_json_obj(), indent=2))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    f = _read_symfunc(args.input)
    try:
        result = reconstruct(f)
    except NotATreeCSF as exc:
        raise InputError(str(exc)) from None
    except NoCandidate as exc:
        print(f"no reconstruction: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = json.dumps(result.to_json_obj())
    edges = format_edge_list(result.tree)
    if args.out:
        Path(args.out).write_text(edges)
    if args.report:
        Path(args.report).write_text(report + "\n")
    if not args.out:
        sys.stdout.write(edges)
        if not args.report:
            print("# " + report)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.max_n, seed=args.seed, random_trees=args.random_trees)
    if not isinstance(reports, list):
        reports = [reports]
    ok = True
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite}: {r.trees_checked} trees, {len(r.failures)} failures")
        if args.json:
            print(json.dumps(r.to_json_obj(), indent=2))
        ok &= r.passed
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(args) -> int:
    for t in enumerate_trees(args.n):
        if args.format == "graph6":
            print(to_graph6(t))
        else:
            sys.stdout.write(format_edge_list(t) + "\n")
    return EXIT_OK


def cmd_census(args) -> int:
    report = conjecture_census(args.max_n, store=args.store, limit=args.limit)
    print(json.dumps(report.to_json_obj(), indent=2))
    return EXIT_FAIL if report.collisions else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="starcsf", description="Star-basis chromatic symmetric functions of trees.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", help="expand an edge-list forest in the star (or power) basis")
    e.add_argument("input", help="edge-list file, or - for stdin")
    e.add_argument("--graph6", action="store_true", help="input is graph6")
    e.add_argument("--basis", choices=("star", "power"), default="star")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--trace", metavar="OUT.dot", help="write the full recursion tree as DOT")
    e.set_defaults(func=cmd_expand)

    a = sub.add_parser("analyze", help="leading term, adjacency multisets and N(p) of a star expansion")
    a.add_argument("input", help="SymFunc JSON (or text) file, or -")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("reconstruct", help="rebuild a tree from its star expansion")
    r.add_argument("input", help="SymFunc JSON (or text) file, or -")
    r.add_argument("--out", help="write the edge list here instead of stdout")
    r.add_argument("--report", help="write the JSON report here")
    r.set_defaults(func=cmd_reconstruct)

    v = sub.add_parser("verify", help="run a property suite over all small trees")
    v.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--random-trees", type=int, default=0)
    v.add_argument("--json", action="store_true", help="print the full report")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("enumerate", help="one tree per isomorphism class")
    n.add_argument("--n", type=int, required=True)
    n.add_argument("--format", choices=("edges", "graph6"), default="edges")
    n.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("census", help="look for distinct trees with equal expansions")
    c.add_argument("--max-n", type=int, default=10)
    c.add_argument("--store", help="append-only JSONL record file")
    c.add_argument("--limit", type=int, default=12)
    c.set_defaults(func=cmd_census)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
