"""``planewalk`` command-line driver.

Exit codes: 0 approximable / disjoinable, 1 not, 2 inconclusive, 3 error,
4 theorem violation (two deciders disagree where they must not).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import errors
from .derivative import decide_approximable, winding_degree
from .fixtures import fixture_names
from .ingest import load
from .obstruction import obstruction_report
from .oracle import DEFAULT_BUDGET
from .render import render_drawing, render_table, render_tower
from .report import EXIT_ERROR, analyze, analyze_pair, exit_code

METHOD_CHOICES = ["derivative", "obstruction", "geom", "oracle", "all"]


def _load_single(source):
    doc = load(source)
    if isinstance(doc, tuple):
        raise errors.SemanticError("expected a single instance, got a K/L pair (use 'planewalk disjoint')")
    return doc


def _emit(report, json_out):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if json_out:
        Path(json_out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _write_svgs(inst, out_dir, what=("drawing", "tower", "table")):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if "drawing" in what:
        (out / "drawing.svg").write_text(render_drawing(inst), encoding="utf-8")
        written.append(out / "drawing.svg")
    if "tower" in what:
        (out / "tower.svg").write_text(render_tower(decide_approximable(inst)), encoding="utf-8")
        written.append(out / "tower.svg")
    if "table" in what:
        (out / "table.svg").write_text(render_table(obstruction_report(inst)), encoding="utf-8")
        written.append(out / "table.svg")
    return written


def cmd_analyze(args) -> int:
    inst = _load_single(args.input)
    report = analyze(inst, args.method, args.oracle_budget, timings=not args.no_timings)
    _emit(report, args.json)
    if args.svg:
        _write_svgs(inst, args.svg)
    return exit_code(report)


def cmd_degree(args) -> int:
    inst = _load_single(args.input)
    print(winding_degree(inst))
    return 0


def cmd_disjoint(args) -> int:
    doc = load(args.input)
    if not isinstance(doc, tuple):
        raise errors.SemanticError("expected a pair document with 'K' and 'L'")
    report = analyze_pair(*doc, methods=args.method, oracle_budget=args.oracle_budget, timings=not args.no_timings)
    _emit(report, args.json)
    return exit_code(report)


def cmd_render(args) -> int:
    inst = _load_single(args.input)
    what = {"drawing": "drawing", "tower": "tower", "table": "table"}[args.what]
    for path in _write_svgs(inst, args.out, (what,)):
        print(path)
    return 0


def cmd_fixtures(args) -> int:
    for name in fixture_names():
        print(name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planewalk", description="Approximability of plane walks by embeddings.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="decide approximability of a path or cycle")
    a.add_argument("input", help="input document path or fixture name")
    a.add_argument("--method", action="append", choices=METHOD_CHOICES)
    a.add_argument("--json", metavar="OUT")
    a.add_argument("--svg", metavar="DIR")
    a.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET)
    a.add_argument("--no-timings", action="store_true")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("degree", help="generalised degree of a closed walk")
    d.add_argument("input")
    d.set_defaults(func=cmd_degree)

    j = sub.add_parser("disjoint", help="disjoinability of a pair of walks")
    j.add_argument("input")
    j.add_argument("--method", action="append", choices=["obstruction", "oracle", "all"])
    j.add_argument("--json", metavar="OUT")
    j.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET)
    j.add_argument("--no-timings", action="store_true")
    j.set_defaults(func=cmd_disjoint)

    r = sub.add_parser("render", help="write an SVG picture")
    r.add_argument("input")
    r.add_argument("--what", choices=["drawing", "tower", "table"], required=True)
    r.add_argument("--out", required=True)
    r.set_defaults(func=cmd_render)

    f = sub.add_parser("fixtures", help="list built-in fixtures")
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except errors.PlanewalkError as exc:
        print(f"planewalk: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
