"""Command-line front end.

Subcommands: insert, commute, verify, rsk, render.  Tableaux are read from
``--file`` (default standard input) in the plain text format: one row per
line, row 0 first, space-separated decimal naturals, ``#`` comments.

Exit codes: 0 success, 1 verification or commutation failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys

from .fused import commute_check
from .harness import DuplicateInWord, SweepFailure, rsk, run_sweep
from .insertion import XAlreadyPresent, column_insert, row_insert
from .render import RenderOptions, render_tableau, render_trail
from .tableau import Tableau, TableauError, parse_tableau


def _read_tableau(args: argparse.Namespace) -> Tableau:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    return parse_tableau(text)


def _render_options(args: argparse.Namespace) -> RenderOptions:
    return RenderOptions(
        convention=getattr(args, "convention", "french"),
        format=getattr(args, "format", "ascii"),
        annotate=getattr(args, "annotate", "none"),
    )


def _add_io_flags(parser: argparse.ArgumentParser, annotate: bool = True) -> None:
    parser.add_argument("--file", default="-", help="tableau file (default: stdin)")
    parser.add_argument(
        "--convention", choices=("french", "english"), default="french"
    )
    parser.add_argument("--format", choices=("ascii", "latex"), default="ascii")
    if annotate:
        parser.add_argument("--annotate", choices=("none", "trails"), default="none")


def cmd_insert(args: argparse.Namespace) -> int:
    t = _read_tableau(args)
    if args.mode == "row":
        result, trail = row_insert(t, args.value)
        row_trail, col_trail = trail, None
    else:
        result, trail = column_insert(args.value, t)
        row_trail, col_trail = None, trail
    opts = _render_options(args)
    if opts.annotate == "trails":
        print(render_tableau(t, opts, row_trail=row_trail, col_trail=col_trail))
        print()
    print(render_tableau(result, RenderOptions(opts.convention, opts.format)))
    print()
    print(render_trail(trail))
    return 0


def cmd_commute(args: argparse.Namespace) -> int:
    t = _read_tableau(args)
    report = commute_check(t, args.x, args.y)
    opts = _render_options(args)
    plain = RenderOptions(opts.convention, opts.format)
    if args.porcelain:
        for name, tab in (
            ("left", report.left),
            ("right", report.right),
            ("fused", report.fused),
        ):
            for r, row in enumerate(tab.rows):
                print(f"{name}.row{r}={' '.join(str(v) for v in row)}")
        inter = report.intersection
        print(f"intersection.variant={inter.variant}")
        for key in ("s_box", "s", "a", "b", "i", "j", "configuration"):
            value = getattr(inter, key)
            if value is not None:
                print(f"intersection.{key}={value}")
        print(f"all_equal={str(report.all_equal).lower()}")
    else:
        blocks = {
            f"(x->T)<-y with x={args.x}, y={args.y}": report.left,
            "x->(T<-y)": report.right,
            "fused": report.fused,
        }
        rendered = {name: render_tableau(tab, plain).splitlines() for name, tab in blocks.items()}
        height = max(len(lines) for lines in rendered.values())
        width = {
            name: max([len(ln) for ln in lines] + [len(name)])
            for name, lines in rendered.items()
        }
        names = list(blocks)
        print("   ".join(name.ljust(width[name]) for name in names))
        for k in range(height):
            padded = []
            for name in names:
                lines = rendered[name]
                pad = height - len(lines)  # keep bottom alignment in French mode
                line = lines[k - pad] if k >= pad else ""
                padded.append(line.ljust(width[name]))
            print("   ".join(padded).rstrip())
        print()
        print(f"intersection: {report.intersection.summary()}")
        print("EQUAL" if report.all_equal else "UNEQUAL")
    return 0 if report.all_equal else 1


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        summary = run_sweep(args.max_n, workers=args.workers, seed=args.seed)
    except SweepFailure as err:
        print(f"sweep failure: {err}", file=sys.stderr)
        return 1
    print(
        f"checked {summary.cases_total} cases up to n={args.max_n}: "
        f"failures: {summary.failures}"
    )
    for line in summary.records():
        print(line)
    return 0


def cmd_rsk(args: argparse.Namespace) -> int:
    p, q = rsk(args.word)
    opts = RenderOptions(convention=args.convention, format=args.format)
    print("P:")
    print(render_tableau(p, opts))
    print("Q:")
    print(render_tableau(q, opts))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    t = _read_tableau(args)
    print(render_tableau(t, _render_options(args)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schensted",
        description="Bumping insertion on Young tableaux, trail analysis, "
        "and exhaustive commutation checking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_insert = sub.add_parser("insert", help="row- or column-insert a value")
    p_insert.add_argument("--mode", choices=("row", "col"), required=True)
    p_insert.add_argument("--value", type=int, required=True)
    _add_io_flags(p_insert)
    p_insert.set_defaults(func=cmd_insert)

    p_commute = sub.add_parser(
        "commute", help="compare (x->T)<-y, x->(T<-y), and the fused insertion"
    )
    p_commute.add_argument("--x", type=int, required=True, help="column-inserted value")
    p_commute.add_argument("--y", type=int, required=True, help="row-inserted value")
    p_commute.add_argument(
        "--porcelain", action="store_true", help="line-oriented key=value output"
    )
    _add_io_flags(p_commute)
    p_commute.set_defaults(func=cmd_commute)

    p_verify = sub.add_parser("verify", help="exhaustive sweep of all invariants")
    p_verify.add_argument("--max-n", type=int, default=7)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=cmd_verify)

    p_rsk = sub.add_parser("rsk", help="insertion and recording tableaux of a word")
    p_rsk.add_argument("word", type=int, nargs="*", help="distinct labels")
    p_rsk.add_argument("--convention", choices=("french", "english"), default="french")
    p_rsk.add_argument("--format", choices=("ascii", "latex"), default="ascii")
    p_rsk.set_defaults(func=cmd_rsk)

    p_render = sub.add_parser("render", help="pretty-print a tableau")
    _add_io_flags(p_render)
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TableauError, XAlreadyPresent, DuplicateInWord, OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
