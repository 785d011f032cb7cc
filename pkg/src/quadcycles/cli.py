"""Command-line entry point: ``quadcycles {analyze,cycle,logistic,bifurcation,verify}``.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 domain/precondition error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from . import bifurcation, verify
from .algebra import Branch, cycle_cubic, cycle_for_branch, existence_condition
from .errors import QuadCyclesError
from .logistic import c_of_r, logistic_cycles, logistic_stable_window
from .report import analyze
from .stability import classify

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


def finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _fmt(xs) -> str:
    return ", ".join(f"{x:.12g}" for x in xs)


def cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze(args.c)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return EXIT_OK


def cmd_cycle(args: argparse.Namespace) -> int:
    if not existence_condition(args.c):
        print(f"error: no 3-cycles for c={args.c!r}; 3-cycles need c <= -7/4 = -1.75", file=sys.stderr)
        return EXIT_DOMAIN
    branch = args.branch
    cycle = cycle_for_branch(args.c, branch)
    rep = classify(args.c, branch, cycle)
    print(f"branch      {branch.value}")
    print(f"components  {_fmt(cycle.components)}")
    print(f"cubic       {_fmt(cycle_cubic(args.c, branch).coefficients())}")
    print(f"multiplier  {rep.multiplier:.12g}")
    print(f"stability   {rep.stability.value}")
    return EXIT_OK


def cmd_logistic(args: argparse.Namespace) -> int:
    r = args.r
    if r == 0.0:
        print("error: r = 0 makes the conjugacy h(x) = -r x + r/2 degenerate", file=sys.stderr)
        return EXIT_DOMAIN
    c = c_of_r(r)
    print(f"r = {r!r}")
    print(f"c = -r(r-2)/4 = {c:.12g}")
    cycles = logistic_cycles(r)
    if not cycles:
        print("no 3-cycles (c > -7/4)")
    for cyc in cycles:
        print(f"cycle [{cyc.branch.value}] {_fmt(cyc.components)}")
        print(f"  multiplier {cyc.report.multiplier:.12g}  {cyc.report.stability.value}")
    window = logistic_stable_window()
    print(f"r_min = {window.r_min:.9g}, r_max = {window.r_max:.9g}")
    print("stable 3-cycle windows: ({:.9g}, {:.9g}) and ({:.9g}, {:.9g})".format(*window.lower, *window.upper))
    return EXIT_OK


def cmd_bifurcation(args: argparse.Namespace) -> int:
    if not args.c_min < args.c_max or args.samples < 2:
        print("error: need --c-min < --c-max and --samples >= 2", file=sys.stderr)
        return EXIT_DOMAIN
    records = bifurcation.sweep(
        args.c_min,
        args.c_max,
        samples=args.samples,
        transient=args.transient,
        keep=args.keep,
        x0=args.x0,
        workers=args.workers,
    )
    if args.out is None or args.out == "-":
        bifurcation.write_csv(records, sys.stdout)
        return EXIT_OK
    try:
        with open(args.out, "w", newline="\n") as fh:
            bifurcation.write_csv(records, fh)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return EXIT_DOMAIN
    results = verify.run_all(args.seed, args.trials)
    for res in results:
        passed = res.checked - len(res.failures)
        print(f"{res.name:10s} {'PASS' if res.ok else 'FAIL'} {passed}/{res.checked}")
        for msg in res.failures:
            print(f"  {msg}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadcycles", description="Period-3 cycles of x^2 + c.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one parameter c")
    p.add_argument("c", type=finite_float)
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cycle", help="one branch's 3-cycle")
    p.add_argument("c", type=finite_float)
    p.add_argument("branch", type=Branch.parse, help="tilde or doubletilde")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("logistic", help="3-cycles of r y (1 - y)")
    p.add_argument("r", type=finite_float)
    p.set_defaults(func=cmd_logistic)

    p = sub.add_parser("bifurcation", help="write bifurcation-diagram CSV")
    p.add_argument("--c-min", type=finite_float, default=-2.0)
    p.add_argument("--c-max", type=finite_float, default=0.0)
    p.add_argument("--samples", type=int, default=bifurcation.DEFAULT_SAMPLES)
    p.add_argument("--transient", type=int, default=bifurcation.DEFAULT_TRANSIENT)
    p.add_argument("--keep", type=int, default=bifurcation.DEFAULT_KEEP)
    p.add_argument("--x0", type=finite_float, default=bifurcation.DEFAULT_X0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_bifurcation)

    p = sub.add_parser("verify", help="run the seeded cross-check suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except QuadCyclesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
