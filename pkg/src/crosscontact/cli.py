"""Command-line driver: build spaces, run verification suites, emit reports."""

from __future__ import annotations

import argparse
import os
import sys

from .compactform import ToleranceConfig
from .report import VerificationReport
from .suites import SUITES, acceptance_report, run_suite, space_from_flags

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _default_tol() -> float:
    env = os.environ.get("CROSS_TOL")
    if env is None:
        return 1e-9
    try:
        val = float(env)
    except ValueError:
        val = -1.0
    if val <= 0:
        raise ValueError(f"CROSS_TOL must be a positive number, got {env!r}")
    return val


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscontact",
        description="Numerical verification of invariant contact geometry on "
                    "tangent sphere bundles of compact rank-one symmetric spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one verification suite on one space")
    run.add_argument("--space", required=True,
                     choices=["sphere", "rp", "cp", "hp", "cayley"])
    run.add_argument("--n", type=int, default=2,
                     help="dimension parameter (ignored for cayley)")
    run.add_argument("--radius", type=float, default=1.0)
    run.add_argument("--kappa", type=float, default=1.0)
    run.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    run.add_argument("--grid", type=int, default=5)
    run.add_argument("--refresh-fixtures", action="store_true",
                     help="recompute frozen reference values and print diffs")

    acc = sub.add_parser("acceptance", help="run the full acceptance gate")
    acc.add_argument("--grid", type=int, default=5)

    for p in (run, acc):
        p.add_argument("--tol", type=float, default=None,
                       help="absolute tolerance (default 1e-9, or CROSS_TOL)")
        p.add_argument("--format", default="text", choices=["text", "json"])
        p.add_argument("--output", default=None, help="write report to a file")
    return parser


def _emit(report: VerificationReport, fmt: str, output: str | None) -> None:
    text = report.to_json() if fmt == "json" else report.to_text()
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return int(exc.code or 0)
    try:
        tol_value = args.tol if args.tol is not None else _default_tol()
        if tol_value <= 0:
            raise ValueError("tolerance must be positive")
        tol = ToleranceConfig(absolute=tol_value, relative=tol_value)
        if args.command == "acceptance":
            report = acceptance_report(tol, grid=args.grid)
        elif args.refresh_fixtures:
            from . import fixtures
            diffs = fixtures.refresh()
            if diffs:
                print("\n".join(diffs))
                return EXIT_CHECK_FAILED
            print("fixtures up to date")
            return EXIT_OK
        else:
            space = space_from_flags(args.space, args.n)
            report = VerificationReport(config={
                "command": "run", "space": space.label(), "suite": args.suite,
                "radius": args.radius, "kappa": args.kappa,
                "tol": tol_value, "grid": args.grid})
            if args.radius <= 0 or args.kappa <= 0:
                raise ValueError("radius and kappa must be positive")
            run_suite(space, args.suite, args.radius, args.kappa, args.grid,
                      report, tol)
            report.finalize()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    _emit(report, args.format, args.output)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
