"""Command-line entry point: ``verify`` runs check suites, ``chart`` emits grid CSV."""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from .geometry import chart_csv
from .report import dumps, to_markdown
from .suites import MODES, SUITE_NAMES, RunConfig, manifest, run
from .tolerance import ATOL, RTOL

OUTPUT_ENV = "DSCLIFFORD_OUTPUT_DIR"


def _positive_fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dsclifford", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and write report.json / report.md")
    v.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    v.add_argument("--ell", type=float, default=1.0, help="de Sitter radius (> 0)")
    v.add_argument("--m", type=float, default=1.0, help="mass parameter (>= 0)")
    v.add_argument("--seed", type=_non_negative_int, default=0)
    v.add_argument("--mode", choices=MODES, default="exact",
                   help="exact: rational arithmetic wherever the identity allows it")
    v.add_argument("--rtol", type=float, default=RTOL)
    v.add_argument("--atol", type=float, default=ATOL)
    v.add_argument("--out", type=Path, default=None,
                   help=f"output directory (default: ${OUTPUT_ENV} or the current directory)")
    v.add_argument("--list", action="store_true", help="print the checks of the suite and exit")

    c = sub.add_parser("chart", help="CSV grid of the chart plane with inside/outside/absolute flags")
    c.add_argument("--ell", type=_positive_fraction, default=Fraction(1))
    c.add_argument("--extent", type=_positive_fraction, default=Fraction(3),
                   help="half-width of the square grid in coordinate units")
    c.add_argument("--resolution", type=int, default=50, help="grid points per axis (>= 2)")
    c.add_argument("--lightlike", action="store_true", help="append null-line samples")
    c.add_argument("--out", type=Path, default=None, help="CSV file (default: standard output)")
    return parser


def _verify(args, parser) -> int:
    try:
        cfg = RunConfig(args.suite, args.ell, args.m, args.seed, args.mode, args.rtol, args.atol)
    except ValueError as exc:
        parser.error(str(exc))
    if args.list:
        print("\n".join(manifest(cfg.suite)))
        return 0
    out = args.out or Path(os.environ.get(OUTPUT_ENV) or ".")
    try:
        out.mkdir(parents=True, exist_ok=True)
        report = run(cfg)
        (out / "report.json").write_text(dumps(report))
        (out / "report.md").write_text(to_markdown(report))
    except OSError as exc:
        print(f"dsclifford: cannot write report to {out}: {exc}", file=sys.stderr)
        return 2
    summary = report["summary"]
    print(f"{summary['passed']}/{summary['total']} checks passed; report written to {out}")
    for c in report["checks"]:
        if not c["passed"]:
            print(f"FAIL {c['name']}: {c['identity']} (max residual {c['max_residual']})")
    return 0 if not summary["failed"] else 1


def _chart(args, parser) -> int:
    if args.resolution < 2:
        parser.error("--resolution must be at least 2")
    text = chart_csv(args.ell, args.extent, args.resolution, args.lightlike)
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        args.out.write_text(text)
    except OSError as exc:
        print(f"dsclifford: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return (_verify if args.command == "verify" else _chart)(args, parser)


if __name__ == "__main__":
    sys.exit(main())
