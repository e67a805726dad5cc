"""Command-line interface: ``verify list | run | all``.

Exit codes: 0 when every requested identity passed, 1 when at least one
failed, 2 for usage errors, 3 when any outcome errored.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from .identities import RunConfig, get_case, registry
from .verifier import run_all, run_selected, render_report

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_ERRORED = 3


def _nonneg_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value) or value < 0:
        raise argparse.ArgumentTypeError(f"must be a finite number >= 0, got {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text!r}")
    return value


def _quad_level(text: str) -> int:
    value = _positive_int(text)
    if value > 30:
        raise argparse.ArgumentTypeError(f"quadrature level must be in [1, 30], got {text!r}")
    return value


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rel-tol", type=_nonneg_float, help="relative pass tolerance override")
    p.add_argument("--abs-tol", type=_nonneg_float, help="absolute pass tolerance override")
    p.add_argument("--max-terms", type=_positive_int, help="term cap for every series")
    p.add_argument("--quad-level", type=_quad_level, help="finest tanh-sinh level (step 2^-L)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument(
        "--timings", action="store_true", help="include wall-clock seconds (output not reproducible)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify", description="Check closed-form log-sine and polylogarithm identities."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="list identity ids, descriptions and sources")
    run = sub.add_parser("run", help="check a single identity")
    run.add_argument("--id", required=True, dest="case_id")
    _add_run_flags(run)
    every = sub.add_parser("all", help="check every identity")
    _add_run_flags(every)
    every.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        rel_tol=args.rel_tol, abs_tol=args.abs_tol, max_terms=args.max_terms, quad_level=args.quad_level
    )


def _exit_code(summary: dict) -> int:
    if summary["errored"]:
        return EXIT_ERRORED
    if summary["failed"]:
        return EXIT_FAILED
    return EXIT_OK


def _write(data: bytes) -> None:
    out = getattr(sys.stdout, "buffer", None)
    if out is None:
        sys.stdout.write(data.decode())
    else:
        out.write(data)
        out.flush()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command == "list":
        cases = registry()
        width = max(len(c.id) for c in cases)
        lines = [f"{c.id:<{width}}  {c.description}  [{c.paper_anchor}]" for c in cases]
        _write(("\n".join(lines) + "\n").encode())
        return EXIT_OK

    if args.rel_tol == 0 and args.abs_tol == 0:
        print("verify: error: --rel-tol and --abs-tol cannot both be 0", file=sys.stderr)
        return EXIT_USAGE
    cfg = _config(args)

    if args.command == "run":
        if get_case(args.case_id) is None:
            known = ", ".join(c.id for c in registry())
            print(f"verify: error: unknown id {args.case_id!r}; known ids: {known}", file=sys.stderr)
            return EXIT_USAGE
        report = run_selected([args.case_id], cfg, timings=args.timings)
    else:
        jobs = min(args.jobs, os.cpu_count() or 1)
        report = run_all(cfg, jobs, timings=args.timings)

    _write(render_report(report, args.format))
    for o in report.outcomes:
        if o.status == "error":
            print(f"verify: {o.id}: {o.message}", file=sys.stderr)
    return _exit_code(report.summary)


if __name__ == "__main__":
    sys.exit(main())
