"""Execution engine and report rendering for the identity registry."""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

from .errors import LogsineError, UnknownIdentityError
from .identities import IdentityCase, RunConfig, get_case, registry

__all__ = [
    "IdentityOutcome",
    "VerificationReport",
    "run_identity",
    "run_all",
    "run_selected",
    "render_report",
    "REPORT_VERSION",
]

REPORT_VERSION = 1

Status = Literal["pass", "fail", "error"]


@dataclass(frozen=True)
class IdentityOutcome:
    """Result of checking one identity.

    ``lhs_value`` and the errors are ``None`` when the computation errored;
    ``message`` then carries the diagnostic.
    """

    id: str
    lhs_value: float | None
    rhs_value: float
    abs_error: float | None
    rel_error: float | None
    passed: bool
    status: Status
    work: int
    seconds: float
    message: str = ""


@dataclass(frozen=True)
class VerificationReport:
    config: RunConfig
    outcomes: tuple[IdentityOutcome, ...]
    timings: bool = False
    summary: dict = field(init=False)

    def __post_init__(self) -> None:
        counts = {"pass": 0, "fail": 0, "error": 0}
        for o in self.outcomes:
            counts[o.status] += 1
        object.__setattr__(
            self,
            "summary",
            {
                "total": len(self.outcomes),
                "passed": counts["pass"],
                "failed": counts["fail"],
                "errored": counts["error"],
            },
        )


def _lookup(case_id: str) -> IdentityCase:
    case = get_case(case_id)
    if case is None:
        raise UnknownIdentityError(f"unknown identity id {case_id!r}; see `verify list`")
    return case


def run_identity(case_id: str, overrides: RunConfig | None = None) -> IdentityOutcome:
    """Evaluate one registry entry and compare it with its closed form.

    Numerical trouble (non-convergence, non-finite integrand, domain
    problems inside a recipe) is reported as an ``error`` outcome; only an
    unknown id raises.
    """
    case = _lookup(case_id)
    cfg = overrides or RunConfig()
    tol = cfg.effective_tol(case.default_tol)
    rhs = case.rhs_closed_form
    start = time.perf_counter()
    try:
        lhs, work = case.lhs_recipe(cfg)
        if not math.isfinite(lhs):
            raise ArithmeticError(f"non-finite left-hand side {lhs!r}")
    except (LogsineError, ArithmeticError, ValueError) as exc:
        elapsed = time.perf_counter() - start
        partial = getattr(exc, "partial", None)
        work = getattr(partial, "terms_used", None) or getattr(partial, "evaluations", 0) or 0
        return IdentityOutcome(
            case.id, None, rhs, None, None, False, "error", int(work), elapsed,
            f"{type(exc).__name__}: {exc}",
        )
    elapsed = time.perf_counter() - start
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(rhs) if rhs != 0 else math.inf
    passed = abs_err <= tol.abs_tol or rel_err <= tol.rel_tol
    return IdentityOutcome(
        case.id, lhs, rhs, abs_err, rel_err, passed, "pass" if passed else "fail", int(work), elapsed
    )


def run_all(
    overrides: RunConfig | None = None, jobs: int = 1, *, timings: bool = False
) -> VerificationReport:
    """Run every registry entry; outcomes are sorted by id whatever ``jobs`` is."""
    cfg = overrides or RunConfig()
    ids = [c.id for c in registry()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run_identity, ids, [cfg] * len(ids)))
    else:
        outcomes = [run_identity(i, cfg) for i in ids]
    outcomes.sort(key=lambda o: o.id)
    return VerificationReport(cfg, tuple(outcomes), timings)


def run_selected(
    case_ids: list[str], overrides: RunConfig | None = None, *, timings: bool = False
) -> VerificationReport:
    """Report for an explicit list of ids (used by ``verify run``)."""
    cfg = overrides or RunConfig()
    outcomes = sorted((run_identity(i, cfg) for i in case_ids), key=lambda o: o.id)
    return VerificationReport(cfg, tuple(outcomes), timings)


def _to_dict(report: VerificationReport) -> dict:
    cfg = report.config
    return {
        "version": REPORT_VERSION,
        "config": {
            "rel_tol": cfg.rel_tol,
            "abs_tol": cfg.abs_tol,
            "max_terms": cfg.max_terms,
            "quad_level": cfg.quad_level,
        },
        "results": [
            {
                "id": o.id,
                "lhs": o.lhs_value,
                "rhs": o.rhs_value,
                "abs_error": o.abs_error,
                "rel_error": o.rel_error,
                "status": o.status,
                "work": o.work,
                "seconds": o.seconds if report.timings else None,
            }
            for o in report.outcomes
        ],
        "summary": dict(report.summary),
    }


def _fmt(x: float | None, fmt: str) -> str:
    if x is None:
        return "-".rjust(int(fmt.split(".")[0]))
    return format(x, fmt)


def render_report(report: VerificationReport, format: Literal["text", "json"] = "text") -> bytes:
    """Render a report as a fixed-width text table or as JSON.

    JSON keys keep a fixed order and floats use ``repr``, so equal reports
    give equal bytes.  Wall-clock seconds are emitted only when the report
    was built with ``timings=True``; otherwise they are ``null``.
    """
    if format == "json":
        return (json.dumps(_to_dict(report), indent=2) + "\n").encode()
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    width = max([len("id")] + [len(o.id) for o in report.outcomes])
    header = f"{'id':<{width}}  {'lhs':>24}  {'rhs':>24}  {'rel_error':>9}  status"
    lines = [header, "-" * len(header)]
    notes = []
    for o in report.outcomes:
        line = (
            f"{o.id:<{width}}  {_fmt(o.lhs_value, '24.16e')}  {o.rhs_value:24.16e}  "
            f"{_fmt(o.rel_error, '9.2e')}  {o.status.upper()}"
        )
        if report.timings:
            line += f"  {o.seconds:.3f}s"
        lines.append(line)
        if o.message:
            notes.append(f"  {o.id}: {o.message}")
    s = report.summary
    lines.append("")
    lines.append(
        f"total {s['total']}  passed {s['passed']}  failed {s['failed']}  errored {s['errored']}"
    )
    if notes:
        lines.append("errors:")
        lines.extend(notes)
    return ("\n".join(lines) + "\n").encode()
