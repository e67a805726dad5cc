"""Truncated central binomial series and related sums with tail bounds.

Terms of the central binomial sums are advanced by their exact ratio
``C(2n+2, n+1) = C(2n, n) * 2(2n+1)/(n+1)``, so no coefficient is ever
formed and nothing overflows.  Every successive-term ratio is below 1/4,
hence below 1/3, which gives the tail bound ``next_term * 3/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from . import kernels
from .errors import DomainError, NonConvergenceError
from .numeric_core import ToleranceSpec

__all__ = [
    "PartialSum",
    "SERIES_TERM_CAP",
    "HARMONIC_TERM_CAP",
    "b4_sum",
    "c4_sum",
    "b2_sum",
    "harmonic_h2_sum",
    "arcsine_expansion_check",
]

SERIES_TERM_CAP = 10_000
HARMONIC_TERM_CAP = 10_000_000
DEFAULT_TOL = ToleranceSpec(abs_tol=1e-16, rel_tol=0.0)

# Ratio of consecutive terms is at most 1/3, so tail <= next / (1 - 1/3).
_RATIO_TAIL = 1.5


@dataclass(frozen=True)
class PartialSum:
    value: float
    terms_used: int
    tail_bound: float


def _sum_ratio_series(
    terms: Iterator[float],
    tail_factor: Callable[[float], float],
    tol: ToleranceSpec,
    max_terms: int,
    upto: int | None,
    first_index: int,
    label: str,
) -> PartialSum:
    """Sum terms until ``tail_factor(next_term)`` meets ``tol``.

    With ``upto`` set the sum stops after index ``upto`` regardless of the
    tolerance; this yields the raw partial sums.
    """
    acc: list[float] = []
    running = 0.0
    current = next(terms)
    while True:
        acc.append(current)
        running += current
        nxt = next(terms)
        bound = tail_factor(nxt)
        index = first_index + len(acc) - 1
        done = index >= upto if upto is not None else tol.accepts(bound, running)
        if done:
            return PartialSum(math.fsum(acc), len(acc), bound)
        if len(acc) >= max_terms:
            raise NonConvergenceError(
                f"{label}: tail bound {bound:.3e} above tolerance after {len(acc)} terms",
                partial=PartialSum(math.fsum(acc), len(acc), bound),
            )
        current = nxt


def _check_upto(upto: int | None, first_index: int) -> None:
    if upto is not None and (not isinstance(upto, int) or upto < first_index):
        raise DomainError(f"partial sum index must be an integer >= {first_index}, got {upto!r}")


def _b4_terms() -> Iterator[float]:
    c = 1.0  # C(2n, n) / 16^n
    n = 0
    while True:
        m = 2 * n + 1
        yield c / (m * m * m)
        c *= 2.0 * (2 * n + 1) / ((n + 1) * 16.0)
        n += 1


def _inverse_central_terms(power: int) -> Iterator[float]:
    inv = 0.5  # 1 / C(2n, n) at n = 1
    n = 1
    while True:
        yield inv / float(n) ** power
        inv *= (n + 1) / (2.0 * (2 * n + 1))
        n += 1


def b4_sum(
    tol: ToleranceSpec | None = None, *, upto: int | None = None, max_terms: int = SERIES_TERM_CAP
) -> PartialSum:
    """``sum_{n>=0} C(2n,n) / (16^n (2n+1)^3)``, whose limit is ``7 pi^3/216``."""
    _check_upto(upto, 0)
    return _sum_ratio_series(
        _b4_terms(), lambda t: _RATIO_TAIL * t, tol or DEFAULT_TOL, max_terms, upto, 0, "B(4)"
    )


def c4_sum(
    tol: ToleranceSpec | None = None, *, upto: int | None = None, max_terms: int = SERIES_TERM_CAP
) -> PartialSum:
    """``sum_{n>=1} 1 / (n^4 C(2n,n))``, whose limit is ``17 pi^4/3240``."""
    _check_upto(upto, 1)
    return _sum_ratio_series(
        _inverse_central_terms(4),
        lambda t: _RATIO_TAIL * t,
        tol or DEFAULT_TOL,
        max_terms,
        upto,
        1,
        "C(4)",
    )


def b2_sum(
    tol: ToleranceSpec | None = None, *, upto: int | None = None, max_terms: int = SERIES_TERM_CAP
) -> PartialSum:
    """``sum_{n>=1} 1 / (n^2 C(2n,n))``, whose limit is ``pi^2/18``."""
    _check_upto(upto, 1)
    return _sum_ratio_series(
        _inverse_central_terms(2),
        lambda t: _RATIO_TAIL * t,
        tol or DEFAULT_TOL,
        max_terms,
        upto,
        1,
        "B(2)",
    )


def harmonic_h2_sum(
    tol: ToleranceSpec | None = None,
    *,
    upto: int | None = None,
    max_terms: int = HARMONIC_TERM_CAP,
) -> PartialSum:
    """``sum_{n>=1} H_n^2 / n^2`` (limit ``17 pi^4/360``).

    The tail after ``N`` terms is bounded by ``((H_N + 1)^2 + 1) / N``:
    ``H_n <= H_N + ln(n/N)`` for ``n > N`` and the resulting decreasing
    majorant integrates to exactly that.  Convergence is slow; the default
    target is a relative ``1e-5``.
    """
    _check_upto(upto, 1)
    if upto is not None:
        value, n, bound, _ = kernels.harmonic_sq_series(0.0, 0.0, upto)
        return PartialSum(value, n, bound)
    tol = tol or ToleranceSpec(rel_tol=1e-5)
    value, n, bound, ok = kernels.harmonic_sq_series(tol.abs_tol, tol.rel_tol, max_terms)
    result = PartialSum(value, n, bound)
    if not ok:
        raise NonConvergenceError(
            f"H_n^2/n^2: tail bound {bound:.3e} above tolerance after {n} terms", partial=result
        )
    return result


def arcsine_expansion_check(
    x: float,
    tol: ToleranceSpec | None = None,
    *,
    upto: int | None = None,
    max_terms: int = 1_000_000,
) -> PartialSum:
    """Right-hand side ``sum_{n>=1} x^(2n-1) / (2n C(2n,n))`` of the arcsine expansion.

    The limit is ``arcsin(x/2) / sqrt(4 - x^2)``.  Consecutive terms shrink
    by less than ``x^2/4``, so the tail is at most ``next / (1 - x^2/4)``.
    """
    if not (math.isfinite(x) and 0.0 < abs(x) < 2.0):
        raise DomainError(f"arcsine expansion needs 0 < |x| < 2, got {x!r}")
    _check_upto(upto, 1)
    x2 = x * x
    factor = 1.0 / (1.0 - x2 / 4.0)

    def terms() -> Iterator[float]:
        t = x / 4.0
        n = 1
        while True:
            yield t
            t *= x2 * n / (2.0 * (2 * n + 1))
            n += 1

    return _sum_ratio_series(
        terms(), lambda t: factor * abs(t), tol or DEFAULT_TOL, max_terms, upto, 1, "arcsine"
    )
