"""Polylogarithms on the closed unit disk, zeta/eta values, Clausen functions.

Series are truncated adaptively against a rigorous tail bound, the
smallest of the bounds that apply at the argument ``z = r e^{i theta}``:

* geometric, ``r^(N+1) / ((N+1)^k (1 - r))`` when ``r < 1``;
* integral test, ``N^(1-k) / (k - 1)`` when ``k >= 2``;
* Abel summation, ``r^(N+1) / ((N+1)^k |sin(theta/2)|)`` when
  ``theta`` is not a multiple of ``2 pi`` (the partial sums of
  ``e^{i n theta}`` are bounded by ``1/|sin(theta/2)|`` and the
  coefficients decrease).  At ``z = -1`` this is the alternating-series
  bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from . import kernels
from .errors import DivergenceError, DomainError, NonConvergenceError
from .numeric_core import ToleranceSpec, check_finite, complex_log, principal_arg

__all__ = [
    "SeriesEvaluation",
    "POLYLOG_TERM_CAP",
    "DEFAULT_SERIES_TOL",
    "ZETA2",
    "ZETA4",
    "polylog",
    "polylog_real",
    "zeta",
    "eta",
    "clausen_series",
    "clausen_closed",
    "li2_half_closed",
]

POLYLOG_TERM_CAP = 20_000_000
DEFAULT_SERIES_TOL = ToleranceSpec(abs_tol=1e-14, rel_tol=0.0)

ZETA2 = math.pi**2 / 6
ZETA4 = math.pi**4 / 90

# |z| within this of 1 is treated as a point of the unit circle.
_CIRCLE_SLACK = 4 * 2.0**-52


@dataclass(frozen=True)
class SeriesEvaluation:
    """Truncated series value with the number of terms and a tail bound."""

    value: complex
    terms_used: int
    tail_bound: float


def _order(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"polylogarithm order must be an integer >= 1, got {k!r}")
    return k


def _run_kernel(
    z: complex,
    theta: float,
    k: int,
    trig: bool,
    tol: ToleranceSpec,
    max_terms: int,
    component: int,
    label: str,
) -> SeriesEvaluation:
    re, im, n, bound, ok = kernels.li_series(
        z.real, z.imag, theta, k, trig, tol.abs_tol, tol.rel_tol, max_terms, component
    )
    ev = SeriesEvaluation(complex(re, im), n, bound)
    if not ok:
        raise NonConvergenceError(
            f"{label}: tail bound {bound:.3e} still above tolerance after {n} terms",
            partial=ev,
        )
    return ev


def polylog(
    k: int,
    z: complex | float,
    tol: ToleranceSpec | None = None,
    *,
    max_terms: int = POLYLOG_TERM_CAP,
) -> SeriesEvaluation:
    """Evaluate ``Li_k(z) = sum z^n / n^k`` for ``|z| <= 1``.

    ``Li_1`` on the unit circle is returned from ``-log(1 - z)`` with
    ``terms_used=1`` and a zero tail bound, since the series only converges
    conditionally there.

    Raises
    ------
    DivergenceError
        For ``k == 1`` and ``z == 1``.
    NonConvergenceError
        When ``max_terms`` is reached before the tail bound meets ``tol``.
    """
    k = _order(k)
    z = check_finite(z, "z")
    tol = tol or DEFAULT_SERIES_TOL
    r = abs(z)
    if r > 1.0 + _CIRCLE_SLACK:
        raise DomainError(f"|z| must be <= 1, got |z| = {r!r}")
    if z == 0:
        return SeriesEvaluation(0j, 1, 0.0)
    on_circle = r >= 1.0 - _CIRCLE_SLACK
    if k == 1 and z == 1:
        raise DivergenceError("Li_1(1) is the harmonic series and diverges")
    theta = principal_arg(z)
    if k == 1 and on_circle:
        return SeriesEvaluation(-complex_log(1 - z), 1, 0.0)
    # Real points of the circle keep exact +-1 powers via the recurrence.
    trig = on_circle and z.imag != 0.0
    if trig:
        z = complex(math.cos(theta), math.sin(theta))
    return _run_kernel(z, theta, k, trig, tol, max_terms, 0, f"Li_{k}({z})")


def polylog_real(
    k: int,
    x: float,
    tol: ToleranceSpec | None = None,
    *,
    max_terms: int = POLYLOG_TERM_CAP,
) -> float:
    """``Li_k(x)`` for real ``x`` in ``[-1, 1]`` as a float."""
    if isinstance(x, complex) or not -1.0 <= x <= 1.0:
        raise DomainError(f"real polylogarithm needs x in [-1, 1], got {x!r}")
    ev = polylog(k, float(x), tol, max_terms=max_terms)
    assert abs(ev.value.imag) < 1e-14, ev
    return ev.value.real


def zeta(k: int, tol: ToleranceSpec | None = None) -> float:
    """Riemann zeta at an integer ``k >= 2``.

    ``k = 2`` and ``k = 4`` return ``pi^2/6`` and ``pi^4/90``; other orders
    are summed directly with the integral-test bound.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise DomainError(f"zeta is defined here for integers k >= 2, got {k!r}")
    if k == 2:
        return ZETA2
    if k == 4:
        return ZETA4
    return polylog_real(k, 1.0, tol or ToleranceSpec(abs_tol=1e-13))


def eta(k: int, tol: ToleranceSpec | None = None) -> float:
    """``Li_k(-1) = sum (-1)^n / n^k``; note the sign convention ``eta(1) = -ln 2``."""
    k = _order(k)
    return polylog_real(k, -1.0, tol or ToleranceSpec(abs_tol=1e-13))


def clausen_series(
    kind: Literal["cos", "sin"],
    k: int,
    theta: float,
    tol: ToleranceSpec | None = None,
    *,
    max_terms: int = POLYLOG_TERM_CAP,
) -> SeriesEvaluation:
    """Clausen series ``sum cos(n theta)/n^k`` or ``sum sin(n theta)/n^k``.

    The returned value is real (stored in a complex with zero imaginary
    part).  The cosine kind needs ``k >= 2``; the sine kind with ``k = 1``
    needs ``theta`` off the multiples of ``2 pi``.
    """
    k = _order(k)
    if kind not in ("cos", "sin"):
        raise DomainError(f"kind must be 'cos' or 'sin', got {kind!r}")
    if not math.isfinite(theta):
        raise DomainError(f"theta must be finite, got {theta!r}")
    if kind == "cos" and k < 2:
        raise DomainError("the cosine Clausen series needs k >= 2")
    if k == 1 and math.sin(0.5 * theta) == 0.0:
        raise DomainError("S_1 is only summed for theta off the multiples of 2 pi")
    tol = tol or DEFAULT_SERIES_TOL
    component = 1 if kind == "cos" else 2
    z = complex(math.cos(theta), math.sin(theta))
    ev = _run_kernel(z, theta, k, True, tol, max_terms, component, f"{kind} Clausen({k}, {theta})")
    part = ev.value.real if kind == "cos" else ev.value.imag
    return SeriesEvaluation(complex(part, 0.0), ev.terms_used, ev.tail_bound)


def clausen_closed(which: Literal["S1", "C2", "S3", "C4"], t: float) -> float:
    """Polynomial closed forms of ``S_1, C_2, S_3, C_4`` at ``2t`` for ``t`` in ``(0, pi)``."""
    if not (0.0 < t < math.pi):
        raise DomainError(f"closed Clausen forms hold for t in (0, pi), got {t!r}")
    pi = math.pi
    if which == "S1":
        return pi / 2 - t
    if which == "C2":
        return ZETA2 - pi * t + t * t
    if which == "S3":
        return pi * pi * t / 3 - pi * t * t + 2 * t**3 / 3
    if which == "C4":
        return ZETA4 - pi * pi * t * t / 3 + 2 * pi * t**3 / 3 - t**4 / 3
    raise DomainError(f"unknown closed form {which!r}; expected S1, C2, S3 or C4")


def li2_half_closed() -> float:
    """``Li_2(1/2) = pi^2/12 - ln^2(2)/2``."""
    ln2 = math.log(2.0)
    return ZETA2 / 2 - ln2 * ln2 / 2
