"""Closed-form antiderivatives of two polylogarithmic integrands.

``psi_small`` is an antiderivative of ``log^2(1 - z)/z``; ``psi_long`` is an
antiderivative of ``(log(z/(1-z)) Li_2(z) - 2 Li_3(z)) / (z - z^2)``.  Both
are checked numerically by central differences rather than symbolically.
"""

from __future__ import annotations

import enum
import math
from typing import Callable

from .errors import DomainError
from .numeric_core import ToleranceSpec, check_finite, complex_exp_itheta, complex_log
from .polylog import POLYLOG_TERM_CAP, SeriesEvaluation, li2_half_closed, polylog, polylog_real

__all__ = [
    "PsiKind",
    "FD_STEP",
    "psi_small",
    "psi_small_series",
    "psi_small_integrand",
    "i3_real_from_psi",
    "psi_long",
    "psi_long_integrand",
    "k3_closed_combination",
    "central_difference",
]

FD_STEP = 1e-6

# Unit-circle polylogs converge like 1/N^k; 1e-12 keeps Li_2 near 1.4e6 terms.
_CIRCLE_TOL = ToleranceSpec(abs_tol=1e-12)
# Absolute accuracy aimed at for each weighted term of psi_long.
_TERM_TARGET = 1e-16
_CIRCLE_SLACK = 4 * 2.0**-52


def psi_small_series(
    z: complex | float,
    tol: ToleranceSpec | None = None,
    *,
    max_terms: int = POLYLOG_TERM_CAP,
) -> SeriesEvaluation:
    """``psi_small`` together with the polylog terms used and a propagated tail bound."""
    z = complex(check_finite(z, "z"))
    r = abs(z)
    if z == 0 or r > 1.0 + _CIRCLE_SLACK:
        raise DomainError(f"psi_small needs 0 < |z| <= 1, got {z!r}")
    if z == 1:
        raise DomainError("psi_small is singular at z = 1; its limit there is 0")
    w = 1 - z
    lz = complex_log(z)
    lw = complex_log(w)
    li2 = polylog(2, w, tol, max_terms=max_terms)
    li3 = polylog(3, w, tol, max_terms=max_terms)
    value = lz * lw * lw + 2 * li2.value * lw - 2 * li3.value
    bound = 2 * abs(lw) * li2.tail_bound + 2 * li3.tail_bound
    return SeriesEvaluation(value, li2.terms_used + li3.terms_used, bound)


def psi_small(z: complex | float, tol: ToleranceSpec | None = None) -> complex:
    """``log z log^2(1-z) + 2 Li_2(1-z) log(1-z) - 2 Li_3(1-z)``.

    Valid for ``0 < |z| < 1`` and for unit-circle points other than 1; in
    both cases ``1 - z`` must lie in the closed unit disk, which the polylog
    evaluation enforces.

    Raises:
        DomainError: if ``z`` is 0, outside the closed disk, equal to 1, or
            if ``1 - z`` leaves the disk.
    """
    return psi_small_series(z, tol).value


def psi_small_integrand(z: complex | float) -> complex:
    """``log^2(1 - z) / z``."""
    z = complex(z)
    lw = complex_log(1 - z)
    return lw * lw / z


def i3_real_from_psi(
    tol: ToleranceSpec | None = None, *, max_terms: int = POLYLOG_TERM_CAP
) -> SeriesEvaluation:
    """Real part of ``int_0^{pi/6} log^2(1 - e^{2it}) dt`` by the fundamental theorem.

    With ``z = e^{2it}`` the integral is ``(psi(e^{i pi/3}) - psi(1)) / (2i)``
    and ``psi(1) = 0`` as a limit, so only the upper endpoint is evaluated.
    The result is real; ``terms_used`` and ``tail_bound`` come from the
    unit-circle polylogarithms.
    """
    upper = psi_small_series(complex_exp_itheta(math.pi / 3), tol or _CIRCLE_TOL, max_terms=max_terms)
    lower = 0.0
    value = (upper.value / 2j).real - lower
    return SeriesEvaluation(complex(value, 0.0), upper.terms_used, upper.tail_bound / 2)


def _weighted(k: int, x: float, coef: float) -> float:
    """``coef * Li_k(x)`` summed only as far as the coefficient requires."""
    if coef == 0.0:
        return 0.0
    tol = ToleranceSpec(abs_tol=_TERM_TARGET / abs(coef))
    return coef * polylog_real(k, x, tol)


def psi_long(z: float) -> float:
    """Antiderivative of ``(log(z/(1-z)) Li_2(z) - 2 Li_3(z)) / (z - z^2)`` on ``(0, 1/2]``.

    The twenty terms are summed as printed except that the ``Li_2`` and
    ``Li_3`` terms at ``z/(z-1)`` are grouped by their common factors
    ``(log z - log(1-z))^2`` and ``2 (log(1-z) - log z)``; both vanish at
    ``z = 1/2``, where ``z/(z-1) = -1`` and those series converge slowest.
    """
    if isinstance(z, complex) or not (0.0 < z <= 0.5):
        raise DomainError(f"psi_long is verified on (0, 1/2] only, got {z!r}")
    z = float(z)
    a = math.log(z)
    b = math.log1p(-z)
    w = z / (z - 1.0)
    li2_z = polylog_real(2, z)
    d = a - b
    terms = [
        b**4 / 4,
        -a * b**3 / 2,
        a * a * b * b / 2,
        li2_z * li2_z,
        _weighted(2, 1.0 - z, b * b / 2),
        li2_z * b * b / 2,
        li2_z * a * a,
        -li2_z * a * b,
        _weighted(2, w, d * d),
        _weighted(3, 1.0 - z, -b),
        _weighted(3, z, 2 * b - a),
        _weighted(3, w, -2 * d),
        _weighted(4, 1.0 - z, 1.0),
        _weighted(4, z, -1.0),
        _weighted(4, w, 2.0),
    ]
    return math.fsum(terms)


def psi_long_integrand(z: float) -> float:
    """``(log(z/(1-z)) Li_2(z) - 2 Li_3(z)) / (z - z^2)`` for ``z`` in ``(0, 1)``."""
    if not (0.0 < z < 1.0):
        raise DomainError(f"integrand defined on (0, 1), got {z!r}")
    lg = math.log(z) - math.log1p(-z)
    return (lg * polylog_real(2, z) - 2 * polylog_real(3, z)) / (z - z * z)


def k3_closed_combination() -> float:
    """``2 Li_4(-1) + Li_2(1/2)^2 + ln^2 2 Li_2(1/2) + ln^4 2 / 4 - Li_4(1)``.

    ``Li_4(+-1)`` come from the series; ``Li_2(1/2)`` from its closed form.
    """
    ln2 = math.log(2.0)
    l2 = li2_half_closed()
    tol = ToleranceSpec(abs_tol=1e-15)
    li4_m1 = polylog_real(4, -1.0, tol)
    li4_1 = polylog_real(4, 1.0, tol)
    return math.fsum([2 * li4_m1, l2 * l2, ln2 * ln2 * l2, ln2**4 / 4, -li4_1])


def central_difference(
    f: Callable[[complex], complex], z: complex | float, h: float = FD_STEP
) -> complex:
    """Symmetric difference quotient ``(f(z+h) - f(z-h)) / (2h)`` along the real axis."""
    return (f(z + h) - f(z - h)) / (2 * h)


class PsiKind(enum.Enum):
    """Which antiderivative formula is meant."""

    SMALL = "small"
    LONG = "long"

    @property
    def antiderivative(self) -> Callable:
        return psi_small if self is PsiKind.SMALL else psi_long

    @property
    def integrand(self) -> Callable:
        return psi_small_integrand if self is PsiKind.SMALL else psi_long_integrand

