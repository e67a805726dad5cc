"""Registry of closed-form identities checked by the ``verify`` command.

Each entry pairs a numerical recipe for the left-hand side with a
right-hand side built only from pi, ln 2, zeta(4) and rationals.  Recipes
receive a :class:`RunConfig` so term caps and quadrature depth can be
overridden; the accuracy requested from the engines is fixed and tighter
than any default pass tolerance, so a stricter pass tolerance produces a
failure rather than extra work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import antiderivatives, binomial_series, polylog, quadrature
from .numeric_core import ToleranceSpec, complex_log
from .quadrature import Interval, Region2D

__all__ = ["RunConfig", "IdentityCase", "registry", "get_case"]

PI = math.pi

SERIES_TOL = ToleranceSpec(abs_tol=1e-12, rel_tol=1e-11)
QUAD1D_TOL = ToleranceSpec(abs_tol=1e-12, rel_tol=1e-9)
QUAD2D_TOL = ToleranceSpec(abs_tol=1e-12, rel_tol=1e-7)
CIRCLE_TOL = ToleranceSpec(abs_tol=1e-12, rel_tol=1e-7)

# Accuracy requested from the engines themselves.
_ENGINE_1D = ToleranceSpec(abs_tol=1e-300, rel_tol=1e-12)
_ENGINE_2D = ToleranceSpec(abs_tol=1e-300, rel_tol=1e-10)
_ENGINE_SERIES = ToleranceSpec(abs_tol=1e-16)
_ENGINE_LI = ToleranceSpec(abs_tol=1e-15)


@dataclass(frozen=True)
class RunConfig:
    """Overrides applied to a run; ``None`` keeps each entry's default."""

    rel_tol: float | None = None
    abs_tol: float | None = None
    max_terms: int | None = None
    quad_level: int | None = None

    def effective_tol(self, default: ToleranceSpec) -> ToleranceSpec:
        return ToleranceSpec(
            abs_tol=default.abs_tol if self.abs_tol is None else self.abs_tol,
            rel_tol=default.rel_tol if self.rel_tol is None else self.rel_tol,
        )

    def level(self) -> int:
        return quadrature.MAX_LEVEL if self.quad_level is None else self.quad_level

    def terms(self, default: int) -> int:
        return default if self.max_terms is None else self.max_terms


Recipe = Callable[[RunConfig], "tuple[float, int]"]


@dataclass(frozen=True)
class IdentityCase:
    id: str
    description: str
    lhs_recipe: Recipe
    rhs_closed_form: float
    default_tol: ToleranceSpec
    paper_anchor: str


def _log_near_one(x: float, dist: float) -> float:
    """``log x`` using the exact distance ``1 - x`` when ``x`` is near 1."""
    return math.log(x) if x < 0.5 else math.log1p(-dist)


def _log1m(x: float, dist: float) -> float:
    """``log(1 - x)`` given the exact distance ``dist = 1 - x``."""
    return math.log1p(-x) if x < 0.5 else math.log(dist)


def _li(k: int, x: float, cfg: RunConfig) -> float:
    return polylog.polylog_real(k, x, _ENGINE_LI, max_terms=cfg.terms(polylog.POLYLOG_TERM_CAP))


def _quad(f, iv: Interval, cfg: RunConfig, distances: bool = False) -> tuple[float, int]:
    res = quadrature.integrate_1d(f, iv, _ENGINE_1D, max_level=cfg.level(), distances=distances)
    return res.value, res.evaluations


def _quad_complex_real(f, iv: Interval, cfg: RunConfig) -> tuple[float, int]:
    res = quadrature.integrate_1d_complex(f, iv, _ENGINE_1D, max_level=cfg.level())
    return res.value.real, res.evaluations


def _quad2d(f, kind: str, cfg: RunConfig) -> tuple[float, int]:
    res = quadrature.integrate_2d(
        f, Region2D(kind), _ENGINE_2D, max_level=cfg.level(), distances=True
    )
    return res.value, res.evaluations


def _one_minus_e2it(t: float) -> complex:
    # 1 - e^{2it} = 2 sin^2 t - i sin 2t, free of cancellation near t = 0
    s = math.sin(t)
    return complex(2.0 * s * s, -math.sin(2.0 * t))


# --- series entries -------------------------------------------------------


def _b4_series(cfg: RunConfig) -> tuple[float, int]:
    r = binomial_series.b4_sum(
        _ENGINE_SERIES, max_terms=cfg.terms(binomial_series.SERIES_TERM_CAP)
    )
    return r.value, r.terms_used


def _c4_series(cfg: RunConfig) -> tuple[float, int]:
    r = binomial_series.c4_sum(
        _ENGINE_SERIES, max_terms=cfg.terms(binomial_series.SERIES_TERM_CAP)
    )
    return r.value, r.terms_used


def _b2_series(cfg: RunConfig) -> tuple[float, int]:
    r = binomial_series.b2_sum(
        _ENGINE_SERIES, max_terms=cfg.terms(binomial_series.SERIES_TERM_CAP)
    )
    return r.value, r.terms_used


# --- B(4) family ----------------------------------------------------------


def _b4_logsine(cfg: RunConfig) -> tuple[float, int]:
    def f(t: float) -> float:
        lg = math.log(2.0 * math.sin(t))
        return lg * lg

    return _quad(f, Interval(0.0, PI / 6, left_singular=True), cfg)


def _b4_rep_sqrt(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float) -> float:
        lg = math.log(x)
        return lg * lg / (2.0 * math.sqrt(1.0 - x * x / 4.0))

    return _quad(f, Interval(0.0, 1.0, left_singular=True), cfg)


def _b4_rep_arcsin(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float) -> float:
        return -2.0 * math.asin(x / 2.0) * math.log(x) / x

    return _quad(f, Interval(0.0, 1.0, left_singular=True), cfg)


def _i1(cfg: RunConfig) -> tuple[float, int]:
    def f(t: float) -> float:
        u = PI / 2 - t
        return -u * u

    return _quad(f, Interval(0.0, PI / 6), cfg)


def _i2_re(cfg: RunConfig) -> tuple[float, int]:
    def f(t: float) -> complex:
        lw = complex_log(_one_minus_e2it(t))
        return 1j * (PI - 2.0 * t) * lw

    return _quad_complex_real(f, Interval(0.0, PI / 6, left_singular=True), cfg)


def _i3_re(cfg: RunConfig) -> tuple[float, int]:
    def f(t: float) -> complex:
        lw = complex_log(_one_minus_e2it(t))
        return lw * lw

    return _quad_complex_real(f, Interval(0.0, PI / 6, left_singular=True), cfg)


def _i3_psi(cfg: RunConfig) -> tuple[float, int]:
    r = antiderivatives.i3_real_from_psi(max_terms=cfg.terms(polylog.POLYLOG_TERM_CAP))
    return r.value.real, r.terms_used


# --- C(4) family ----------------------------------------------------------


def _k_double(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float, y: float, dx: tuple, dy: tuple) -> float:
        s = x + y
        lg = math.log(s) if s < 0.5 else math.log1p(-dy[1])
        return 2.0 * lg * lg / (1.0 - x * y)

    return _quad2d(f, "lower_triangle", cfg)


def _k1(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float) -> float:
        lg = math.log(x)
        return -2.0 * lg * lg * math.log1p(x * x) / x

    return _quad(f, Interval(0.0, 1.0, left_singular=True), cfg)


def _k2(cfg: RunConfig) -> tuple[float, int]:
    # u = s/(1-s) maps [0, inf) to [0, 1); sqrt(u)/(1+u) = sqrt(s(1-s)).
    def f(s: float, left: float, right: float) -> float:
        p = left * right
        return _li(3, math.sqrt(p), cfg) / p

    return _quad(f, Interval(0.0, 1.0, True, True), cfg, distances=True)


def _k3_psi(cfg: RunConfig) -> tuple[float, int]:
    # The antiderivative tends to Li_4(1) as z -> 0.
    upper = antiderivatives.psi_long(0.5)
    limit = polylog.polylog(4, 1.0, _ENGINE_LI, max_terms=cfg.terms(polylog.POLYLOG_TERM_CAP))
    return upper - limit.value.real, limit.terms_used


def _c4_rep_arcsin(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float) -> float:
        lg = math.log(x)
        return 8.0 * math.asin(x / 2.0) * lg * lg / math.sqrt(4.0 - x * x)

    return _quad(f, Interval(0.0, 1.0, left_singular=True), cfg)


def _c4_rep_li3(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float, left: float, right: float) -> float:
        return _li(3, x * right, cfg) / x

    return _quad(f, Interval(0.0, 1.0, True, True), cfg, distances=True)


def _c4_rep_li3_inf(cfg: RunConfig) -> tuple[float, int]:
    # x = s/(1-s); x/(1+x)^2 = s(1-s) and dx/x = ds/(s(1-s)).
    def f(s: float, left: float, right: float) -> float:
        p = left * right
        return _li(3, p, cfg) / (2.0 * p)

    return _quad(f, Interval(0.0, 1.0, True, True), cfg, distances=True)


def _j_logsine(cfg: RunConfig) -> tuple[float, int]:
    def f(t: float) -> float:
        lg = math.log(2.0 * math.sin(t))
        return 8.0 * t * lg * lg

    return _quad(f, Interval(0.0, PI / 6, left_singular=True), cfg)


# --- challenging integrals --------------------------------------------------


def _log_ratio(x: float, right: float) -> float:
    """``log x / (x^2 - 1)``, finite at ``x = 1``."""
    return _log_near_one(x, right) / (-right * (1.0 + x))


def _challenge_1(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float, left: float, right: float) -> float:
        return x * math.asin(x / 2.0) * _log_ratio(x, right)

    return _quad(f, Interval(0.0, 1.0, True, True), cfg, distances=True)


def _challenge_2(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float, left: float, right: float) -> float:
        return x * math.acos(x / 2.0) * _log_ratio(x, right)

    return _quad(f, Interval(0.0, 1.0, True, True), cfg, distances=True)


def _challenge_3(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float) -> float:
        return 4.0 * _li(3, -x / (1.0 + x * x), cfg) / x

    return _quad(f, Interval(0.0, 1.0, left_singular=True), cfg)


def _challenge_4(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float, left: float, right: float) -> float:
        l1 = _log1m(x, right)
        p = x * right  # x - x^2
        return (l1 * l1 * math.log1p(-p) + 2.0 * l1 * _li(2, p, cfg)) / x

    return _quad(f, Interval(0.0, 1.0, True, True), cfg, distances=True)


# --- Apostol-style entries --------------------------------------------------


def _apostol_l2(cfg: RunConfig) -> tuple[float, int]:
    def f(x: float, y: float, dx: tuple, dy: tuple) -> float:
        # 1 - xy = (1 - x) + x (1 - y)
        return 1.0 / (dx[1] + x * dy[1])

    return _quad2d(f, "unit_square", cfg)


def _apostol_l4_residual(cfg: RunConfig) -> tuple[float, int]:
    # Outer variable u = 1 + x on [1, 2]; inner variable s on [0, 1].
    def f(x: float, s: float, dx: tuple, ds: tuple) -> float:
        u = 1.0 + x
        a = dx[1] + u * ds[1]  # 2 - u s
        q = math.sqrt(a * (2.0 + u * s))  # sqrt(4 - u^2 s^2)
        ls = _log_near_one(s, ds[1])
        return -16.0 * math.atan(dx[1] * s / q) * ls / q

    return _quad2d(f, "unit_square", cfg)


def _build() -> list[IdentityCase]:
    b4 = 7 * PI**3 / 216
    c4 = 17 * PI**4 / 3240
    cases = [
        IdentityCase("b4-series", "Central binomial series B(4)", _b4_series, b4, SERIES_TOL,
                     "B(4) identity"),
        IdentityCase("b4-logsine", "Log-sine integral of log^2(2 sin t) on [0, pi/6]",
                     _b4_logsine, b4, QUAD1D_TOL, "B(4) log-sine integral"),
        IdentityCase("b4-rep-sqrt", "B(4) as the integral of log^2 x / (2 sqrt(1 - x^2/4))",
                     _b4_rep_sqrt, b4, QUAD1D_TOL, "B(4) integral representations, first form"),
        IdentityCase("b4-rep-arcsin", "B(4) as the integral of -2 arcsin(x/2) log x / x",
                     _b4_rep_arcsin, b4, QUAD1D_TOL, "B(4) integral representations, second form"),
        IdentityCase("i1", "Elementary part I_1 of the log-sine decomposition", _i1,
                     -19 * PI**3 / 648, QUAD1D_TOL, "value of I_1"),
        IdentityCase("i2-re", "Real part of I_2, integral of i(pi - 2t) log(1 - e^{2it})",
                     _i2_re, 19 * PI**3 / 324, QUAD1D_TOL, "value of I_2"),
        IdentityCase("i3-re", "Real part of I_3, integral of log^2(1 - e^{2it})", _i3_re,
                     PI**3 / 324, QUAD1D_TOL, "real part of I_3"),
        IdentityCase("i3-psi", "Real part of I_3 from the antiderivative at e^{i pi/3}",
                     _i3_psi, PI**3 / 324, CIRCLE_TOL, "I_3 simplified"),
        IdentityCase("c4-series", "Central binomial series C(4)", _c4_series, c4, SERIES_TOL,
                     "C(4) identity"),
        IdentityCase("k-double", "Triangle double integral K of 2 log^2(x+y) / (1 - xy)",
                     _k_double, c4, QUAD2D_TOL, "double integral K"),
        IdentityCase("k1", "K_1, integral of -2 log^2 x log(1 + x^2) / x", _k1,
                     -7 * PI**4 / 1440, QUAD1D_TOL, "value of K_1"),
        IdentityCase("k2", "K_2, integral of Li_3(sqrt(u)/(1+u)) / u over [0, inf)", _k2,
                     7 * PI**4 / 216 + c4 / 4, QUAD1D_TOL, "value of K_2"),
        IdentityCase("k3-psi", "K_3 from the long antiderivative at 1/2 and its limit at 0",
                     _k3_psi, -17 * PI**4 / 720, SERIES_TOL, "value of K_3"),
        IdentityCase("c4-rep-arcsin", "C(4) as the integral of 8 arcsin(x/2) log^2 x / sqrt(4 - x^2)",
                     _c4_rep_arcsin, c4, QUAD1D_TOL, "C(4) integral representations, first form"),
        IdentityCase("c4-rep-li3", "C(4) as the integral of Li_3(x - x^2) / x", _c4_rep_li3,
                     c4, QUAD1D_TOL, "C(4) integral representations, second form"),
        IdentityCase("c4-rep-li3-inf", "C(4) as the integral of Li_3(x/(1+x)^2) / (2x) over [0, inf)",
                     _c4_rep_li3_inf, c4, QUAD1D_TOL, "C(4) integral representations, third form"),
        IdentityCase("j-logsine", "Log-sine integral of 8t log^2(2 sin t) on [0, pi/6]",
                     _j_logsine, c4, QUAD1D_TOL, "C(4) log-sine integral"),
        IdentityCase("challenge-1", "Integral of x arcsin(x/2) log x / (x^2 - 1)", _challenge_1,
                     5 * PI**3 / 1296, QUAD1D_TOL, "challenging integral 1"),
        IdentityCase("challenge-2", "Integral of x arccos(x/2) log x / (x^2 - 1)", _challenge_2,
                     11 * PI**3 / 648, QUAD1D_TOL, "challenging integral 2"),
        IdentityCase("challenge-3", "Integral of 4 Li_3(-x/(1 + x^2)) / x", _challenge_3,
                     -403 * PI**4 / 12960, QUAD1D_TOL, "challenging integral 3"),
        IdentityCase("challenge-4",
                     "Integral of [log^2(1-x) log(1-x+x^2) + 2 log(1-x) Li_2(x-x^2)] / x",
                     _challenge_4, -2 * PI**4 / 243, QUAD1D_TOL, "challenging integral 4"),
        IdentityCase("apostol-l2", "Unit-square double integral of 1 / (1 - xy)", _apostol_l2,
                     PI**2 / 6, QUAD2D_TOL, "Apostol double integral"),
        IdentityCase("apostol-b2", "Central binomial series sum 1 / (n^2 C(2n, n))", _b2_series,
                     PI**2 / 18, SERIES_TOL, "central binomial series in disguise"),
        IdentityCase("apostol-l4-residual",
                     "Residual double integral from the zeta(4) analogue of Apostol's method",
                     _apostol_l4_residual, 19 * PI**4 / 3240, QUAD2D_TOL,
                     "residual double integral (numerical check only)"),
    ]
    return sorted(cases, key=lambda c: c.id)


_REGISTRY = _build()
_BY_ID = {c.id: c for c in _REGISTRY}


def registry() -> list[IdentityCase]:
    """All identity cases, ordered lexicographically by id."""
    return list(_REGISTRY)


def get_case(case_id: str) -> IdentityCase | None:
    return _BY_ID.get(case_id)
