"""Double-exponential (tanh-sinh) quadrature on finite intervals.

The rule maps ``[a, b]`` through ``x = mid + half * tanh(pi/2 * sinh(t))``
and applies the trapezoidal rule in ``t``.  Nodes cluster doubly
exponentially at both endpoints, which absorbs integrable logarithmic and
algebraic endpoint singularities without special weights.

Refinement halves the step ``h = 2**-level`` and reuses every previous
node.  The error estimate is the difference between the last two levels;
refinement also stops once that difference is at rounding level relative
to the L1 norm of the weighted samples, which lets integrals whose value
is zero (or nearly so) converge under a purely relative tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Literal

from .errors import DomainError, IntegrandError, NonConvergenceError
from .numeric_core import ToleranceSpec

__all__ = [
    "Interval",
    "QuadratureResult",
    "Region2D",
    "MAX_LEVEL",
    "integrate_1d",
    "integrate_1d_complex",
    "integrate_2d",
]

MAX_LEVEL = 12
MIN_LEVEL = 2

_HALF_PI = 0.5 * math.pi
# Endpoint cutoffs on the canonical complement 1 - |u|.
_SINGULAR_CUTOFF = 1e-300
_REGULAR_CUTOFF = 1e-20
# sinh(t) large enough that the singular cutoff is passed.
_T_MAX = 6.2
# Multiple of eps times the L1 norm treated as converged (cancellation).
_ROUNDOFF = 8 * 2.0**-52

DEFAULT_TOL = ToleranceSpec(abs_tol=1e-300, rel_tol=1e-12)


@dataclass(frozen=True)
class Interval:
    """Finite integration interval with endpoint-singularity flags.

    A singular endpoint is approached down to the last representable node;
    a regular endpoint is cut off once the node weights are negligible.
    """

    a: float
    b: float
    left_singular: bool = False
    right_singular: bool = False

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError("interval endpoints must be finite; transform infinite ranges first")
        if not self.a < self.b:
            raise DomainError(f"interval requires a < b, got [{self.a}, {self.b}]")


@dataclass(frozen=True)
class QuadratureResult:
    value: float | complex
    error_estimate: float
    evaluations: int
    converged: bool
    level: int = 0


@dataclass(frozen=True)
class Region2D:
    """``unit_square`` is ``[0,1]^2``; ``lower_triangle`` is ``0 <= y <= 1 - x``."""

    kind: Literal["unit_square", "lower_triangle"]

    def __post_init__(self) -> None:
        if self.kind not in ("unit_square", "lower_triangle"):
            raise DomainError(f"unknown region kind {self.kind!r}")

    def y_upper(self, x: float, x_right: float) -> float:
        # x_right is the exact distance 1 - x supplied by the outer rule
        return 1.0 if self.kind == "unit_square" else x_right


@lru_cache(maxsize=None)
def _level_nodes(level: int) -> tuple[tuple[float, float], ...]:
    """Canonical nodes ``(complement, weight)`` for ``t > 0`` new at ``level``.

    ``complement`` is ``1 - tanh(pi/2 sinh t)`` evaluated without
    cancellation; ``weight`` excludes the step ``h``.
    """
    h = 2.0**-level
    start, step = (1, 1) if level == 0 else (1, 2)
    out = []
    j = start
    while True:
        t = j * h
        if t > _T_MAX:
            break
        v = _HALF_PI * math.sinh(t)
        e = math.exp(-2.0 * v)
        comp = 2.0 * e / (1.0 + e)
        weight = _HALF_PI * math.cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e))
        out.append((comp, weight))
        j += step
    return tuple(out)


def _check_tol(tol: ToleranceSpec | None) -> ToleranceSpec:
    return DEFAULT_TOL if tol is None else tol


def _tanh_sinh(
    f: Callable[..., float | complex],
    iv: Interval,
    tol: ToleranceSpec,
    max_level: int,
    distances: bool,
    is_complex: bool,
    strict: bool,
    axis: str | None = None,
) -> QuadratureResult:
    if not 1 <= max_level <= 30:
        raise DomainError(f"max_level must be in [1, 30], got {max_level}")
    a, b = iv.a, iv.b
    half = 0.5 * (b - a)
    width = b - a
    cut_left = _SINGULAR_CUTOFF if iv.left_singular else _REGULAR_CUTOFF
    cut_right = _SINGULAR_CUTOFF if iv.right_singular else _REGULAR_CUTOFF
    evals = 0

    def call(x: float, left: float, right: float) -> float | complex:
        y = f(x, left, right) if distances else f(x)
        if is_complex:
            y = complex(y)
            ok = math.isfinite(y.real) and math.isfinite(y.imag)
        else:
            y = float(y)
            ok = math.isfinite(y)
        if not ok:
            where = f" on the {axis} axis" if axis else ""
            raise IntegrandError(f"integrand is not finite at x={x!r}{where}", node=x, axis=axis)
        return y

    def side_terms(nodes, sign: int, cut: float) -> list:
        terms = []
        for comp, w in nodes:
            if comp < cut:
                break
            d = half * comp
            if sign < 0:
                x = a + d
                left, right = d, width - d
            else:
                x = b - d
                left, right = width - d, d
            if d == 0.0 or (not distances and (x <= a or x >= b)):
                break
            terms.append(w * call(x, left, right))
        return terms

    def level_sum(level: int) -> tuple[float | complex, float]:
        nonlocal evals
        nodes = _level_nodes(level)
        terms = []
        if level == 0:
            terms.append(_HALF_PI * call(a + half, half, half))
        terms += side_terms(nodes, -1, cut_left)
        terms += side_terms(nodes, +1, cut_right)
        evals += len(terms)
        l1 = math.fsum(abs(t) for t in terms)
        if is_complex:
            return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms)), l1
        return math.fsum(terms), l1

    raw, raw_l1 = level_sum(0)
    prev = raw * half
    est = math.inf
    level = 0
    for level in range(1, max_level + 1):
        part, part_l1 = level_sum(level)
        raw += part
        raw_l1 += part_l1
        scale = half * 2.0**-level
        cur = raw * scale
        if is_complex:
            est = max(abs(cur.real - prev.real), abs(cur.imag - prev.imag))
        else:
            est = abs(cur - prev)
        prev = cur
        # The level difference cannot drop below the rounding in the sum.
        floor = _ROUNDOFF * raw_l1 * scale
        if level >= MIN_LEVEL and (tol.accepts(est, cur) or est <= floor):
            return QuadratureResult(cur, est, evals, True, level)
    result = QuadratureResult(prev, est, evals, False, level)
    if strict:
        where = f" ({axis} axis)" if axis else ""
        raise NonConvergenceError(
            f"tanh-sinh did not reach tolerance by level {max_level}{where}: "
            f"estimate {est:.3e}",
            partial=result,
        )
    return result


def integrate_1d(
    f: Callable[..., float],
    iv: Interval,
    tol: ToleranceSpec | None = None,
    *,
    max_level: int = MAX_LEVEL,
    distances: bool = False,
    strict: bool = True,
) -> QuadratureResult:
    """Integrate a real function over a finite interval.

    Parameters
    ----------
    f
        Integrand ``f(x)``, or ``f(x, x - a, b - x)`` when ``distances`` is
        true.  The distances are exact near the endpoints even when ``x``
        itself has rounded onto an endpoint, which matters for algebraic
        singularities such as ``(1 - x)**-0.5``.
    iv
        Interval and endpoint-singularity flags.
    tol
        Convergence target for the level-difference estimate.
    max_level
        Finest refinement level; the step is ``2**-max_level``.
    strict
        Raise :class:`NonConvergenceError` when the target is missed;
        otherwise return a result with ``converged=False``.
    """
    return _tanh_sinh(f, iv, _check_tol(tol), max_level, distances, False, strict)


def integrate_1d_complex(
    f: Callable[..., complex],
    iv: Interval,
    tol: ToleranceSpec | None = None,
    *,
    max_level: int = MAX_LEVEL,
    distances: bool = False,
    strict: bool = True,
) -> QuadratureResult:
    """Integrate a complex-valued function of a real variable.

    Real and imaginary parts share nodes; the error estimate is the larger
    of the two component estimates.
    """
    return _tanh_sinh(f, iv, _check_tol(tol), max_level, distances, True, strict)


def integrate_2d(
    f: Callable[..., float],
    region: Region2D,
    tol: ToleranceSpec | None = None,
    *,
    max_level: int = MAX_LEVEL,
    distances: bool = False,
    strict: bool = True,
) -> QuadratureResult:
    """Iterated integral over a :class:`Region2D`, inner in ``y``, outer in ``x``.

    With ``distances`` the integrand is called as ``f(x, y, dx, dy)`` where
    ``dx = (x, 1 - x)`` and ``dy = (y, top - y)`` are exact endpoint
    distances; on the triangle ``top - y`` equals ``1 - x - y``.

    Inner integrals use a tenth of the requested tolerance and treat both of
    their endpoints as singular.  The returned estimate adds the outer
    level difference to the largest inner estimate.
    """
    tol = _check_tol(tol)
    inner_tol = ToleranceSpec(abs_tol=tol.abs_tol / 10, rel_tol=tol.rel_tol / 10)
    inner_evals = 0
    inner_err = 0.0
    inner_ok = True

    def outer(x: float, left: float, right: float) -> float:
        nonlocal inner_evals, inner_err, inner_ok
        top = region.y_upper(x, right)
        if distances:
            dx = (left, right)

            def g(y: float, yl: float, yr: float) -> float:
                return f(x, y, dx, (yl, yr))

        else:

            def g(y: float) -> float:
                return f(x, y)

        res = _tanh_sinh(
            g,
            Interval(0.0, top, True, True),
            inner_tol,
            max_level,
            distances,
            False,
            strict,
            axis="inner",
        )
        inner_evals += res.evaluations
        inner_err = max(inner_err, res.error_estimate)
        inner_ok = inner_ok and res.converged
        return res.value

    res = _tanh_sinh(
        outer, Interval(0.0, 1.0, True, True), tol, max_level, True, False, strict, axis="outer"
    )
    return QuadratureResult(
        res.value,
        res.error_estimate + inner_err,
        res.evaluations + inner_evals,
        res.converged and inner_ok,
        res.level,
    )
