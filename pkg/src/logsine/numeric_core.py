"""Complex arithmetic conventions, binomial primitives and tolerances.

Complex values are plain Python :class:`complex` numbers.  The principal
argument follows the half-open range ``[-pi, pi)``, so the negative real
axis maps to ``-pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RangeOverflowError

__all__ = [
    "ToleranceSpec",
    "CENTRAL_BINOMIAL_MAX_N",
    "principal_arg",
    "complex_log",
    "complex_exp_itheta",
    "log_sine_expansion",
    "generalized_binomial",
    "central_binomial",
    "beta_numeric",
    "check_finite",
]

# Largest n with C(2n, n) below the double-precision maximum.
CENTRAL_BINOMIAL_MAX_N = 514


@dataclass(frozen=True)
class ToleranceSpec:
    """Absolute/relative tolerance pair.

    A quantity ``err`` meets the tolerance for a value ``v`` when
    ``err <= max(abs_tol, rel_tol * |v|)``.
    """

    abs_tol: float = 0.0
    rel_tol: float = 0.0

    def __post_init__(self) -> None:
        for name in ("abs_tol", "rel_tol"):
            val = getattr(self, name)
            if not math.isfinite(val) or val < 0:
                raise DomainError(f"{name} must be finite and >= 0, got {val!r}")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise DomainError("at least one of abs_tol, rel_tol must be positive")

    def target(self, value: float | complex) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))

    def accepts(self, error: float, value: float | complex) -> bool:
        return error <= self.target(value)


def check_finite(z: complex | float, what: str = "value") -> complex:
    """Return ``z`` as a complex, raising DomainError on NaN or infinity."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{what} must be finite, got {z!r}")
    return z


def principal_arg(z: complex | float) -> float:
    """Quadrant-correct argument of ``z`` in ``[-pi, pi)``.

    >>> principal_arg(-1)
    -3.141592653589793
    """
    z = check_finite(z, "z")
    if z == 0:
        raise DomainError("argument of zero is undefined")
    theta = math.atan2(z.imag, z.real)
    if theta == math.pi:
        theta = -math.pi
    return theta


def complex_log(z: complex | float) -> complex:
    """Principal logarithm ``ln|z| + i arg(z)``."""
    z = check_finite(z, "z")
    if z == 0:
        raise DomainError("logarithm of zero is undefined")
    return complex(math.log(abs(z)), principal_arg(z))


def complex_exp_itheta(theta: float) -> complex:
    """Point ``cos(theta) + i sin(theta)`` on the unit circle."""
    if not math.isfinite(theta):
        raise DomainError(f"theta must be finite, got {theta!r}")
    return complex(math.cos(theta), math.sin(theta))


def log_sine_expansion(t: float) -> complex:
    """Evaluate ``log(1 - e^{2it}) + i(pi/2 - t)`` for ``t`` in ``(0, pi)``.

    The real part is ``ln(2 sin t)`` and the imaginary part vanishes up to
    rounding.  ``Re(1 - e^{2it}) = 2 sin^2 t >= 0`` on this interval, so the
    principal branch cut is never crossed.
    """
    if not (0.0 < t < math.pi):
        raise DomainError(f"t must lie in (0, pi), got {t!r}")
    # 1 - e^{2it} = 2 sin^2 t - i sin 2t, without the cancellation in 1 - cos 2t
    s = math.sin(t)
    w = complex(2.0 * s * s, -math.sin(2.0 * t))
    return complex_log(w) + complex(0.0, math.pi / 2 - t)


def generalized_binomial(alpha: float, k: int) -> float:
    """Generalized binomial coefficient ``alpha (alpha-1) ... (alpha-k+1) / k!``.

    The product is formed exactly in rational arithmetic (every float is a
    dyadic rational) and rounded once, so integer ``alpha`` gives the exact
    classical coefficient.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")
    if not math.isfinite(alpha):
        raise DomainError(f"alpha must be finite, got {alpha!r}")
    a = Fraction(alpha)
    num = Fraction(1)
    for j in range(k):
        num *= a - j
    try:
        return float(num / math.factorial(k))
    except OverflowError:
        raise RangeOverflowError(f"binomial({alpha!r}, {k}) exceeds double range") from None


def central_binomial(n: int) -> float:
    """Central binomial coefficient ``C(2n, n)`` as a correctly rounded float.

    Valid for ``0 <= n <= CENTRAL_BINOMIAL_MAX_N``.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if n > CENTRAL_BINOMIAL_MAX_N:
        raise RangeOverflowError(
            f"C(2n, n) overflows a double for n > {CENTRAL_BINOMIAL_MAX_N} (got {n})"
        )
    return float(math.comb(2 * n, n))


def beta_numeric(u: float, v: float, tol: ToleranceSpec | None = None) -> float:
    """Beta function ``B(u, v) = int_0^1 x^(u-1) (1-x)^(v-1) dx`` by quadrature.

    Both endpoints are treated as singular; the integrand is evaluated on
    the exact distances to each endpoint so ``u, v < 1`` cost no accuracy.
    """
    from .quadrature import Interval, integrate_1d

    if not (math.isfinite(u) and math.isfinite(v)) or u <= 0 or v <= 0:
        raise DomainError(f"Beta requires u > 0 and v > 0, got ({u!r}, {v!r})")
    tol = tol or ToleranceSpec(abs_tol=1e-300, rel_tol=1e-13)
    um1, vm1 = u - 1.0, v - 1.0

    def f(x: float, left: float, right: float) -> float:
        return left**um1 * right**vm1

    res = integrate_1d(f, Interval(0.0, 1.0, True, True), tol, distances=True)
    return res.value
