import math

import pytest

from logsine.errors import DomainError, IntegrandError, NonConvergenceError
from logsine.numeric_core import ToleranceSpec
from logsine.polylog import polylog_real
from logsine.quadrature import (
    Interval,
    Region2D,
    integrate_1d,
    integrate_1d_complex,
    integrate_2d,
)

PI = math.pi
UNIT = Interval(0.0, 1.0)
LEFT = Interval(0.0, 1.0, left_singular=True)


class TestOneDimensional:
    def test_examples(self):
        assert integrate_1d(lambda x: 1.0, UNIT).value == pytest.approx(1.0, abs=1e-15)
        assert integrate_1d(lambda x: math.log(x) ** 2, LEFT).value == pytest.approx(2.0, abs=1e-13)
        r = integrate_1d(lambda t: math.log(2 * math.sin(t)) ** 2, Interval(0, PI / 6, True))
        assert r.value == pytest.approx(7 * PI**3 / 216, rel=1e-12)
        assert r.converged and r.evaluations > 0

    @pytest.mark.parametrize("deg", range(7))
    def test_polynomials(self, deg):
        coeffs = [(-1) ** j * (j + 1) / 3 for j in range(deg + 1)]

        def p(x):
            return sum(c * x**j for j, c in enumerate(coeffs))

        exact = sum(c / (j + 1) for j, c in enumerate(coeffs))
        assert abs(integrate_1d(p, UNIT).value - exact) < 1e-13

    def test_zero_valued_integral_converges(self):
        r = integrate_1d(lambda x: x - 0.5, UNIT, ToleranceSpec(abs_tol=1e-300, rel_tol=1e-12))
        assert r.converged and abs(r.value) < 1e-15

    def test_linearity(self):
        def f(x):
            return math.log(x) * math.sqrt(x)

        def g(x):
            return math.exp(-x) / math.sqrt(x)

        rf, rg = integrate_1d(f, LEFT), integrate_1d(g, LEFT)
        rh = integrate_1d(lambda x: 2.5 * f(x) - 0.75 * g(x), LEFT)
        bound = 2.5 * rf.error_estimate + 0.75 * rg.error_estimate + rh.error_estimate
        assert abs(rh.value - (2.5 * rf.value - 0.75 * rg.value)) <= bound + 1e-15

    def test_singularity_suite(self):
        assert integrate_1d(math.log, LEFT).value == pytest.approx(-1.0, abs=1e-10)
        for n in (0, 1, 2, 5):
            r = integrate_1d(lambda x: x**n * math.log(x) ** 2, LEFT)
            assert r.value == pytest.approx(2 / (n + 1) ** 3, abs=1e-10)
        r = integrate_1d(lambda x: 1 / math.sqrt(4 - x * x), UNIT)
        assert r.value == pytest.approx(PI / 6, abs=1e-10)

    def test_inverse_sqrt_with_distances(self):
        r = integrate_1d(
            lambda x, left, right: 1 / math.sqrt(right * (1 + x)),
            Interval(0.0, 1.0, right_singular=True),
            distances=True,
        )
        assert r.value == pytest.approx(PI / 2, rel=1e-13)

    def test_converged_estimate_within_tolerance(self):
        tol = ToleranceSpec(abs_tol=1e-300, rel_tol=1e-10)
        r = integrate_1d(lambda x: math.log(x) / (1 + x), LEFT, tol)
        assert r.converged and tol.accepts(r.error_estimate, r.value)
        assert r.value == pytest.approx(-PI**2 / 12, rel=1e-12)

    def test_deterministic(self):
        f = lambda x: math.atan(x) * math.log(x)  # noqa: E731
        assert integrate_1d(f, LEFT) == integrate_1d(f, LEFT)

    def test_nonconvergence(self):
        with pytest.raises(NonConvergenceError) as info:
            integrate_1d(lambda x: math.sin(200 * x), UNIT, max_level=3)
        assert info.value.partial.converged is False

    def test_nonstrict_returns_flag(self):
        r = integrate_1d(lambda x: math.sin(200 * x), UNIT, max_level=3, strict=False)
        assert not r.converged

    def test_nonfinite_integrand(self):
        with pytest.raises(IntegrandError):
            integrate_1d(lambda x: math.inf if x > 0.3 else 1.0, UNIT)

    @pytest.mark.parametrize("a,b", [(1.0, 0.0), (0.0, math.inf), (2.0, 2.0)])
    def test_bad_interval(self, a, b):
        with pytest.raises(DomainError):
            Interval(a, b)

    def test_improper_transform_halves_agree(self):
        def g(s, left, right):
            p = left * right
            return polylog_real(3, math.sqrt(p)) / p

        lo = integrate_1d(g, Interval(0.0, 0.5, left_singular=True), distances=True)
        hi = integrate_1d(g, Interval(0.5, 1.0, right_singular=True), distances=True)
        assert abs(lo.value - hi.value) < 1e-9


class TestComplex:
    def test_constant(self):
        r = integrate_1d_complex(lambda t: 1j, UNIT)
        assert r.value == pytest.approx(1j, abs=1e-15)

    def test_i3(self):
        def f(t):
            w = complex(2 * math.sin(t) ** 2, -math.sin(2 * t))
            lw = complex(math.log(abs(w)), math.atan2(w.imag, w.real))
            return lw * lw

        r = integrate_1d_complex(f, Interval(0, PI / 6, True))
        assert r.value.real == pytest.approx(PI**3 / 324, rel=1e-12)

    def test_i2(self):
        def f(t):
            w = complex(2 * math.sin(t) ** 2, -math.sin(2 * t))
            lw = complex(math.log(abs(w)), math.atan2(w.imag, w.real))
            return 1j * (PI - 2 * t) * lw

        r = integrate_1d_complex(f, Interval(0, PI / 6, True))
        assert r.value.real == pytest.approx(19 * PI**3 / 324, rel=1e-12)


class TestTwoDimensional:
    def test_triangle_area(self):
        r = integrate_2d(lambda x, y: 1.0, Region2D("lower_triangle"))
        assert r.value == pytest.approx(0.5, abs=1e-14)

    def test_square_polynomial(self):
        r = integrate_2d(lambda x, y: x * y * y, Region2D("unit_square"))
        assert r.value == pytest.approx(1 / 6, abs=1e-14)

    def test_apostol(self):
        r = integrate_2d(
            lambda x, y, dx, dy: 1 / (dx[1] + x * dy[1]),
            Region2D("unit_square"),
            ToleranceSpec(1e-300, 1e-10),
            distances=True,
        )
        assert r.value == pytest.approx(PI**2 / 6, rel=1e-10)

    def test_inner_failure_is_tagged(self):
        with pytest.raises(NonConvergenceError, match="inner"):
            integrate_2d(lambda x, y: math.sin(300 * y), Region2D("unit_square"), max_level=3)

    def test_inner_nonfinite_tagged(self):
        with pytest.raises(IntegrandError) as info:
            integrate_2d(lambda x, y: math.nan, Region2D("unit_square"))
        assert info.value.axis == "inner"

    def test_bad_region(self):
        with pytest.raises(DomainError):
            Region2D("disk")
