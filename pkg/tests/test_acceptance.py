"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line.  Run directly with
``python3 tests/test_acceptance.py`` for just the summary lines, or under
pytest (``pytest tests/test_acceptance.py -s``).
"""

from __future__ import annotations

import math
import random
import subprocess
import sys
import time

import pytest

from logsine.antiderivatives import (
    central_difference,
    psi_long,
    psi_long_integrand,
    psi_small,
    psi_small_integrand,
)
from logsine.binomial_series import harmonic_h2_sum
from logsine.identities import RunConfig
from logsine.numeric_core import (
    ToleranceSpec,
    beta_numeric,
    central_binomial,
    generalized_binomial,
)
from logsine.polylog import clausen_closed, clausen_series, eta, polylog, polylog_real, zeta
from logsine.verifier import run_identity

PI = math.pi
B4 = 7 * PI**3 / 216
C4 = 17 * PI**4 / 3240
RUNTIME_BUDGET = 60.0


def _emit(number: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    sys.__stdout__.write(line + "\n")
    sys.__stdout__.flush()


def _rel(o) -> float:
    return math.inf if o.rel_error is None else o.rel_error


def criterion_1():
    o = run_identity("b4-series")
    ok = o.status == "pass" and _rel(o) <= 1e-11 and o.work <= 60
    return ok, f"b4-series rel_error {_rel(o):.2e} <= 1e-11 with {o.work} terms (<= 60)"


def criterion_2():
    o = run_identity("c4-series")
    ok = o.status == "pass" and _rel(o) <= 1e-11 and o.work <= 60
    return ok, f"c4-series rel_error {_rel(o):.2e} <= 1e-11 with {o.work} terms (<= 60)"


def criterion_3():
    outs = [run_identity(i) for i in ("b4-logsine", "b4-rep-sqrt", "b4-rep-arcsin")]
    worst = max(_rel(o) for o in outs)
    ok = all(abs(o.rhs_value - B4) <= 1e-15 for o in outs) and worst <= 1e-9
    return ok, f"B(4) integral forms, worst rel_error {worst:.2e} <= 1e-9"


def criterion_4():
    outs = [run_identity(i) for i in ("i1", "i2-re", "i3-re")]
    if any(o.lhs_value is None for o in outs):
        return False, "an I_j integral errored"
    err = abs(sum(o.lhs_value for o in outs) - B4)
    return err <= 1e-8, f"i1 + i2-re + i3-re vs 7pi^3/216, abs error {err:.2e} <= 1e-8"


def criterion_5():
    kd = run_identity("k-double")
    ks = [run_identity(i) for i in ("k1", "k2", "k3-psi")]
    closed = (-7 * PI**4 / 1440, 7 * PI**4 / 216 + C4 / 4, -17 * PI**4 / 720)
    rhs_ok = all(abs(o.rhs_value - c) <= 1e-14 * abs(c) for o, c in zip(ks, closed))
    worst = max(_rel(o) for o in ks)
    if any(o.lhs_value is None for o in ks):
        return False, "a K_j entry errored"
    assembly = sum(o.lhs_value for o in ks) - C4 / 4
    asm_err = abs(assembly - 17 * PI**4 / 4320)
    ok = _rel(kd) <= 1e-7 and rhs_ok and worst <= 1e-8 and asm_err <= 1e-8
    return ok, (
        f"k-double rel {_rel(kd):.2e} <= 1e-7; k1/k2/k3 worst rel {worst:.2e} <= 1e-8; "
        f"K1+K2+K3-C(4)/4 vs 17pi^4/4320 abs {asm_err:.2e} <= 1e-8"
    )


def criterion_6():
    closed = (5 * PI**3 / 1296, 11 * PI**3 / 648, -403 * PI**4 / 12960, -2 * PI**4 / 243)
    outs = [run_identity(f"challenge-{j}") for j in range(1, 5)]
    rhs_ok = all(abs(o.rhs_value - c) <= 1e-14 * abs(c) for o, c in zip(outs, closed))
    worst = max(_rel(o) for o in outs)
    return rhs_ok and worst <= 1e-8, f"challenge-1..4 worst rel_error {worst:.2e} <= 1e-8"


def criterion_7():
    l2, b2, l4 = (run_identity(i) for i in ("apostol-l2", "apostol-b2", "apostol-l4-residual"))
    ok = _rel(l2) <= 1e-7 and _rel(b2) <= 1e-11 and _rel(l4) <= 1e-6
    return ok, (
        f"apostol-l2 rel {_rel(l2):.2e} <= 1e-7, apostol-b2 rel {_rel(b2):.2e} <= 1e-11, "
        f"apostol-l4-residual rel {_rel(l4):.2e} <= 1e-6"
    )


def _property_suites() -> dict[str, float]:
    """Worst residual per suite, each to be compared with its own limit."""
    rng = random.Random(20240601)
    h = 1e-6
    worst: dict[str, float] = {}

    d = 0.0
    for _ in range(20):
        r = 0.8 * math.sqrt(rng.random())
        a = rng.uniform(-PI, PI)
        z = complex(r * math.cos(a), r * math.sin(a))
        for k in (2, 3, 4):
            fd = (polylog(k, z + h).value - polylog(k, z - h).value) / (2 * h)
            d = max(d, abs(fd - polylog(k - 1, z).value / z))
    worst["polylog derivative (<= 1e-7)"] = d / 1e-7

    d = 0.0
    for j in range(20):
        x = 0.95 * (j + 1) / 20
        for k in (1, 2, 3, 4):
            lhs = polylog_real(k, -x)
            rhs = polylog_real(k, x * x) / 2 ** (k - 1) - polylog_real(k, x)
            d = max(d, abs(lhs - rhs))
    worst["negative argument (<= 1e-10)"] = d / 1e-10

    d = max(abs(eta(k) + (1 - 2.0 ** (1 - k)) * zeta(k)) for k in (2, 3, 4, 5))
    worst["eta-zeta (<= 1e-10)"] = d / 1e-10

    # Clausen: ratio of excess over (tail bound + 1e-9); <= 1 passes.
    d = 0.0
    for which, kind, k, tol in (("S1", "sin", 1, 1e-5), ("C2", "cos", 2, 1e-9),
                                ("S3", "sin", 3, 1e-12), ("C4", "cos", 4, 1e-12)):
        for j in range(50):
            t = 0.05 + j * (PI - 0.1) / 49
            ev = clausen_series(kind, k, 2 * t, ToleranceSpec(abs_tol=tol))
            d = max(d, abs(clausen_closed(which, t) - ev.value.real) / (ev.tail_bound + 1e-9))
    worst["Clausen closed vs series (<= tail + 1e-9)"] = d

    d = 0.0
    for n in range(21):
        lhs = generalized_binomial(-0.5, n)
        rhs = (-1) ** n * 4.0**-n * central_binomial(n)
        d = max(d, abs(lhs - rhs) / abs(rhs) / 1e-13)
    for n in range(1, 9):
        d = max(d, abs(beta_numeric(n, n) * n * central_binomial(n) - 2) / 2 / 1e-9)
    for n in range(7):
        u = (2 * n + 1) / 2
        d = max(d, abs(beta_numeric(u, u) * 16.0**n / central_binomial(n) - PI) / PI / 1e-9)
    worst["Beta/binomial identities"] = d

    d = 0.0
    for j in range(10):
        z = 0.1 + 0.8 * j / 9
        d = max(d, abs(central_difference(psi_small, z) - psi_small_integrand(z)))
    for z in (0.3 + 0.4j, 0.5 - 0.6j, 0.05 + 0.2j, 0.7 + 0.1j, 0.4 - 0.2j):
        d = max(d, abs(central_difference(psi_small, z) - psi_small_integrand(z)))
    for j in range(8):
        z = 0.05 + 0.4 * j / 7
        d = max(d, abs(central_difference(psi_long, z) - psi_long_integrand(z)))
    worst["antiderivative finite differences (<= 1e-6)"] = d / 1e-6
    return worst


def criterion_8():
    worst = _property_suites()
    bad = [name for name, ratio in worst.items() if not ratio <= 1.0]
    ratio = max(worst.values())
    detail = f"{len(worst)} property suites, worst residual/limit ratio {ratio:.2e}"
    if bad:
        detail += "; failing: " + ", ".join(bad)
    return not bad, detail


def criterion_9():
    r = harmonic_h2_sum(ToleranceSpec(rel_tol=1e-5))
    exact = 17 * PI**4 / 360
    rel = abs(r.value - exact) / exact
    return rel <= 1e-4, f"sum H_n^2/n^2 rel_error {rel:.2e} <= 1e-4 after {r.terms_used} terms"


def _verify_json() -> tuple[bytes, float]:
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "logsine", "all", "--format", "json"], capture_output=True, check=False
    )
    return proc.stdout, time.perf_counter() - start


def criterion_10():
    first, t1 = _verify_json()
    second, t2 = _verify_json()
    same = first == second and len(first) > 0
    ok = same and max(t1, t2) <= RUNTIME_BUDGET
    return ok, (
        f"two `verify all --format json` runs byte-identical: {same}; "
        f"runtime {max(t1, t2):.1f}s <= {RUNTIME_BUDGET:.0f}s"
    )


CRITERIA = [
    ("1", criterion_1),
    ("2", criterion_2),
    ("3", criterion_3),
    ("4", criterion_4),
    ("5", criterion_5),
    ("6", criterion_6),
    ("7", criterion_7),
    ("8", criterion_8),
    ("9", criterion_9),
    ("10", criterion_10),
]


@pytest.mark.parametrize("number,check", CRITERIA, ids=[f"criterion_{n}" for n, _ in CRITERIA])
def test_acceptance(number, check):
    ok, detail = check()
    _emit(number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for number, check in CRITERIA:
        ok, detail = check()
        _emit(number, ok, detail)
        failures += not ok
    sys.exit(1 if failures else 0)
