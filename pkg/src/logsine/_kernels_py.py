"""Pure-Python twin of the compiled series kernels.

Both backends run the same operations in the same order, so they agree to
the last bit on platforms where libm is shared with the interpreter.
"""

from __future__ import annotations

import math

INF = math.inf


def li_series(
    zr: float,
    zi: float,
    theta: float,
    k: int,
    trig: bool,
    abs_tol: float,
    rel_tol: float,
    max_terms: int,
    component: int,
) -> tuple[float, float, int, float, bool]:
    """Sum ``z**n / n**k`` until the rigorous tail bound meets the target.

    ``trig`` selects unit-circle terms ``e^{i n theta}`` computed with
    cos/sin; otherwise powers of ``z`` are accumulated by recurrence.
    ``component`` picks the magnitude used for the relative target:
    0 for the modulus, 1 for the real part, 2 for the imaginary part.

    Returns ``(re, im, terms, tail_bound, converged)``.
    """
    r = 1.0 if trig else math.hypot(zr, zi)
    use_geo = r < 1.0
    inv_geo = 1.0 / (1.0 - r) if use_geo else 0.0
    use_int = k >= 2
    s_half = abs(math.sin(0.5 * theta))
    use_abel = s_half > 0.0
    inv_abel = 1.0 / s_half if use_abel else 0.0

    sr = cr = si = ci = 0.0
    pr, pim = 1.0, 0.0
    rp = r
    nk = 1.0
    bound = INF
    n = 0
    while n < max_terms:
        n += 1
        if trig:
            tr = math.cos(n * theta)
            ti = math.sin(n * theta)
        else:
            pr, pim = pr * zr - pim * zi, pr * zi + pim * zr
            tr = pr
            ti = pim
        tr = tr / nk
        ti = ti / nk

        t = sr + tr
        if abs(sr) >= abs(tr):
            cr += (sr - t) + tr
        else:
            cr += (tr - t) + sr
        sr = t
        t = si + ti
        if abs(si) >= abs(ti):
            ci += (si - t) + ti
        else:
            ci += (ti - t) + si
        si = t

        rp = rp * r
        nk = math.pow(float(n + 1), float(k))
        bound = INF
        if use_geo:
            bound = rp / nk * inv_geo
        if use_int:
            b = math.pow(float(n), float(1 - k)) / (k - 1)
            if b < bound:
                bound = b
        if use_abel:
            b = rp / nk * inv_abel
            if b < bound:
                bound = b

        if component == 1:
            mag = abs(sr)
        elif component == 2:
            mag = abs(si)
        else:
            mag = math.hypot(sr, si)
        target = rel_tol * mag
        if abs_tol > target:
            target = abs_tol
        if bound <= target:
            return sr + cr, si + ci, n, bound, True
    return sr + cr, si + ci, n, bound, False


def harmonic_sq_series(
    abs_tol: float, rel_tol: float, max_terms: int
) -> tuple[float, int, float, bool]:
    """Sum ``H_n**2 / n**2`` with tail bound ``((H_N + 1)**2 + 1) / N``.

    Returns ``(value, terms, tail_bound, converged)``.
    """
    h = hc = 0.0
    s = sc = 0.0
    bound = INF
    n = 0
    while n < max_terms:
        n += 1
        x = 1.0 / n
        t = h + x
        if abs(h) >= x:
            hc += (h - t) + x
        else:
            hc += (x - t) + h
        h = t
        hn = h + hc

        q = hn / n
        x = q * q
        t = s + x
        if abs(s) >= x:
            sc += (s - t) + x
        else:
            sc += (x - t) + s
        s = t

        bound = ((hn + 1.0) * (hn + 1.0) + 1.0) / n
        target = rel_tol * s
        if abs_tol > target:
            target = abs_tol
        if bound <= target:
            return s + sc, n, bound, True
    return s + sc, n, bound, False
