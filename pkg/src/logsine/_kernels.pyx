# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled series kernels; mirrors ``_kernels_py`` operation for operation."""

from libc.math cimport cos, sin, pow, fabs, hypot, INFINITY


def li_series(double zr, double zi, double theta, int k, bint trig,
              double abs_tol, double rel_tol, long long max_terms,
              int component):
    cdef double r = 1.0 if trig else hypot(zr, zi)
    cdef bint use_geo = r < 1.0
    cdef double inv_geo = 1.0 / (1.0 - r) if use_geo else 0.0
    cdef bint use_int = k >= 2
    cdef double s_half = fabs(sin(0.5 * theta))
    cdef bint use_abel = s_half > 0.0
    cdef double inv_abel = 1.0 / s_half if use_abel else 0.0

    cdef double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0
    cdef double pr = 1.0, pim = 0.0, npr
    cdef double rp = r
    cdef double nk = 1.0
    cdef double bound = INFINITY
    cdef double tr, ti, t, b, mag, target
    cdef long long n = 0
    while n < max_terms:
        n += 1
        if trig:
            tr = cos(n * theta)
            ti = sin(n * theta)
        else:
            npr = pr * zr - pim * zi
            pim = pr * zi + pim * zr
            pr = npr
            tr = pr
            ti = pim
        tr = tr / nk
        ti = ti / nk

        t = sr + tr
        if fabs(sr) >= fabs(tr):
            cr += (sr - t) + tr
        else:
            cr += (tr - t) + sr
        sr = t
        t = si + ti
        if fabs(si) >= fabs(ti):
            ci += (si - t) + ti
        else:
            ci += (ti - t) + si
        si = t

        rp = rp * r
        nk = pow(<double>(n + 1), <double>k)
        bound = INFINITY
        if use_geo:
            bound = rp / nk * inv_geo
        if use_int:
            b = pow(<double>n, <double>(1 - k)) / (k - 1)
            if b < bound:
                bound = b
        if use_abel:
            b = rp / nk * inv_abel
            if b < bound:
                bound = b

        if component == 1:
            mag = fabs(sr)
        elif component == 2:
            mag = fabs(si)
        else:
            mag = hypot(sr, si)
        target = rel_tol * mag
        if abs_tol > target:
            target = abs_tol
        if bound <= target:
            return sr + cr, si + ci, n, bound, True
    return sr + cr, si + ci, n, bound, False


def harmonic_sq_series(double abs_tol, double rel_tol, long long max_terms):
    cdef double h = 0.0, hc = 0.0, s = 0.0, sc = 0.0
    cdef double x, t, hn, q, target
    cdef double bound = INFINITY
    cdef long long n = 0
    while n < max_terms:
        n += 1
        x = 1.0 / n
        t = h + x
        if fabs(h) >= x:
            hc += (h - t) + x
        else:
            hc += (x - t) + h
        h = t
        hn = h + hc

        q = hn / n
        x = q * q
        t = s + x
        if fabs(s) >= x:
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
