# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in :mod:`kummer._pykernels`.

Arithmetic is on 64-bit integers; :mod:`kummer.kernels` checks magnitudes
before dispatching here.
"""
from libc.stdlib cimport malloc, free


cdef inline long long floordiv(long long a, long long b) nogil:
    cdef long long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long long posmod(long long a, long long m) nogil:
    cdef long long r = a % m
    if r < 0:
        r += m
    return r


def residue_table(mults, long long m):
    cdef Py_ssize_t n = len(mults), i
    cdef long long t, acc
    cdef long long *lam = <long long *> malloc(max(n, 1) * sizeof(long long))
    if lam == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            lam[i] = mults[i]
        out = [0] * m
        for t in range(m):
            acc = 0
            for i in range(n):
                acc += posmod(t * lam[i], m)
            out[t] = acc
        return out
    finally:
        free(lam)


def gap_scan(table, long long m, long long eta, long long smax):
    cdef long long inv = pow(eta, -1, m)
    cdef long long s, t
    cdef long long *tab = <long long *> malloc(m * sizeof(long long))
    if tab == NULL:
        raise MemoryError()
    try:
        for t in range(m):
            tab[t] = table[t]
        gaps = []
        for s in range(1, smax + 1):
            t = posmod(-s * inv, m)
            if tab[t] > m * (1 + (s - 1) / m):
                gaps.append(s)
        return gaps
    finally:
        free(tab)


def invariant_ell(coeffs, steps, ramif, long long m):
    cdef Py_ssize_t n = len(coeffs), i
    cdef long long t, deg, total = 0
    cdef long long *buf = <long long *> malloc(3 * max(n, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[3 * i] = coeffs[i]
            buf[3 * i + 1] = steps[i]
            buf[3 * i + 2] = ramif[i]
        with nogil:
            for t in range(m):
                deg = 1
                for i in range(n):
                    deg += floordiv(buf[3 * i] + t * buf[3 * i + 1], buf[3 * i + 2])
                if deg > 0:
                    total += deg
        return total
    finally:
        free(buf)
