# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Rank of a Gaussian-integer matrix reduced modulo a prime p = 1 (mod 4).

The caller supplies ``iota`` with iota**2 = -1 (mod p); the imaginary unit is
mapped to it. Elimination runs on a C buffer of 64-bit residues.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    typedef unsigned long long psu64;
    static inline psu64 ps_mulmod(psu64 a, psu64 b, psu64 p) {
        return (psu64)(((unsigned __int128)a * b) % p);
    }
    """
    ctypedef unsigned long long psu64
    psu64 ps_mulmod(psu64 a, psu64 b, psu64 p) nogil


cdef psu64 _powmod(psu64 a, psu64 e, psu64 p) noexcept nogil:
    cdef psu64 r = 1
    while e:
        if e & 1:
            r = ps_mulmod(r, a, p)
        a = ps_mulmod(a, a, p)
        e >>= 1
    return r


cdef Py_ssize_t _eliminate(psu64* M, Py_ssize_t rows, Py_ssize_t cols, psu64 p) noexcept nogil:
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef psu64 inv, f, t, x
    cdef psu64* pr
    cdef psu64* row
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i * cols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                t = M[r * cols + j]
                M[r * cols + j] = M[piv * cols + j]
                M[piv * cols + j] = t
        pr = M + r * cols
        inv = _powmod(pr[c], p - 2, p)
        for i in range(r + 1, rows):
            row = M + i * cols
            f = row[c]
            if f == 0:
                continue
            f = ps_mulmod(f, inv, p)
            for j in range(c, cols):
                if pr[j] == 0:
                    continue
                t = ps_mulmod(f, pr[j], p)
                x = row[j]
                row[j] = x - t if x >= t else x + (p - t)
        r += 1
    return r


def rank_mod_p(list re, list im, Py_ssize_t rows, Py_ssize_t cols, p, iota):
    if rows == 0 or cols == 0:
        return 0
    cdef Py_ssize_t n = rows * cols, k
    cdef psu64 P = p
    cdef psu64* M = <psu64*> malloc(n * sizeof(psu64))
    cdef Py_ssize_t r
    if M == NULL:
        raise MemoryError()
    try:
        for k in range(n):
            a = re[k]
            b = im[k]
            if b:
                M[k] = (a + iota * b) % p
            elif a:
                M[k] = a % p
            else:
                M[k] = 0
        with nogil:
            r = _eliminate(M, rows, cols, P)
    finally:
        free(M)
    return r
