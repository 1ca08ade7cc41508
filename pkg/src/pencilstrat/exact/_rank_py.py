"""Pure-Python rank kernels on Gaussian-integer matrices.

Matrices arrive as two flat row-major lists of Python ints (real and imaginary
parts). Nothing here allocates GaussianRational objects.
"""

from __future__ import annotations


def _bareiss_int(M: list[list[int]], rows: int, cols: int) -> int:
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = r
        while piv < rows and not M[piv][c]:
            piv += 1
        if piv == rows:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        p = pr[c]
        for i in range(r + 1, rows):
            row = M[i]
            f = row[c]
            if f:
                for j in range(c + 1, cols):
                    row[j] = (p * row[j] - f * pr[j]) // prev
            elif p != prev:
                for j in range(c + 1, cols):
                    if row[j]:
                        row[j] = p * row[j] // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def _gdiv(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    """Exact quotient (a+bi)/(c+di) in Z[i]."""
    n = c * c + d * d
    return (a * c + b * d) // n, (b * c - a * d) // n


def _bareiss_gauss(R: list[list[int]], I: list[list[int]], rows: int, cols: int) -> int:
    pr_, pi_ = 1, 0
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = r
        while piv < rows and not (R[piv][c] or I[piv][c]):
            piv += 1
        if piv == rows:
            continue
        R[r], R[piv] = R[piv], R[r]
        I[r], I[piv] = I[piv], I[r]
        Rr, Ir = R[r], I[r]
        a, b = Rr[c], Ir[c]
        for i in range(r + 1, rows):
            Ri, Ii = R[i], I[i]
            fr, fi = Ri[c], Ii[c]
            for j in range(c + 1, cols):
                xr, xi = Ri[j], Ii[j]
                # (a+bi)(x) - (f)(pivot row entry)
                nr = a * xr - b * xi - (fr * Rr[j] - fi * Ir[j])
                ni = a * xi + b * xr - (fr * Ir[j] + fi * Rr[j])
                if nr or ni:
                    Ri[j], Ii[j] = _gdiv(nr, ni, pr_, pi_)
                else:
                    Ri[j], Ii[j] = 0, 0
            Ri[c], Ii[c] = 0, 0
        pr_, pi_ = a, b
        r += 1
    return r


def bareiss_rank(re: list[int], im: list[int], rows: int, cols: int) -> int:
    """Fraction-free (Bareiss) rank over Z[i]."""
    if rows == 0 or cols == 0:
        return 0
    R = [list(re[i * cols:(i + 1) * cols]) for i in range(rows)]
    if not any(im):
        return _bareiss_int(R, rows, cols)
    I = [list(im[i * cols:(i + 1) * cols]) for i in range(rows)]
    return _bareiss_gauss(R, I, rows, cols)


def rank_mod_p(re: list[int], im: list[int], rows: int, cols: int, p: int, iota: int) -> int:
    """Rank of the image of the matrix in F_p, with i mapped to ``iota``."""
    if rows == 0 or cols == 0:
        return 0
    M = [
        [(re[k] + iota * im[k]) % p if (re[k] or im[k]) else 0 for k in range(i * cols, (i + 1) * cols)]
        for i in range(rows)
    ]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = r
        while piv < rows and not M[piv][c]:
            piv += 1
        if piv == rows:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        inv = pow(pr[c], -1, p)
        for i in range(r + 1, rows):
            row = M[i]
            f = row[c]
            if f:
                f = f * inv % p
                for j in range(c, cols):
                    if pr[j]:
                        row[j] = (row[j] - f * pr[j]) % p
        r += 1
    return r
