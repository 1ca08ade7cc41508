"""Exact rank of Gaussian-integer matrices, with backend selection at import.

Two exact routes:

``cython``
    Multi-modular elimination in the compiled kernel. For primes p = 1 (mod 4)
    the imaginary unit maps into F_p, so the rank mod p never exceeds the true
    rank. If the rank were larger than the best modular rank r seen so far,
    some (r+1)-minor D would be non-zero yet vanish modulo every prime used;
    then the product of those primes divides |D|^2, which is bounded by the
    product of the r+1 largest squared row (or column) norms. Once the prime
    product exceeds that bound, r is certified.

``python``
    Fraction-free Bareiss elimination over Z[i]; used when the extension is not
    built, or when ``PENCILSTRAT_BACKEND=python`` is set.
"""

from __future__ import annotations

import os
from math import prod

from . import _rank_py

try:
    from . import _kernel  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _kernel = None

_forced = os.environ.get("PENCILSTRAT_BACKEND", "").strip().lower()
if _forced not in ("", "python", "cython"):
    raise ImportError(f"PENCILSTRAT_BACKEND must be 'python' or 'cython', got {_forced!r}")
if _forced == "cython" and _kernel is None:
    raise ImportError("PENCILSTRAT_BACKEND=cython but the compiled kernel is not available")

BACKEND = "python" if (_forced == "python" or _kernel is None) else "cython"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sqrt_minus_one(p: int) -> int:
    g = 2
    while pow(g, (p - 1) // 2, p) != p - 1:
        g += 1
    return pow(g, (p - 1) // 4, p)


_PRIMES: list[tuple[int, int]] = []


def _prime(k: int) -> tuple[int, int]:
    """k-th prime (with its sqrt(-1)) in the descending sequence p = 1 mod 4 below 2**62."""
    while len(_PRIMES) <= k:
        n = _PRIMES[-1][0] - 4 if _PRIMES else (1 << 62) - 3
        while not _is_prime(n):
            n -= 4
        _PRIMES.append((n, _sqrt_minus_one(n)))
    return _PRIMES[k]


def modular_rank(re: list[int], im: list[int], rows: int, cols: int, rank_mod_p=None) -> int:
    """Certified multi-modular rank; ``rank_mod_p`` defaults to the best available kernel."""
    if rank_mod_p is None:
        rank_mod_p = _kernel.rank_mod_p if _kernel is not None else _rank_py.rank_mod_p
    full = min(rows, cols)
    if full == 0:
        return 0
    row_sq = sorted(
        (max(1, sum(re[k] * re[k] + im[k] * im[k] for k in range(i * cols, (i + 1) * cols))) for i in range(rows)),
        reverse=True,
    )
    col_sq = sorted(
        (max(1, sum(re[k] * re[k] + im[k] * im[k] for k in range(j, rows * cols, cols))) for j in range(cols)),
        reverse=True,
    )
    best = 0
    modulus = 1
    k = 0
    while True:
        p, iota = _prime(k)
        k += 1
        best = max(best, rank_mod_p(re, im, rows, cols, p, iota))
        if best == full:
            return best
        modulus *= p
        bound = min(prod(row_sq[: best + 1]), prod(col_sq[: best + 1]))
        if modulus > bound:
            return best


def bareiss_rank(re: list[int], im: list[int], rows: int, cols: int) -> int:
    return _rank_py.bareiss_rank(re, im, rows, cols)


def gaussian_integer_rank(re: list[int], im: list[int], rows: int, cols: int, backend: str | None = None) -> int:
    backend = backend or BACKEND
    if backend == "cython":
        if _kernel is None:
            raise RuntimeError("compiled kernel not available")
        return modular_rank(re, im, rows, cols, _kernel.rank_mod_p)
    if backend == "python":
        return _rank_py.bareiss_rank(re, im, rows, cols)
    raise ValueError(f"unknown backend {backend!r}")


def available_backends() -> tuple[str, ...]:
    return ("python", "cython") if _kernel is not None else ("python",)
