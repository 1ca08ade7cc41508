"""Reference implementations that share no code with the package.

They are deliberately naive: slow, direct transcriptions of definitions.
"""

from collections import Counter
from fractions import Fraction
from itertools import product


# -- partitions -----------------------------------------------------------------

def conj(parts):
    parts = [p for p in parts if p > 0]
    top = max(parts, default=0)
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, top + 1))


def majorized(p, q, h):
    """Direct prefix-sum check over j = 1..N with N large enough to expose any tail failure."""
    p, q = list(p), list(q)
    N = len(p) + len(q) + sum(q) + abs(h) + 2
    p += [0] * (N - len(p))
    q += [0] * (N - len(q))
    lhs = rhs = 0
    for j in range(N):
        lhs += p[j]
        rhs += q[j] + h
        if lhs > rhs:
            return False
    return True


# -- exact rank -----------------------------------------------------------------

def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cdiv(a, b):
    n = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / n, (a[1] * b[0] - a[0] * b[1]) / n)


def rank_oracle(rows):
    """Gauss-Jordan rank over Q(i); entries are (re, im) pairs of numbers."""
    M = [[(Fraction(x[0]), Fraction(x[1])) for x in r] for r in rows]
    if not M:
        return 0
    m, n = len(M), len(M[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != (0, 0)), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(m):
            if i != r and M[i][c] != (0, 0):
                f = _cdiv(M[i][c], M[r][c])
                M[i] = [(a[0] - _cmul(f, b)[0], a[1] - _cmul(f, b)[1]) for a, b in zip(M[i], M[r])]
        r += 1
    return r


def matrix_pairs(M):
    """ExactMatrix -> list of (re, im) rows for the oracle."""
    return [[(x.re, x.im) for x in row] for row in M.data]


# -- bundle enumeration -----------------------------------------------------------

def _set_partitions(seq):
    """All ways to split a list of block sizes into unlabeled groups (as sorted tuples)."""
    seq = list(seq)
    if not seq:
        yield ()
        return
    first, rest = seq[0], seq[1:]
    for part in _set_partitions(rest):
        yield ((first,),) + part
        for i in range(len(part)):
            yield part[:i] + ((first,) + part[i],) + part[i + 1:]


def brute_force_bundles(m, n):
    """Signatures as (segre multiset, right, left) from raw block multisets.

    A block is ('J', k) of size k x k, ('R', k) of size k x (k+1) or ('L', k)
    of size (k+1) x k. Every multiset with total size m x n is generated, then
    its J blocks are grouped into eigenvalue classes in every possible way.
    """
    blocks = [("J", k) for k in range(1, max(m, n) + 1)]
    blocks += [("R", k) for k in range(0, n)]
    blocks += [("L", k) for k in range(0, m)]
    out = set()

    def rec(i, rows, cols, chosen):
        if i == len(blocks):
            if (rows, cols) == (m, n):
                yield tuple(chosen)
            return
        kind, k = blocks[i]
        dr, dc = {"J": (k, k), "R": (k, k + 1), "L": (k + 1, k)}[kind]
        c = 0
        while rows + c * dr <= m and cols + c * dc <= n:
            yield from rec(i + 1, rows + c * dr, cols + c * dc, chosen + [(kind, k)] * c)
            c += 1

    for combo in rec(0, 0, 0, []):
        js = sorted(k for kind, k in combo if kind == "J")
        right = tuple(sorted((k for kind, k in combo if kind == "R"), reverse=True))
        left = tuple(sorted((k for kind, k in combo if kind == "L"), reverse=True))
        for groups in _set_partitions(js):
            segres = tuple(sorted(tuple(sorted(g, reverse=True)) for g in groups))
            out.add((segres, right, left))
    return out


# -- closure decisions ------------------------------------------------------------

def orbit_holds(L, M):
    """Orbit-closure test from raw data: dicts label -> segre tuple, plus index lists.

    L and M are (rows, cols, eig, right, left) with eig a dict.
    """
    rankL = L[1] - len(L[3])
    rankM = M[1] - len(M[3])
    h = rankL - rankM

    def idx(ind):
        top = max(ind, default=-1)
        return tuple(sum(1 for e in ind if e >= i) for i in range(top + 1))

    if not majorized(idx(M[3]), idx(L[3]), h):
        return False
    if not majorized(idx(M[4]), idx(L[4]), h):
        return False
    if h < 0:
        return False
    for mu in set(L[2]) | set(M[2]):
        if not majorized(conj(L[2].get(mu, ())), conj(M[2].get(mu, ())), h):
            return False
    return True


def unpruned_bundle_holds(L, M):
    """Search every map from L's eigenvalues to M's eigenvalues or to any of
    |Lambda(L)| distinct fresh labels (so fresh classes may merge)."""
    srcs = list(L[2])
    fresh = [("fresh", i) for i in range(len(srcs))]
    for choice in product(list(M[2]) + fresh, repeat=len(srcs)):
        merged = {}
        for s, t in zip(srcs, choice):
            merged.setdefault(t, []).append(L[2][s])
        eig = {}
        for t, segs in merged.items():
            width = max(len(s) for s in segs)
            eig[t] = tuple(sorted((sum(s[i] if i < len(s) else 0 for s in segs) for i in range(width)), reverse=True))
        if orbit_holds((L[0], L[1], eig, L[3], L[4]), M):
            return True
    return False


def raw(s):
    """PencilStructure -> raw tuple for the oracles above."""
    return (s.rows, s.cols, {mu: tuple(seg) for mu, seg in s.eig}, list(s.right), list(s.left))


def segre_counter(s):
    return Counter(tuple(seg) for _, seg in s.eig)
