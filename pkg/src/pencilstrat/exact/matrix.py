"""Dense exact matrices over Q(i), explicit pencils, and the block matrices
whose nullities expose Weyr characteristics."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from ..eigenvalue import Infinity, Symbolic
from ..gaussian import ONE, ZERO, GaussianRational
from ..partitions import Partition
from .rank import gaussian_integer_rank


class ExactMatrix:
    """Immutable dense matrix of :class:`GaussianRational` entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence] | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = tuple((ZERO,) * cols for _ in range(rows))
        else:
            self.data = tuple(tuple(GaussianRational.coerce(x) for x in row) for row in data)
            if len(self.data) != rows or any(len(row) != cols for row in self.data):
                raise ValueError(f"data does not have shape {rows}x{cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = list(rows)
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    @classmethod
    def _raw(cls, rows: int, cols: int, data: tuple) -> "ExactMatrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m.data = rows, cols, data
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls._raw(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix._raw(
            self.rows, self.cols,
            tuple(tuple(a + b if b else a for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        c = GaussianRational.coerce(c)
        if not c:
            return ExactMatrix.zeros(self.rows, self.cols)
        return ExactMatrix._raw(self.rows, self.cols, tuple(tuple(x * c if x else ZERO for x in r) for r in self.data))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols_t = list(zip(*other.data)) if other.rows else [()] * other.cols
        out = []
        for r in self.data:
            nz = [(k, x) for k, x in enumerate(r) if x]
            row = []
            for col in cols_t:
                acc = ZERO
                for k, x in nz:
                    y = col[k]
                    if y:
                        acc = acc + x * y
                row.append(acc)
            out.append(tuple(row))
        return ExactMatrix._raw(self.rows, other.cols, tuple(out))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._raw(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    def to_text(self) -> str:
        return "\n".join(",".join(str(x) for x in r) for r in self.data)

    @classmethod
    def from_text(cls, text: str) -> "ExactMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        return cls.from_rows([[GaussianRational.parse(t) for t in ln.split(",")] for ln in lines])

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"

    def gaussian_integer_rows(self) -> tuple[list[int], list[int]]:
        """Scale each row by the lcm of its denominators; flat (re, im) int lists.

        Row scaling by non-zero constants preserves rank.
        """
        re: list[int] = []
        im: list[int] = []
        for row in self.data:
            row_re = [x.re for x in row]
            row_im = [x.im for x in row]
            den = lcm(*(f.denominator for f in row_re), *(f.denominator for f in row_im))
            if den == 1:
                re.extend(f.numerator for f in row_re)
                im.extend(f.numerator for f in row_im)
            else:
                re.extend(f.numerator * (den // f.denominator) for f in row_re)
                im.extend(f.numerator * (den // f.denominator) for f in row_im)
        return re, im


def block_diag(*blocks: ExactMatrix) -> ExactMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = []
    c0 = 0
    for b in blocks:
        left = (ZERO,) * c0
        right = (ZERO,) * (cols - c0 - b.cols)
        for r in b.data:
            out.append(left + r + right)
        c0 += b.cols
    return ExactMatrix._raw(rows, cols, tuple(out))


def assemble(block_rows: int, block_cols: int, row_sizes: Sequence[int], col_sizes: Sequence[int],
             blocks: dict[tuple[int, int], ExactMatrix]) -> ExactMatrix:
    """Place ``blocks[(I, J)]`` into a block grid; missing blocks are zero."""
    rows, cols = sum(row_sizes), sum(col_sizes)
    grid = [[ZERO] * cols for _ in range(rows)]
    r_off = [sum(row_sizes[:i]) for i in range(block_rows)]
    c_off = [sum(col_sizes[:j]) for j in range(block_cols)]
    for (I, J), b in blocks.items():
        if b.shape != (row_sizes[I], col_sizes[J]):
            raise ValueError(f"block {(I, J)} has shape {b.shape}, expected {(row_sizes[I], col_sizes[J])}")
        for i, r in enumerate(b.data):
            grid[r_off[I] + i][c_off[J]:c_off[J] + b.cols] = r
    return ExactMatrix._raw(rows, cols, tuple(tuple(r) for r in grid))


def rank_exact(M: ExactMatrix, backend: str | None = None) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    re, im = M.gaussian_integer_rows()
    return gaussian_integer_rank(re, im, M.rows, M.cols, backend)


def nullity(M: ExactMatrix, backend: str | None = None) -> int:
    """Dimension of the right null space."""
    return M.cols - rank_exact(M, backend)


@dataclass(frozen=True)
class ExplicitPencil:
    """The pencil lambda*B + A."""

    A: ExactMatrix
    B: ExactMatrix

    def __post_init__(self):
        if self.A.shape != self.B.shape:
            raise ValueError(f"A is {self.A.shape} but B is {self.B.shape}")

    @property
    def rows(self) -> int:
        return self.A.rows

    @property
    def cols(self) -> int:
        return self.A.cols

    def at(self, mu) -> ExactMatrix:
        """Evaluate A + mu*B."""
        mu = GaussianRational.coerce(mu)
        if not mu:
            return self.A
        return self.A + self.B.scale(mu)

    def to_text(self) -> str:
        return f"A =\n{self.A.to_text()}\nB =\n{self.B.to_text()}"


def reversal(L: ExplicitPencil) -> ExplicitPencil:
    """rev(lambda*B + A) = lambda*A + B."""
    return ExplicitPencil(L.B, L.A)


def pencil_rank(L: ExplicitPencil, backend: str | None = None) -> int:
    """Normal rank of L.

    A non-zero r x r minor of L(lambda) is a polynomial of degree <= r, so it
    vanishes at no more than min(m, n) points; sampling min(m, n)+1 distinct
    points always attains the normal rank.
    """
    full = min(L.rows, L.cols)
    best = 0
    for t in range(full + 1):
        best = max(best, rank_exact(L.at(t), backend))
        if best == full:
            break
    return best


def build_P(L: ExplicitPencil, mu, d: int) -> ExactMatrix:
    """d x d block lower bidiagonal matrix, L(mu) on the diagonal and B below it."""
    if d < 1:
        raise ValueError("d must be >= 1")
    Lmu = L.at(mu)
    m, n = L.rows, L.cols
    blocks = {(i, i): Lmu for i in range(d)}
    blocks.update({(i + 1, i): L.B for i in range(d - 1)})
    return assemble(d, d, [m] * d, [n] * d, blocks)


def build_coupled(L: ExplicitPencil, points: Sequence, depths: Sequence[int]) -> ExactMatrix:
    """Block lower-triangular coupling of P-blocks at distinct points.

    Diagonal blocks are ``build_P(L, points[i], depths[i])``; the block below
    each is zero except for a single B in its top-right corner.
    """
    points = [GaussianRational.coerce(p) for p in points]
    depths = list(depths)
    if not points or len(points) != len(depths):
        raise ValueError("need equally many (>= 1) points and depths")
    if len(set(points)) != len(points):
        raise ValueError("coupled points must be pairwise distinct")
    if any(d < 1 for d in depths):
        raise ValueError("depths must be >= 1")
    m, n = L.rows, L.cols
    total = sum(depths)
    offsets = [sum(depths[:i]) for i in range(len(depths))]
    Lmus = [L.at(p) for p in points]
    blocks: dict = {}
    for s, (off, d) in enumerate(zip(offsets, depths)):
        for i in range(d):
            blocks[(off + i, off + i)] = Lmus[s]
            if i:
                blocks[(off + i, off + i - 1)] = L.B
        if s:
            # first block row of this group, last block column of the previous one
            blocks[(off, off - 1)] = L.B
    return assemble(total, total, [m] * total, [n] * total, blocks)


class WeyrExtractionError(ArithmeticError):
    pass


def extract_weyr(L: ExplicitPencil, mu, d_max: int | None = None, backend: str | None = None) -> Partition:
    """Weyr characteristic of ``mu`` in L from nullities of the P-blocks.

    W_d = nu(P^d) - nu(P^(d-1)) - r0, with r0 = n - rank L. Stops at the first
    zero W_d (a Weyr characteristic is non-increasing) or at ``d_max``, which
    defaults to min(m, n). The infinite eigenvalue is handled as 0 of rev L.
    """
    if isinstance(mu, Infinity):
        return extract_weyr(reversal(L), ZERO, d_max, backend)
    if isinstance(mu, Symbolic):
        raise TypeError("symbolic eigenvalues have no value to evaluate at")
    mu = GaussianRational.coerce(mu)
    if d_max is None:
        d_max = min(L.rows, L.cols)
    n = L.cols
    r0 = n - pencil_rank(L, backend)
    weyr: list[int] = []
    prev_nu = 0
    for d in range(1, d_max + 1):
        nu = nullity(build_P(L, mu, d), backend)
        w = nu - prev_nu - r0
        if w < 0 or (weyr and w > weyr[-1]):
            raise WeyrExtractionError(f"inconsistent Weyr data {weyr + [w]} at {mu}")
        if w == 0:
            break
        weyr.append(w)
        prev_nu = nu
    return Partition(weyr)


def weyr_nullity_prefix(L: ExplicitPencil, mu, d: int, backend: str | None = None) -> int:
    """nu(P^d_mu(L)); for infinite mu, nu(P^d_0(rev L))."""
    if isinstance(mu, Infinity):
        return nullity(build_P(reversal(L), ZERO, d), backend)
    return nullity(build_P(L, mu, d), backend)
