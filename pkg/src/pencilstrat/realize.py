"""Explicit pencils from structures, strict-equivalence scrambling, and
sequences of pencils whose eigenvalues coalesce in the limit."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .eigenvalue import Infinity, Symbolic, as_eigenvalue
from .exact.matrix import ExactMatrix, ExplicitPencil, block_diag
from .gaussian import ONE, ZERO, GaussianRational
from .structure import PencilStructure, StructureError, diagnostics


def _mat(rows: int, cols: int, entries: dict) -> ExactMatrix:
    return ExactMatrix._raw(
        rows, cols,
        tuple(tuple(entries.get((i, j), ZERO) for j in range(cols)) for i in range(rows)),
    )


def jordan_block(k: int, mu) -> ExplicitPencil:
    """lambda*I_k + J_k(mu): -mu on the diagonal of A, ones above it."""
    mu = GaussianRational.coerce(mu)
    A = {(i, i): -mu for i in range(k)} if mu else {}
    A.update({(i, i + 1): ONE for i in range(k - 1)})
    return ExplicitPencil(_mat(k, k, A), ExactMatrix.identity(k))


def infinite_block(k: int) -> ExplicitPencil:
    """lambda*N_k + I_k."""
    return ExplicitPencil(ExactMatrix.identity(k), _mat(k, k, {(i, i + 1): ONE for i in range(k - 1)}))


def right_block(k: int) -> ExplicitPencil:
    """R_k(lambda), k x (k+1), lambda on the diagonal and ones just right of it."""
    return ExplicitPencil(
        _mat(k, k + 1, {(i, i + 1): ONE for i in range(k)}),
        _mat(k, k + 1, {(i, i): ONE for i in range(k)}),
    )


def left_block(k: int) -> ExplicitPencil:
    R = right_block(k)
    return ExplicitPencil(R.A.T, R.B.T)


def direct_sum(pencils: Iterable[ExplicitPencil]) -> ExplicitPencil:
    pencils = list(pencils)
    return ExplicitPencil(block_diag(*(p.A for p in pencils)), block_diag(*(p.B for p in pencils)))


def _eigen_blocks(mu, segre) -> list[ExplicitPencil]:
    if isinstance(mu, Infinity):
        return [infinite_block(k) for k in segre]
    if isinstance(mu, Symbolic):
        raise TypeError(f"cannot realize symbolic eigenvalue {mu}")
    return [jordan_block(k, mu) for k in segre]


def realize_kcf(s: PencilStructure) -> ExplicitPencil:
    """Block-diagonal Kronecker form of ``s``, blocks in canonical order."""
    problems = diagnostics(s)
    if problems:
        raise StructureError("; ".join(problems))
    blocks: list[ExplicitPencil] = []
    for mu, seg in s.eig:
        blocks += _eigen_blocks(mu, seg)
    blocks += [right_block(e) for e in s.right]
    blocks += [left_block(e) for e in s.left]
    if not blocks:
        return ExplicitPencil(ExactMatrix.zeros(s.rows, s.cols), ExactMatrix.zeros(s.rows, s.cols))
    return direct_sum(blocks)


def _unit_triangular_product(n: int, rng: random.Random) -> ExactMatrix:
    low = {(i, i): ONE for i in range(n)}
    up = {(i, i): ONE for i in range(n)}
    for i in range(n):
        for j in range(i):
            v = rng.randint(-2, 2)
            if v:
                low[(i, j)] = GaussianRational(v)
            v = rng.randint(-2, 2)
            if v:
                up[(j, i)] = GaussianRational(v)
    return _mat(n, n, low) @ _mat(n, n, up)


def scramble(L: ExplicitPencil, seed: int) -> ExplicitPencil:
    """(P A Q, P B Q) with P, Q products of unit triangular integer matrices (det 1)."""
    rng = random.Random(seed)
    P = _unit_triangular_product(L.rows, rng)
    Q = _unit_triangular_product(L.cols, rng)
    return ExplicitPencil(P @ L.A @ Q, P @ L.B @ Q)


@dataclass(frozen=True)
class CouplingSpec:
    """Size and 1-based positions i of the ones placed at (i, i+1)."""

    size: int
    positions: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "positions", frozenset(self.positions))
        if self.size < 1:
            raise ValueError("size must be positive")
        bad = [i for i in self.positions if not 1 <= i < self.size]
        if bad:
            raise ValueError(f"positions {sorted(bad)} outside 1..{self.size - 1}")


def build_E(spec: CouplingSpec) -> ExactMatrix:
    return _mat(spec.size, spec.size, {(i - 1, i): ONE for i in spec.positions})


class WitnessError(ValueError):
    pass


def displaced_eigenvalues(group: Sequence, target, k: int) -> list[GaussianRational]:
    """target + i/k for i = 1..len(group)."""
    target = GaussianRational.coerce(target)
    return [target + GaussianRational(Fraction(i, k)) for i in range(1, len(group) + 1)]


def witness_order(s: PencilStructure, group: Sequence) -> list:
    """Group eigenvalues by descending number of Jordan blocks (stable)."""
    group = [as_eigenvalue(g) for g in group]
    return sorted(group, key=lambda mu: -len(s.segre(mu)))


def witness_sequence(s: PencilStructure, group: Sequence, target, k: int) -> tuple[ExplicitPencil, ExplicitPencil]:
    """Pencils (L_k, limit) with L_k in the bundle of ``s`` and L_k -> limit.

    After ordering ``group`` with :func:`witness_order`, the i-th eigenvalue of
    the group (1-based) is moved to ``target + i/k``. Blocks are laid out in
    layers: layer j holds the j-th largest Jordan block of every group
    eigenvalue that has one, chained by ones across the block boundaries. As
    k grows, each layer collapses into one Jordan block at ``target`` whose size
    is the sum of the layer, so the limit has Segre characteristic equal to the
    sum of the group's Segre characteristics at ``target``. The rest of ``s`` is
    realized unchanged.
    """
    if k < 1:
        raise WitnessError("k must be a positive integer")
    group = [as_eigenvalue(g) for g in group]
    if not group:
        raise WitnessError("empty coalescence group")
    if len(set(group)) != len(group):
        raise WitnessError("repeated eigenvalue in group")
    eigs = set(s.eigenvalues)
    for g in group:
        if isinstance(g, Infinity):
            raise WitnessError("coalescing the infinite eigenvalue is not supported")
        if isinstance(g, Symbolic):
            raise WitnessError(f"symbolic eigenvalue {g} has no value")
        if g not in eigs:
            raise WitnessError(f"{g} is not an eigenvalue of the structure")
    target = as_eigenvalue(target)
    if not isinstance(target, GaussianRational):
        raise WitnessError("target must be a finite eigenvalue")
    untouched = [mu for mu in s.eigenvalues if mu not in group]
    ordered = witness_order(s, group)
    shifted = displaced_eigenvalues(ordered, target, k)
    for v in [target] + shifted:
        if v in untouched:
            raise WitnessError(f"{v} collides with an untouched eigenvalue")

    segres = [s.segre(g) for g in ordered]
    layers_k: list[ExplicitPencil] = []
    layers_lim: list[ExplicitPencil] = []
    for j in range(len(segres[0])):
        sizes = [seg[j] for seg in segres if len(seg) > j]
        cuts = [sum(sizes[: t + 1]) for t in range(len(sizes) - 1)]
        E = build_E(CouplingSpec(sum(sizes), cuts))
        blk_k = direct_sum(jordan_block(a, shifted[i]) for i, a in enumerate(sizes))
        blk_lim = direct_sum(jordan_block(a, target) for a in sizes)
        layers_k.append(ExplicitPencil(blk_k.A + E, blk_k.B))
        layers_lim.append(ExplicitPencil(blk_lim.A + E, blk_lim.B))

    rest = s.replace(eig=[(mu, s.segre(mu)) for mu in untouched])
    rest = rest.replace(rows=s.rows - sum(p.rows for p in layers_k), cols=s.cols - sum(p.cols for p in layers_k))
    tail = realize_kcf(rest)
    return direct_sum(layers_k + [tail]), direct_sum(layers_lim + [tail])
