"""Integer partitions as non-increasing tuples with an implicit zero tail."""

from __future__ import annotations

from itertools import accumulate, zip_longest
from typing import Iterable, Sequence


class Partition(tuple):
    """Non-increasing tuple of positive integers.

    Zero parts are stripped on construction, so ``Partition((2, 1, 0)) ==
    Partition((2, 1))``. Indexing past the end is not padded; use
    :meth:`part` for the zero-tail view.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition must be non-increasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"partition parts must be non-negative: {parts}")
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return super().__new__(cls, parts[:end])

    @classmethod
    def from_multiset(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based) with the zero tail made explicit."""
        return self[i] if i < len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"


def parse_partition(text: str) -> Partition:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"expected '(a,b,...)', got {text!r}")
    body = body[1:-1].strip()
    if not body:
        return Partition()
    return Partition(int(tok) for tok in body.split(","))


def conjugate(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def union(ps: Iterable[Sequence[int]]) -> Partition:
    return Partition.from_multiset(x for p in ps for x in p)


def partition_sum(ps: Iterable[Sequence[int]]) -> Partition:
    """Pointwise sum, zero padded."""
    return Partition(sum(col) for col in zip_longest(*ps, fillvalue=0))


def majorizes_with_offset(p: Sequence[int], q: Sequence[int], h: int) -> bool:
    """True iff p ≺ q + (h, h, ...) over the infinite zero-padded lists.

    For every j >= 1: ``sum(p[:j]) <= sum(q[:j]) + j*h``.
    """
    p, q = Partition(p), Partition(q)
    if h < 0:
        # right side tends to -inf past len(q); left side is >= 0
        return False
    left = list(accumulate(p))
    right = list(accumulate(q))
    for j in range(1, len(p) + 1):
        rq = right[j - 1] if j <= len(q) else (right[-1] if right else 0)
        if left[j - 1] > rq + j * h:
            return False
    return True
