"""Kronecker-level description of a pencil: Jordan structure, minimal indices, size.

Text format (whitespace separated blocks)::

    structure := INT "x" INT ":" block*
    block     := "J(" eig ";" INT ("," INT)* ")" | "R(" INT ")" | "LT(" INT ")"
    eig       := "inf" | RAT | RAT ("+"|"-") RAT "i" | "@" IDENT

``J(mu;3,1)`` lists the Jordan block sizes (Segre characteristic) at ``mu``;
``R(k)`` is a right singular block of size k x (k+1) and ``LT(k)`` a left one of
size (k+1) x k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .eigenvalue import (
    INF,
    Eigenvalue,
    Infinity,
    Symbolic,
    as_eigenvalue,
    eigen_sort_key,
    parse_eigenvalue,
)
from .partitions import Partition, conjugate, union


class StructureError(ValueError):
    """Structure violates the Kronecker counting identities."""


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))


def _norm_eig(eig) -> tuple[tuple[Eigenvalue, Partition], ...]:
    items = eig.items() if isinstance(eig, Mapping) else eig
    merged: dict = {}
    for mu, seg in items:
        mu = as_eigenvalue(mu)
        seg = Partition(seg)
        merged[mu] = union([merged[mu], seg]) if mu in merged else seg
    return tuple(sorted(merged.items(), key=lambda kv: eigen_sort_key(kv[0])))


@dataclass(frozen=True)
class PencilStructure:
    """Strict-equivalence invariants of an m x n pencil.

    ``eig`` maps eigenvalues to Segre characteristics; it is stored as a
    canonically sorted tuple of pairs. ``right``/``left`` are minimal indices,
    stored in descending order.
    """

    rows: int
    cols: int
    eig: tuple = ()
    right: tuple = ()
    left: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "eig", _norm_eig(self.eig))
        object.__setattr__(self, "right", tuple(sorted((int(e) for e in self.right), reverse=True)))
        object.__setattr__(self, "left", tuple(sorted((int(e) for e in self.left), reverse=True)))

    @property
    def eigenvalues(self) -> tuple[Eigenvalue, ...]:
        return tuple(mu for mu, _ in self.eig)

    def segre(self, mu) -> Partition:
        return dict(self.eig).get(as_eigenvalue(mu), Partition())

    @property
    def eig_map(self) -> dict:
        return dict(self.eig)

    @property
    def regular_size(self) -> int:
        return sum(seg.weight for _, seg in self.eig)

    def replace(self, **changes) -> "PencilStructure":
        kw = dict(rows=self.rows, cols=self.cols, eig=self.eig, right=self.right, left=self.left)
        kw.update(changes)
        return PencilStructure(**kw)

    def __str__(self) -> str:
        return serialize(self)


@dataclass(frozen=True)
class BundleSignature:
    """A pencil structure with eigenvalue identities forgotten."""

    rows: int
    cols: int
    segre: tuple = ()
    right: tuple = ()
    left: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "segre", tuple(sorted((Partition(p) for p in self.segre), reverse=True)))
        object.__setattr__(self, "right", tuple(sorted((int(e) for e in self.right), reverse=True)))
        object.__setattr__(self, "left", tuple(sorted((int(e) for e in self.left), reverse=True)))

    def representative(self) -> PencilStructure:
        """Structure with symbolic eigenvalues ``@e1, @e2, ...`` in segre order."""
        width = len(str(len(self.segre)))
        eig = [(Symbolic(f"e{i + 1:0{width}d}"), seg) for i, seg in enumerate(self.segre)]
        return PencilStructure(self.rows, self.cols, eig, self.right, self.left)

    @property
    def eig_count(self) -> int:
        return len(self.segre)

    def __str__(self) -> str:
        return serialize(self.representative())


def diagnostics(s: PencilStructure | BundleSignature) -> list[str]:
    """All violated invariants, as human-readable strings (empty if valid)."""
    if isinstance(s, BundleSignature):
        s = s.representative()
    out = []
    if s.rows < 0 or s.cols < 0:
        out.append(f"negative size {s.rows}x{s.cols}")
    for mu, seg in s.eig:
        if not seg:
            out.append(f"eigenvalue {mu} has an empty Segre characteristic")
    if any(e < 0 for e in s.right + s.left):
        out.append("negative minimal index")
    reg = s.regular_size
    ncols = reg + sum(e + 1 for e in s.right) + sum(s.left)
    nrows = reg + sum(s.right) + sum(e + 1 for e in s.left)
    if ncols != s.cols:
        out.append(f"column count {ncols} != {s.cols}")
    if nrows != s.rows:
        out.append(f"row count {nrows} != {s.rows}")
    if s.cols - len(s.right) != s.rows - len(s.left):
        out.append("rank from right indices disagrees with rank from left indices")
    return out


def validate(s: PencilStructure | BundleSignature) -> bool:
    return not diagnostics(s)


def rank(s: PencilStructure | BundleSignature) -> int:
    """Normal rank: n minus the number of right singular blocks."""
    return s.cols - len(s.right)


def weyr_at(s: PencilStructure, mu) -> Partition:
    return conjugate(s.segre(mu))


def _index_weyr(indices: Iterable[int]) -> Partition:
    indices = list(indices)
    if not indices:
        return Partition()
    return Partition(sum(1 for e in indices if e >= i) for i in range(max(indices) + 1))


def right_weyr(s) -> Partition:
    """Element i (from 0) counts right minimal indices >= i."""
    return _index_weyr(s.right)


def left_weyr(s) -> Partition:
    return _index_weyr(s.left)


def signature(s: PencilStructure | BundleSignature) -> BundleSignature:
    if isinstance(s, BundleSignature):
        return s
    return BundleSignature(s.rows, s.cols, tuple(seg for _, seg in s.eig), s.right, s.left)


def as_structure(s: PencilStructure | BundleSignature) -> PencilStructure:
    return s.representative() if isinstance(s, BundleSignature) else s


# -- text format ------------------------------------------------------------

_HEADER = re.compile(r"\s*(\d+)\s*x\s*(\d+)\s*:")
_J = re.compile(r"J\(\s*([^;()]+?)\s*;\s*([0-9,\s]*)\)")
_R = re.compile(r"R\(\s*(\d+)\s*\)")
_LT = re.compile(r"LT\(\s*(\d+)\s*\)")
_WS = re.compile(r"\s*")


def parse(text: str, check: bool = True) -> PencilStructure:
    m = _HEADER.match(text)
    if not m:
        raise ParseError("expected 'MxN:' header", text, 0)
    rows, cols = int(m.group(1)), int(m.group(2))
    pos = m.end()
    eig: list = []
    right: list[int] = []
    left: list[int] = []
    while True:
        pos = _WS.match(text, pos).end()
        if pos >= len(text):
            break
        if (mm := _J.match(text, pos)) is not None:
            try:
                mu = parse_eigenvalue(mm.group(1))
            except ValueError:
                raise ParseError(f"bad eigenvalue {mm.group(1)!r}", text, mm.start(1)) from None
            try:
                sizes = [int(t) for t in mm.group(2).split(",")]
            except ValueError:
                raise ParseError("bad Jordan block size list", text, mm.start(2)) from None
            if any(k < 1 for k in sizes):
                raise ParseError("Jordan block sizes must be positive", text, mm.start(2))
            if any(a < b for a, b in zip(sizes, sizes[1:])):
                raise ParseError("Jordan block sizes must be non-increasing", text, mm.start(2))
            eig.append((mu, Partition(sizes)))
        elif (mm := _R.match(text, pos)) is not None:
            right.append(int(mm.group(1)))
        elif (mm := _LT.match(text, pos)) is not None:
            left.append(int(mm.group(1)))
        else:
            raise ParseError("expected J(...), R(...) or LT(...)", text, pos)
        pos = mm.end()
    s = PencilStructure(rows, cols, eig, right, left)
    if check:
        problems = diagnostics(s)
        if problems:
            raise StructureError(f"inconsistent structure {text!r}: " + "; ".join(problems))
    return s


def serialize(s: PencilStructure | BundleSignature) -> str:
    s = as_structure(s)
    blocks = [f"J({mu};{','.join(map(str, seg))})" for mu, seg in s.eig]
    blocks += [f"R({e})" for e in s.right]
    blocks += [f"LT({e})" for e in s.left]
    return f"{s.rows}x{s.cols}:" + "".join(" " + b for b in blocks)


def structure_from_blocks(blocks: Iterable[tuple], rows: int | None = None, cols: int | None = None) -> PencilStructure:
    """Build a structure from ``("J", mu, k)``, ``("R", k)``, ``("LT", k)`` tuples.

    Size defaults to what the counting identities give.
    """
    jordan: dict = {}
    right, left = [], []
    for b in blocks:
        if b[0] == "J":
            jordan.setdefault(as_eigenvalue(b[1]), []).append(b[2])
        elif b[0] == "R":
            right.append(b[1])
        elif b[0] == "LT":
            left.append(b[1])
        else:
            raise ValueError(f"unknown block kind {b[0]!r}")
    eig = [(mu, Partition.from_multiset(ks)) for mu, ks in jordan.items()]
    reg = sum(sum(ks) for ks in jordan.values())
    if rows is None:
        rows = reg + sum(right) + sum(e + 1 for e in left)
    if cols is None:
        cols = reg + sum(e + 1 for e in right) + sum(left)
    return PencilStructure(rows, cols, eig, right, left)


__all__ = [
    "INF",
    "Infinity",
    "Symbolic",
    "BundleSignature",
    "PencilStructure",
    "ParseError",
    "StructureError",
    "as_structure",
    "diagnostics",
    "left_weyr",
    "parse",
    "rank",
    "right_weyr",
    "serialize",
    "signature",
    "structure_from_blocks",
    "validate",
    "weyr_at",
]
