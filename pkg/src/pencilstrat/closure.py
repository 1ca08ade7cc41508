"""Orbit- and bundle-closure inclusion for pencils, decided on structures.

With h = rank L - rank M, the orbit closure of L contains M exactly when h >= 0
and three majorizations hold, each with h added to every entry of the
right-hand list:

* right minimal-index counts of M against those of L,
* left minimal-index counts of M against those of L,
* for every eigenvalue, the Weyr characteristic of L against that of M.

A bundle closure of L contains M when the orbit closure of some coalescence of
L does, so the bundle test searches over coalescence assignments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

from .eigenvalue import Infinity, Symbolic, eigen_sort_key, is_concrete, parse_eigenvalue
from .partitions import conjugate, majorizes_with_offset, partition_sum
from .structure import (
    BundleSignature,
    PencilStructure,
    StructureError,
    as_structure,
    diagnostics,
    left_weyr,
    rank,
    right_weyr,
    serialize,
    weyr_at,
)


class _Fresh:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "FRESH"

    def __str__(self) -> str:
        return "fresh"


FRESH = _Fresh()
"""Assignment target meaning: a new eigenvalue value, distinct from everything else."""


class SizeMismatchError(ValueError):
    pass


def _check_valid(*structures: PencilStructure) -> None:
    for s in structures:
        problems = diagnostics(s)
        if problems:
            raise StructureError(f"invalid structure {serialize(s)}: " + "; ".join(problems))


def _check_same_size(L, M) -> None:
    if (L.rows, L.cols) != (M.rows, M.cols):
        raise SizeMismatchError(f"sizes differ: {L.rows}x{L.cols} vs {M.rows}x{M.cols}")


# -- coalescence --------------------------------------------------------------

def _fresh_label(taken: set, start: int = 1) -> Symbolic:
    i = start
    while Symbolic(f"fresh{i}") in taken:
        i += 1
    return Symbolic(f"fresh{i}")


def coalesce(s: PencilStructure, assignment: Mapping, fresh_names: Mapping | None = None) -> PencilStructure:
    """Apply a coalescence assignment to ``s``.

    ``assignment`` maps every eigenvalue of ``s`` either to a target eigenvalue
    or to :data:`FRESH`. Sources sharing a target are merged: Segre
    characteristics add (equivalently, Weyr characteristics are unioned).
    Each FRESH source keeps its own class, named ``fresh_names[source]`` when
    given, else its own value, else a new ``@freshN`` label if that value is
    already a target. Singular data and size are unchanged.
    """
    missing = [mu for mu in s.eigenvalues if mu not in assignment]
    if missing:
        raise ValueError(f"assignment is not total: missing {', '.join(map(str, missing))}")
    fresh_names = dict(fresh_names or {})
    concrete = {t for mu, t in assignment.items() if mu in s.eig_map and t is not FRESH}
    groups: dict = {}
    names_used = set(concrete)
    for mu in s.eigenvalues:
        t = assignment[mu]
        if t is FRESH:
            if mu in fresh_names:
                name = fresh_names[mu]
                if name in names_used:
                    raise ValueError(f"fresh class name {name} collides with another target")
            elif mu not in names_used:
                name = mu
            else:
                name = _fresh_label(names_used | set(s.eigenvalues))
            names_used.add(name)
            groups[name] = [s.segre(mu)]
        else:
            groups.setdefault(t, []).append(s.segre(mu))
    return s.replace(eig=[(t, partition_sum(segs)) for t, segs in groups.items()])


def format_assignment(assignment: Mapping) -> str:
    """``{a,b}->t; {c}->fresh`` with sources in canonical order."""
    by_target: dict = {}
    for src in sorted(assignment, key=eigen_sort_key):
        by_target.setdefault(assignment[src], []).append(src)
    parts = []
    fresh_parts = []
    for t, srcs in by_target.items():
        if t is FRESH:
            fresh_parts.append("{" + ",".join(map(str, srcs)) + "}->fresh")
        else:
            parts.append("{" + ",".join(map(str, srcs)) + "}->" + str(t))
    return "; ".join(parts + fresh_parts)


_GROUP = re.compile(r"^\s*\{([^{}]*)\}\s*->\s*(\S+)\s*$")


def parse_assignment(text: str) -> dict:
    """Parse ``{e1,e2}->t; {e3}->fresh``."""
    out: dict = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        m = _GROUP.match(chunk)
        if not m:
            raise ValueError(f"malformed assignment group {chunk.strip()!r}")
        tgt_text = m.group(2)
        target = FRESH if tgt_text == "fresh" else parse_eigenvalue(tgt_text)
        srcs = [t.strip() for t in m.group(1).split(",") if t.strip()]
        if not srcs:
            raise ValueError(f"empty source set in {chunk.strip()!r}")
        for tok in srcs:
            mu = parse_eigenvalue(tok)
            if mu in out:
                raise ValueError(f"eigenvalue {mu} assigned twice")
            out[mu] = target
    return out


# -- orbit closures -----------------------------------------------------------

@dataclass
class OrbitReport:
    h: int
    right_ok: bool
    left_ok: bool
    failing: list = field(default_factory=list)

    @property
    def rank_ok(self) -> bool:
        return self.h >= 0

    @property
    def jordan_ok(self) -> bool:
        return self.rank_ok and not self.failing

    @property
    def holds(self) -> bool:
        return self.right_ok and self.left_ok and self.jordan_ok


def orbit_report(L: PencilStructure, M: PencilStructure) -> OrbitReport:
    """Evaluate the three orbit conditions; eigenvalues are matched by identity.

    Symbolic labels are accepted here and treated as distinct opaque values.
    """
    _check_same_size(L, M)
    h = rank(L) - rank(M)
    right_ok = majorizes_with_offset(right_weyr(M), right_weyr(L), h)
    left_ok = majorizes_with_offset(left_weyr(M), left_weyr(L), h)
    failing = []
    support = sorted(set(L.eigenvalues) | set(M.eigenvalues), key=eigen_sort_key)
    for mu in support:
        if not majorizes_with_offset(weyr_at(L, mu), weyr_at(M, mu), h):
            failing.append(mu)
    return OrbitReport(h, right_ok, left_ok, failing)


def orbit_closure_contains(L: PencilStructure, M: PencilStructure) -> bool:
    """True iff M lies in the closure of the orbit of L."""
    _check_valid(L, M)
    _check_same_size(L, M)
    for s in (L, M):
        if not all(is_concrete(mu) for mu in s.eigenvalues):
            raise TypeError("orbit closures need concrete eigenvalues, got a symbolic one")
    return orbit_report(L, M).holds


# -- bundle closures ----------------------------------------------------------

def _assignments(sources: list, targets: list):
    options = targets + [FRESH]
    for choice in product(options, repeat=len(sources)):
        yield dict(zip(sources, choice))


def bundle_closure_contains(L: PencilStructure | BundleSignature, M: PencilStructure | BundleSignature):
    """Decide closure(B(M)) ⊆ closure(B(L)).

    Returns ``(holds, witness)``; the witness maps every eigenvalue of L to an
    eigenvalue of M or :data:`FRESH`, and is the first valid one in the order
    given by ``itertools.product`` over L's eigenvalues (canonical order), each
    ranging over M's eigenvalues (canonical order) followed by FRESH.

    Merging two FRESH classes only unions their Weyr characteristics against
    the fixed bound (h, h, ...), so a separate class per FRESH source loses
    nothing.
    """
    L, M = as_structure(L), as_structure(M)
    _check_valid(L, M)
    _check_same_size(L, M)
    h = rank(L) - rank(M)
    if h < 0:
        return False, None
    if not majorizes_with_offset(right_weyr(M), right_weyr(L), h):
        return False, None
    if not majorizes_with_offset(left_weyr(M), left_weyr(L), h):
        return False, None

    sources = list(L.eigenvalues)
    targets = list(M.eigenvalues)
    fresh_ok = {mu: majorizes_with_offset(weyr_at(L, mu), (), h) for mu in sources}
    m_weyr = {t: weyr_at(M, t) for t in targets}
    l_segre = {mu: L.segre(mu) for mu in sources}

    for a in _assignments(sources, targets):
        if not all(fresh_ok[mu] for mu, t in a.items() if t is FRESH):
            continue
        merged: dict = {}
        for mu, t in a.items():
            if t is not FRESH:
                merged.setdefault(t, []).append(l_segre[mu])
        if all(majorizes_with_offset(conjugate(partition_sum(segs)), m_weyr[t], h) for t, segs in merged.items()):
            return True, a
    return False, None


def witness_coalescence(L: PencilStructure, M: PencilStructure, witness: Mapping) -> PencilStructure:
    """The coalescence of L named by a bundle witness, with FRESH classes kept off the spectrum of M."""
    taken = set(M.eigenvalues) | set(L.eigenvalues)
    names = {}
    for mu, t in witness.items():
        if t is FRESH:
            label = _fresh_label(taken)
            taken.add(label)
            names[mu] = label
    return coalesce(L, witness, names)


def matrix_like(s: PencilStructure) -> bool:
    """Structure of lambda*I - A: square, regular, finite spectrum only."""
    return (
        s.rows == s.cols
        and not s.right
        and not s.left
        and not any(isinstance(mu, Infinity) for mu in s.eigenvalues)
        and s.regular_size == s.cols
    )


def matrix_bundle_contains(A: PencilStructure, B: PencilStructure) -> bool:
    """Bundle-closure inclusion for square matrices under similarity."""
    A, B = as_structure(A), as_structure(B)
    for s in (A, B):
        if not matrix_like(s):
            raise ValueError(f"{serialize(s)} does not describe a square matrix")
    holds, _ = bundle_closure_contains(A, B)
    return holds


__all__ = [
    "FRESH",
    "OrbitReport",
    "SizeMismatchError",
    "bundle_closure_contains",
    "coalesce",
    "format_assignment",
    "matrix_bundle_contains",
    "matrix_like",
    "orbit_closure_contains",
    "orbit_report",
    "parse_assignment",
    "witness_coalescence",
]
