"""Points of the extended complex plane, plus opaque symbolic labels.

An eigenvalue is one of

* a :class:`~pencilstrat.gaussian.GaussianRational` (finite, exact),
* :data:`INF`, the infinite eigenvalue,
* :class:`Symbolic`, an anonymous label whose value is irrelevant (bundles).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .gaussian import GaussianRational


class Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Symbolic:
    label: str

    def __post_init__(self):
        if not _IDENT.match(self.label):
            raise ValueError(f"invalid symbolic eigenvalue label {self.label!r}")

    def __str__(self) -> str:
        return "@" + self.label


Eigenvalue = Union[GaussianRational, Infinity, Symbolic]


def as_eigenvalue(x) -> Eigenvalue:
    if isinstance(x, (Infinity, Symbolic, GaussianRational)):
        return x
    if isinstance(x, str):
        return parse_eigenvalue(x)
    return GaussianRational.coerce(x)


def parse_eigenvalue(text: str) -> Eigenvalue:
    t = text.strip()
    if t == "inf":
        return INF
    if t.startswith("@"):
        return Symbolic(t[1:])
    return GaussianRational.parse(t)


def eigen_sort_key(mu: Eigenvalue) -> tuple:
    """Finite values by (re, im), then infinity, then symbolic labels."""
    if isinstance(mu, GaussianRational):
        return (0, mu.re, mu.im)
    if isinstance(mu, Infinity):
        return (1,)
    if isinstance(mu, Symbolic):
        return (2, mu.label)
    raise TypeError(f"not an eigenvalue: {mu!r}")


def is_concrete(mu: Eigenvalue) -> bool:
    return not isinstance(mu, Symbolic)
