"""Exact linear algebra over the Gaussian rationals."""

from ..gaussian import GaussianRational
from .matrix import (
    ExactMatrix,
    ExplicitPencil,
    WeyrExtractionError,
    assemble,
    block_diag,
    build_coupled,
    build_P,
    extract_weyr,
    nullity,
    pencil_rank,
    rank_exact,
    reversal,
    weyr_nullity_prefix,
)
from .rank import BACKEND, available_backends

__all__ = [
    "BACKEND",
    "ExactMatrix",
    "ExplicitPencil",
    "GaussianRational",
    "WeyrExtractionError",
    "assemble",
    "available_backends",
    "block_diag",
    "build_P",
    "build_coupled",
    "extract_weyr",
    "nullity",
    "pencil_rank",
    "rank_exact",
    "reversal",
    "weyr_nullity_prefix",
]
