"""Orbit and bundle closure decisions for matrix pencils, in exact arithmetic."""

from .closure import (
    FRESH,
    bundle_closure_contains,
    coalesce,
    matrix_bundle_contains,
    orbit_closure_contains,
)
from .eigenvalue import INF, Infinity, Symbolic
from .gaussian import GaussianRational
from .hierarchy import c_jor, enumerate_bundles, export_dot, export_json, hasse
from .partitions import Partition, conjugate, majorizes_with_offset, partition_sum, union
from .realize import realize_kcf, scramble, witness_sequence
from .structure import (
    BundleSignature,
    ParseError,
    PencilStructure,
    StructureError,
    parse,
    rank,
    serialize,
    signature,
    validate,
    weyr_at,
)

__version__ = "0.1.0"

__all__ = [
    "FRESH",
    "INF",
    "BundleSignature",
    "GaussianRational",
    "Infinity",
    "ParseError",
    "Partition",
    "PencilStructure",
    "StructureError",
    "Symbolic",
    "bundle_closure_contains",
    "c_jor",
    "coalesce",
    "conjugate",
    "enumerate_bundles",
    "export_dot",
    "export_json",
    "hasse",
    "majorizes_with_offset",
    "matrix_bundle_contains",
    "orbit_closure_contains",
    "parse",
    "partition_sum",
    "rank",
    "realize_kcf",
    "scramble",
    "serialize",
    "signature",
    "union",
    "validate",
    "weyr_at",
    "witness_sequence",
]
