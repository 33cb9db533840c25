"""Noncrossing and nonnesting set partitions of classical types.

Core objects: SetPartition, SignedPartition, marked pairs and triples, pair
encodings, lattice paths, shifted tableaux and exact truncated series.  The
bijections between the type B/C/D families and marked type-A objects live in
coxcat.interpret, the type-preserving machinery in coxcat.typemaps, and the
encodings into paths, pairs and tableaux in coxcat.encode.
"""

from .core import (
    EMPTY,
    InternalInvariantError,
    SetPartition,
    ValidationError,
    edges,
    nonaligned_blocks,
    nonnested_blocks,
    noncrossing_partitions,
    nonnesting_partitions,
    partitions,
    pattern_free,
    special_blocks,
    type_of,
)
from .models import MarkedPair, MarkedTriple, count_by_type, count_family, enumerate_family, is_member, validate_marked
from .signed import SignedPartition, count_signed, decompose_triple, compose_triple, enumerate_signed, signed_type

__all__ = [
    "EMPTY",
    "InternalInvariantError",
    "MarkedPair",
    "MarkedTriple",
    "SetPartition",
    "SignedPartition",
    "ValidationError",
    "compose_triple",
    "count_by_type",
    "count_family",
    "count_signed",
    "decompose_triple",
    "edges",
    "enumerate_family",
    "enumerate_signed",
    "is_member",
    "nonaligned_blocks",
    "nonnested_blocks",
    "noncrossing_partitions",
    "nonnesting_partitions",
    "partitions",
    "pattern_free",
    "signed_type",
    "special_blocks",
    "type_of",
    "validate_marked",
]
