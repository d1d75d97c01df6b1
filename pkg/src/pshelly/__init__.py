"""Discrete Helly-type hitting sets, covers and colorings for ABA-free,
pseudohalfplane, dual pseudohalfplane and pseudohemisphere hypergraphs."""
from .core import (
    OrderedHypergraph,
    PreconditionError,
    TheoremContradiction,
    ValidationError,
    canonicalize,
    is_aba_free,
)
from .helly import DeltaHypergraph, Flag
from .structure import PshpHypergraph, Side, extremal_profile

__all__ = [
    "DeltaHypergraph",
    "Flag",
    "OrderedHypergraph",
    "PreconditionError",
    "PshpHypergraph",
    "Side",
    "TheoremContradiction",
    "ValidationError",
    "canonicalize",
    "extremal_profile",
    "is_aba_free",
]
