from core.errors import (
    CompletenessViolation,
    CrossCheckMismatch,
    Diagnostic,
    DigraphError,
    InputError,
    InternalDefect,
    IrrationalCenter,
    ResDoubleError,
)
from core.lattice import EnriquesDigraph, ResolutionLattice, matrices, validate_digraph

__all__ = [
    "Diagnostic",
    "ResDoubleError",
    "InputError",
    "DigraphError",
    "IrrationalCenter",
    "CompletenessViolation",
    "InternalDefect",
    "CrossCheckMismatch",
    "EnriquesDigraph",
    "ResolutionLattice",
    "matrices",
    "validate_digraph",
]
