"""Exact relative Rota-Baxter Lie algebra computations."""

from ._rrbx import (
    FORMAT_VERSION,
    RrbxError,
    coboundary_matrix,
    cocycles_equivalent,
    cohomology_dim,
    run,
    validate,
)

__all__ = [
    "FORMAT_VERSION",
    "RrbxError",
    "coboundary_matrix",
    "cocycles_equivalent",
    "cohomology_dim",
    "run",
    "validate",
]
