"""Exact character ring of sl(3) over the extended affine Weyl group, and its
quantisation at rational level k + 3 = 3/p."""

from .weyl import (
    AffineElement,
    FiniteWeyl,
    Weight,
    gamma,
    iota,
    is_dominant,
    reduce_to_fundamental,
)

__all__ = [
    "AffineElement",
    "FiniteWeyl",
    "Weight",
    "gamma",
    "iota",
    "is_dominant",
    "reduce_to_fundamental",
]

__version__ = "0.1.0"
