"""Gaussian sketching and randomized range finders."""
from .operators import LinearOperator, as_operator
from .randomized import adapt_range_finder, randsvd, range_sketch, subspace_iterate
from .stream import SketchStream, gaussian_block

__all__ = [
    "LinearOperator",
    "SketchStream",
    "adapt_range_finder",
    "as_operator",
    "gaussian_block",
    "randsvd",
    "range_sketch",
    "subspace_iterate",
]
