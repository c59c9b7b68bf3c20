"""Synthetic test tensors."""

import logging
import math
from collections.abc import Sequence

import numpy as np

from ..tensor import DenseTensor, SparseTensor
from ..utils.errors import InvalidArgumentError
from ..utils.validators import validate_shape

logger = logging.getLogger(__name__)

# Leading terms boosted by gamma in the synthetic sparse tensor
_GAP_TERMS = 10
_DENSITY = 0.05


def gen_hilbert(shape: Sequence[int]) -> DenseTensor:
    """
    Hilbert tensor ``x[i_1, ..., i_d] = 1 / (i_1 + ... + i_d)`` with 1-based indices.

    The array is Fortran-contiguous, so the mode-0 unfolding is a view.
    """
    dims = validate_shape(shape)
    reversed_dims = dims[::-1]
    data = np.zeros(reversed_dims, dtype=np.float64)
    for axis, n in enumerate(reversed_dims):
        index_shape = [1] * len(dims)
        index_shape[axis] = n
        data += np.arange(1, n + 1, dtype=np.float64).reshape(index_shape)
    np.reciprocal(data, out=data)
    return DenseTensor(data.T)


def gen_synthetic_sparse(
    n: int, gamma: float, seed: int = 0, terms: int | None = None
) -> SparseTensor:
    """
    Sparse n × n × n sum of rank-one terms with a spectral gap after the tenth.

        x = Σ_{i≤10} (γ/i²) x_i∘y_i∘z_i + Σ_{10<i≤terms} (1/i²) x_i∘y_i∘z_i

    Every vector has ⌈0.05 n⌉ nonzeros at distinct uniformly drawn positions
    with values uniform in (0, 1); overlapping terms are summed.

    Args:
        n: Mode size
        gamma: Weight of the leading terms (> 0)
        seed: Generator seed
        terms: Number of rank-one terms, n by default
    """
    if n < 1:
        raise InvalidArgumentError(f"Size must be positive, got {n}")
    if gamma <= 0:
        raise InvalidArgumentError(f"gamma must be positive, got {gamma}")
    terms = n if terms is None else terms
    rng = np.random.default_rng(seed)
    k = math.ceil(_DENSITY * n)

    coords = []
    values = []
    for i in range(1, terms + 1):
        weight = (gamma if i <= _GAP_TERMS else 1.0) / i**2
        supports = [np.sort(rng.choice(n, size=k, replace=False)) for _ in range(3)]
        entries = [rng.uniform(0.0, 1.0, size=k) for _ in range(3)]
        grid = np.meshgrid(*supports, indexing="ij")
        coords.append(np.stack([g.ravel() for g in grid], axis=1))
        values.append(weight * np.einsum("a,b,c->abc", *entries).ravel())

    x = SparseTensor((n, n, n), np.concatenate(coords), np.concatenate(values))
    logger.debug(f"Synthetic sparse tensor n={n}, gamma={gamma}: {x.nnz} nonzeros")
    return x
