"""Shrinking large sparse tensors: strided subsampling and mode condensing."""

import logging
from collections.abc import Sequence

import numpy as np

from ..tensor import DenseTensor, SparseTensor, Tensor
from ..utils.errors import InvalidArgumentError
from ..utils.validators import validate_mode

logger = logging.getLogger(__name__)


def _as_sparse(x: Tensor) -> SparseTensor:
    return SparseTensor.from_dense(x) if isinstance(x, DenseTensor) else x


def subsample(x: Tensor, strides: Sequence[int]) -> SparseTensor:
    """
    Keep every stride_k-th slice of each mode, starting from the first.

    An entry survives when every 0-based index is a multiple of its stride and
    moves to index i // stride; mode k shrinks to ceil(I_k / stride_k).

    Raises:
        InvalidArgumentError: If the stride count is wrong or a stride is < 1
    """
    x = _as_sparse(x)
    strides = tuple(int(s) for s in strides)
    if len(strides) != x.ndim:
        raise InvalidArgumentError(f"Expected {x.ndim} strides, got {len(strides)}")
    if any(s < 1 for s in strides):
        raise InvalidArgumentError(f"Strides must be >= 1, got {strides}")

    step = np.asarray(strides, dtype=np.int64)
    keep = (x.indices % step == 0).all(axis=1)
    shape = tuple(-(-n // s) for n, s in zip(x.shape, strides))
    result = SparseTensor(shape, x.indices[keep] // step, x.values[keep])
    logger.debug(f"subsample {x.shape} by {strides} -> {shape}, {result.nnz} nonzeros")
    return result


def condense_mode(x: Tensor, mode: int) -> SparseTensor:
    """
    Sum over ``mode``, removing it.

    Raises:
        InvalidArgumentError: If x has a single mode
    """
    x = _as_sparse(x)
    if x.ndim < 2:
        raise InvalidArgumentError("Cannot condense the only mode of a tensor")
    mode = validate_mode(mode, x.ndim)
    shape = x.shape[:mode] + x.shape[mode + 1 :]
    result = SparseTensor(shape, np.delete(x.indices, mode, axis=1), x.values)
    logger.debug(f"condense mode {mode}: {x.shape} -> {shape}, {result.nnz} nonzeros")
    return result
