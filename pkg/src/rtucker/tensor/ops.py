"""
Mode unfolding, folding, mode products, norms and Tucker reconstruction.

Unfolding convention: the mode-j unfolding has I_j rows, and the column of
entry (i_1, ..., i_d) is  c = Σ_{k≠j} i_k · Π_{m<k, m≠j} I_m  (0-based), i.e.
lower modes vary fastest. With this order

    unfold(x ×_1 A_1 ... ×_d A_d, j) = A_j · unfold(x, j) · (A_d ⊗ ... ⊗ A_1)ᵀ

where A_j is skipped in the Kronecker product.
"""

import logging
import math
from collections.abc import Sequence

import numpy as np
import scipy.sparse as sp

from ..config import config
from ..utils.errors import InvalidArgumentError
from ..utils.validators import validate_mode, validate_shape
from .containers import DenseTensor, SparseTensor, Tensor, TuckerTensor, as_tensor

logger = logging.getLogger(__name__)

Unfolding = np.ndarray | sp.csr_matrix

# Elements of the reconstruction materialized at once by the streaming error path
_SLAB_ELEMENTS = 1 << 22


def unfold(x: Tensor, mode: int) -> Unfolding:
    """
    Mode-``mode`` unfolding of a tensor.

    Args:
        x: Dense or sparse tensor
        mode: 0-based mode

    Returns:
        Dense ndarray for dense input, CSR matrix for sparse input

    Raises:
        InvalidArgumentError: If mode is out of range
    """
    x = as_tensor(x)
    mode = validate_mode(mode, x.ndim)
    rows = x.shape[mode]
    cols = math.prod(x.shape) // rows

    if isinstance(x, DenseTensor):
        return np.moveaxis(x.data, mode, 0).reshape(rows, cols, order="F")

    col_index = np.zeros(x.nnz, dtype=np.int64)
    stride = 1
    for k, dim in enumerate(x.shape):
        if k == mode:
            continue
        col_index += x.indices[:, k] * stride
        stride *= dim
    return sp.csr_matrix(
        (x.values, (x.indices[:, mode], col_index)), shape=(rows, cols), dtype=np.float64
    )


def fold(m: np.ndarray, mode: int, shape: Sequence[int]) -> DenseTensor:
    """
    Inverse of :func:`unfold` for dense matrices.

    Raises:
        InvalidArgumentError: If the matrix dimensions do not match shape and mode
    """
    shape = validate_shape(shape)
    mode = validate_mode(mode, len(shape))
    if sp.issparse(m):
        m = m.toarray()
    m = np.asarray(m, dtype=np.float64)
    expected = (shape[mode], math.prod(shape) // shape[mode])
    if m.shape != expected:
        raise InvalidArgumentError(
            f"Matrix of shape {m.shape} cannot fold into mode {mode} of {shape}",
            details={"expected": list(expected), "got": list(m.shape)},
        )
    others = [n for k, n in enumerate(shape) if k != mode]
    return DenseTensor(np.moveaxis(m.reshape([shape[mode], *others], order="F"), 0, mode))


def mode_product(x: Tensor, a: np.ndarray, mode: int) -> DenseTensor:
    """
    Mode-``mode`` product ``x ×_mode a``, computed as fold(a · X_(mode)).

    Raises:
        InvalidArgumentError: If a.shape[1] != x.shape[mode]
    """
    x = as_tensor(x)
    mode = validate_mode(mode, x.ndim)
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[1] != x.shape[mode]:
        raise InvalidArgumentError(
            f"Matrix of shape {a.shape} cannot multiply mode {mode} of size {x.shape[mode]}",
            details={"mode": mode},
        )

    unfolded = unfold(x, mode)
    if sp.issparse(unfolded):
        product = np.asarray((unfolded.T @ a.T).T)
    else:
        product = a @ unfolded

    new_shape = list(x.shape)
    new_shape[mode] = a.shape[0]
    return fold(product, mode, new_shape)


def multi_mode_product(
    x: Tensor, factors: Sequence[tuple[np.ndarray, int]]
) -> Tensor:
    """
    Chain of mode products along distinct modes.

    Products along distinct modes commute, so the result does not depend on the
    order of ``factors``. An empty list returns x unchanged.

    Raises:
        InvalidArgumentError: On duplicate modes or dimension mismatch
    """
    x = as_tensor(x)
    modes = [validate_mode(mode, x.ndim) for _, mode in factors]
    if len(set(modes)) != len(modes):
        raise InvalidArgumentError(f"Duplicate modes in product: {modes}")

    result: Tensor = x
    for a, mode in factors:
        result = mode_product(result, a, mode)
    return result


def project(x: Tensor, factors: Sequence[np.ndarray]) -> DenseTensor:
    """Core ``x ×_1 A_1ᵀ ... ×_d A_dᵀ``; the most shrinking modes go first."""
    x = as_tensor(x)
    if len(factors) != x.ndim:
        raise InvalidArgumentError(f"{len(factors)} factors for a {x.ndim}-mode tensor")
    order = sorted(range(x.ndim), key=lambda j: factors[j].shape[1] - factors[j].shape[0])
    result = multi_mode_product(x, [(np.asarray(factors[j]).T, j) for j in order])
    if isinstance(result, SparseTensor):
        return result.to_dense()
    return result


def select(x: Tensor, mode: int, positions: np.ndarray) -> Tensor:
    """Keep the slices ``positions`` along ``mode``; entries are copied verbatim."""
    x = as_tensor(x)
    mode = validate_mode(mode, x.ndim)
    if isinstance(x, SparseTensor):
        return x.select(mode, positions)
    return DenseTensor(np.take(x.data, np.asarray(positions, dtype=np.int64), axis=mode))


def frobenius_norm(x: Tensor) -> float:
    """Root of the sum of squared entries."""
    x = as_tensor(x)
    if isinstance(x, SparseTensor):
        return float(np.linalg.norm(x.values))
    return float(np.linalg.norm(x.data))


def reconstruct(t: TuckerTensor) -> DenseTensor:
    """Expand a Tucker tensor to a dense tensor of shape (I_1, ..., I_d)."""
    # Shrinking products first keeps intermediates small
    order = sorted(range(t.ndim), key=lambda j: t.factors[j].shape[0] - t.factors[j].shape[1])
    result = multi_mode_product(t.core, [(t.factors[j], j) for j in order])
    if isinstance(result, SparseTensor):
        return result.to_dense()
    return result


def relative_error(
    x: Tensor,
    t: TuckerTensor,
    path: str = "auto",
    densify_cap: int | None = None,
) -> float:
    """
    Relative approximation error ``‖x - reconstruct(t)‖_F / ‖x‖_F``.

    Args:
        x: Original tensor
        t: Approximation
        path: "reconstruct" (dense difference), "orthonormal" (sqrt(‖x‖² - ‖core‖²),
            valid only when core = x ×_j A_jᵀ with orthonormal A_j), "streaming"
            (the difference accumulated one slab of the last mode at a time) or "auto"
        densify_cap: Largest reconstruction that "auto" will densify

    Raises:
        InvalidArgumentError: If ‖x‖_F = 0, shapes differ or path is unknown
    """
    x = as_tensor(x)
    if tuple(x.shape) != t.shape:
        raise InvalidArgumentError(f"Shape {x.shape} does not match Tucker shape {t.shape}")
    norm_x = frobenius_norm(x)
    if norm_x == 0.0:
        raise InvalidArgumentError("Relative error is undefined for a zero tensor")

    cap = config.numerics.densify_cap if densify_cap is None else densify_cap
    if path == "auto":
        path = "reconstruct" if math.prod(t.shape) <= cap else "streaming"
        logger.debug(f"relative_error path: {path}")

    if path == "orthonormal":
        core_norm = frobenius_norm(t.core)
        return math.sqrt(max(0.0, norm_x**2 - core_norm**2)) / norm_x

    if path == "reconstruct":
        approx = reconstruct(t).data
        if isinstance(x, SparseTensor):
            diff = np.array(approx, order="F")
            diff[tuple(x.indices.T)] -= x.values
        else:
            diff = x.data - approx
        return float(np.linalg.norm(diff)) / norm_x

    if path == "streaming":
        return math.sqrt(_slab_error_squared(x, t)) / norm_x

    raise InvalidArgumentError(f"Unknown error evaluation path '{path}'")


def tucker_norm(t: TuckerTensor) -> float:
    """‖core ×_j A_j‖_F via the factor Gram matrices, without reconstruction."""
    core = t.core.to_dense()
    grams = [(a.T @ a, j) for j, a in enumerate(t.factors)]
    weighted = multi_mode_product(core, grams)
    return math.sqrt(max(0.0, float(np.vdot(core.data, weighted.data))))


def _slab_error_squared(x: Tensor, t: TuckerTensor) -> float:
    """
    ‖x - x̂‖_F² accumulated over slabs of the last mode.

    Each slab of x̂ is core ×_k A_k with A_d restricted to the slab's rows, so
    at most one slab of the reconstruction is held at a time.
    """
    last = t.ndim - 1
    rows_per_slab = max(1, _SLAB_ELEMENTS // math.prod(t.shape[:last]))
    head = [(t.factors[k], k) for k in range(last)]

    if isinstance(x, SparseTensor):
        by_slab = np.argsort(x.indices[:, last], kind="stable")
        slab_index = x.indices[by_slab, last]

    total = 0.0
    for start in range(0, t.shape[last], rows_per_slab):
        stop = min(start + rows_per_slab, t.shape[last])
        slab = multi_mode_product(t.core, [*head, (t.factors[last][start:stop], last)])
        diff = np.array(slab.to_dense().data, order="F")
        if isinstance(x, SparseTensor):
            lo, hi = np.searchsorted(slab_index, [start, stop])
            entries = by_slab[lo:hi]
            local = x.indices[entries].copy()
            local[:, last] -= start
            diff[tuple(local.T)] -= x.values[entries]
        else:
            diff -= x.data[..., start:stop]
        total += float(np.vdot(diff, diff))
    return total
