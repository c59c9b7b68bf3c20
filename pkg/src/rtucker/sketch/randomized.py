"""
Randomized range finders.

``randsvd`` sketches ``Y = XΩ`` with r + p Gaussian columns, orthonormalizes,
projects ``B = QᵀX`` and truncates the small SVD of B to rank r.
``adapt_range_finder`` grows Q block by block until the residual
‖X - QQᵀX‖_F drops below the requested tolerance.
"""

import logging
import math

import numpy as np
import scipy.sparse as sp

from ..config import config
from ..linalg import SvdResult, thin_qr, thin_svd
from ..utils.errors import InvalidArgumentError
from ..utils.validators import validate_tolerance
from .operators import LinearOperator, as_operator
from .stream import SketchStream

logger = logging.getLogger(__name__)

# Below this fraction of ‖X‖² the running identity ‖X‖² - Σ‖QᵢᵀX‖² has lost
# too many digits; the residual is then recomputed directly.
_EXACT_RESIDUAL_BELOW = 1e-8

Matrix = LinearOperator | np.ndarray | sp.spmatrix


def subspace_iterate(x: Matrix, y: np.ndarray, q: int) -> np.ndarray:
    """
    Orthonormal basis of ``(XXᵀ)^q Y``, re-orthonormalizing after every half-step.

    With ``q = 0`` this is the Q factor of ``thin_qr(Y)``.
    """
    if q < 0:
        raise InvalidArgumentError(f"Subspace iteration count must be >= 0, got {q}")
    op = as_operator(x)
    basis, _ = thin_qr(y)
    for _ in range(q):
        back, _ = thin_qr(op.apply_transposed(basis))
        basis, _ = thin_qr(op.apply(back))
    return basis


def range_sketch(x: Matrix, width: int, s: SketchStream, power: int = 0) -> np.ndarray:
    """Orthonormal Q (rows × width) spanning the sketched range of X."""
    op = as_operator(x)
    if not 1 <= width <= min(op.shape):
        raise InvalidArgumentError(
            f"Sketch width {width} outside [1, {min(op.shape)}]",
            details={"shape": list(op.shape)},
        )
    omega = s.next_block(op.cols, width)
    return subspace_iterate(op, op.apply(omega), power)


def randsvd(x: Matrix, r: int, p: int, s: SketchStream, power: int = 0) -> SvdResult:
    """
    Randomized rank-r SVD of X with oversampling p.

    Args:
        x: Matrix or operator
        r: Target rank (≥ 1)
        p: Oversampling (≥ 0); r + p must not exceed min(rows, cols)
        s: Sketch stream; its cursor advances by r + p
        power: Subspace iterations

    Raises:
        InvalidArgumentError: If r < 1, p < 0 or r + p > min(rows, cols)
    """
    op = as_operator(x)
    if r < 1 or p < 0:
        raise InvalidArgumentError(f"Need r >= 1 and p >= 0, got r={r}, p={p}")
    if r + p > min(op.shape):
        raise InvalidArgumentError(
            f"r + p = {r + p} exceeds min dimension {min(op.shape)}",
            details={"r": r, "p": p, "shape": list(op.shape)},
        )
    q = range_sketch(op, r + p, s, power)
    small = thin_svd(op.apply_transposed(q).T)
    return SvdResult(u=q @ small.u[:, :r], s=small.s[:r], v=small.v[:, :r])


def adapt_range_finder(
    x: Matrix,
    eps: float,
    b: int,
    s: SketchStream,
    reference_norm: float | None = None,
    power: int = 0,
) -> np.ndarray:
    """
    Blocked adaptive range finder.

    Draws b Gaussian columns at a time, orthogonalizes ``XΩ_b`` twice against
    the current basis and appends it, until ``‖X - QQᵀX‖_F ≤ eps · reference``.
    ``reference`` defaults to ‖X‖_F; sequential Tucker passes ‖x‖_F of the
    original tensor so that the tolerance stays absolute across modes.

    Returns:
        Q with orthonormal columns; at least one block, at most min(rows, cols)
        columns, a multiple of b unless capped by the min dimension or the
        range of X is exhausted.

    Raises:
        InvalidArgumentError: If eps is outside (0, 1) or b < 1
    """
    eps = validate_tolerance(eps)
    if b < 1:
        raise InvalidArgumentError(f"Block size must be >= 1, got {b}")
    op = as_operator(x)
    norm = op.frobenius_norm
    reference = norm if reference_norm is None else float(reference_norm)
    target = eps * reference
    limit = min(op.shape)

    if norm == 0.0:
        basis = np.zeros((op.rows, 1))
        basis[0, 0] = 1.0
        return basis

    drop_tol = config.numerics.range_finder_drop_tol * norm
    basis = np.zeros((op.rows, 0))
    residual_sq = norm**2
    residual = norm
    while basis.shape[1] < limit:
        width = min(b, limit - basis.shape[1])
        w = op.apply(s.next_block(op.cols, width))
        for _ in range(power):
            w = op.apply(op.apply_transposed(w))
        for _ in range(2):
            w -= basis @ (basis.T @ w)
        if basis.shape[1] and np.linalg.norm(w) <= drop_tol:
            logger.debug(f"Range exhausted at {basis.shape[1]} columns")
            break
        block, _ = thin_qr(w)
        if basis.shape[1]:
            block -= basis @ (basis.T @ block)
            block, _ = thin_qr(block)
        basis = np.hstack([basis, block])

        residual_sq -= float(np.linalg.norm(op.apply_transposed(block)) ** 2)
        if residual_sq <= _EXACT_RESIDUAL_BELOW * norm**2:
            residual = op.residual_norm(basis)
            residual_sq = residual**2
        else:
            residual = math.sqrt(residual_sq)
        logger.debug(f"{basis.shape[1]} columns, residual {residual:.3e} (target {target:.3e})")
        if residual <= target:
            break

    return basis
