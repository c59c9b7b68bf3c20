"""
Deterministic dense matrix kernels.

Thin QR and SVD wrap LAPACK through scipy. Row selection follows the strong
rank-revealing QR criterion: starting from a column-pivoted QR of Qᵀ, rows are
swapped into the selection while some coefficient of C = Q (PᵀQ)⁻¹ exceeds
eta in magnitude. Each swap grows |det(PᵀQ)| by that coefficient, so the loop
terminates, and on exit every entry of C is bounded by eta, which gives
‖(PᵀQ)⁻¹‖₂ ≤ sqrt(1 + eta² k (m - k)).
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp

from ..config import config
from ..utils.errors import InvalidArgumentError, NumericalError

logger = logging.getLogger(__name__)

# Wide unfoldings switch to the Gram matrix for their left singular vectors
_GRAM_ASPECT_RATIO = 64


@dataclass(frozen=True)
class SvdResult:
    """Thin SVD ``X ≈ U diag(S) Vᵀ`` with U: m×k, S nonincreasing, V: n×k."""

    u: np.ndarray
    s: np.ndarray
    v: np.ndarray

    @property
    def rank(self) -> int:
        return int(self.s.size)


@dataclass(frozen=True)
class RowSelection:
    """
    Rows picked from a tall orthonormal matrix.

    Attributes:
        indices: Distinct 0-based row indices, ascending
        conditioning: ‖(PᵀQ)⁻¹‖₂, always ≥ 1 for orthonormal Q
        swaps: Number of exchange steps performed after the pivoted QR start
    """

    indices: np.ndarray
    conditioning: float
    swaps: int = 0


@dataclass(frozen=True)
class NormEstimate:
    """Power-iteration estimate of a spectral norm."""

    value: float
    converged: bool
    iterations: int

    def __float__(self) -> float:
        return self.value


def _as_matrix(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2:
        raise InvalidArgumentError(f"Expected a matrix, got an array of shape {x.shape}")
    return x


def thin_qr(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Economic QR factorization ``Y = Q R``.

    Raises:
        InvalidArgumentError: If Y has fewer rows than columns
    """
    y = _as_matrix(y)
    if y.shape[0] < y.shape[1]:
        raise InvalidArgumentError(
            f"Thin QR needs rows >= cols, got {y.shape}", details={"shape": list(y.shape)}
        )
    q, r = sla.qr(y, mode="economic")
    return q, r


def thin_svd(x: np.ndarray) -> SvdResult:
    """Thin SVD with k = min(m, n)."""
    x = _as_matrix(x)
    try:
        u, s, vt = sla.svd(x, full_matrices=False, lapack_driver="gesdd")
    except np.linalg.LinAlgError:
        logger.warning("gesdd did not converge, retrying with gesvd")
        u, s, vt = sla.svd(x, full_matrices=False, lapack_driver="gesvd")
    return SvdResult(u=u, s=s, v=vt.T)


def truncated_svd(x: np.ndarray, r: int) -> SvdResult:
    """
    Best rank-r approximation factors (Eckart-Young).

    Raises:
        InvalidArgumentError: If r is outside [1, min(m, n)]
    """
    x = _as_matrix(x)
    if not 1 <= r <= min(x.shape):
        raise InvalidArgumentError(f"Truncation rank {r} outside [1, {min(x.shape)}]")
    full = thin_svd(x)
    return SvdResult(u=full.u[:, :r], s=full.s[:r], v=full.v[:, :r])


def leading_left_singular_vectors(x: np.ndarray | sp.spmatrix, r: int) -> np.ndarray:
    """
    First r left singular vectors of X.

    Sparse and very wide matrices go through the eigenvectors of X Xᵀ, which
    avoids an m × n workspace; everything else uses the thin SVD.
    """
    m, n = x.shape
    if not 1 <= r <= min(m, n):
        raise InvalidArgumentError(f"Rank {r} outside [1, {min(m, n)}]")
    if sp.issparse(x):
        gram = (x @ x.T).toarray()
    else:
        x = _as_matrix(x)
        if n <= _GRAM_ASPECT_RATIO * m:
            return truncated_svd(x, r).u
        gram = x @ x.T
    _, vectors = sla.eigh(gram, subset_by_index=[m - r, m - 1])
    return np.ascontiguousarray(vectors[:, ::-1])


def squared_singular_values(x: np.ndarray | sp.spmatrix) -> np.ndarray:
    """σ_i² of a dense or scipy-sparse matrix, nonincreasing, min(m, n) values."""
    m, n = x.shape
    if sp.issparse(x):
        gram = (x @ x.T).toarray() if m <= n else (x.T @ x).toarray()
    else:
        x = _as_matrix(x)
        if max(m, n) <= _GRAM_ASPECT_RATIO * min(m, n):
            return sla.svdvals(x) ** 2
        gram = x @ x.T if m <= n else x.T @ x
    return np.clip(sla.eigvalsh(gram), 0.0, None)[::-1]


def srrqr_select(q: np.ndarray, k: int | None = None, eta: float | None = None) -> RowSelection:
    """
    Strong rank-revealing row selection on an orthonormal Q.

    Args:
        q: m × k matrix with orthonormal columns
        k: Number of rows to select; must equal q's column count
        eta: Swap threshold (≥ 1); 2 gives the bound sqrt(1 + 4k(m - k))

    Raises:
        InvalidArgumentError: If m < k, k differs from q's columns or eta < 1
        NumericalError: If the selected submatrix is singular
    """
    q = _as_matrix(q)
    m, cols = q.shape
    k = cols if k is None else int(k)
    eta = config.numerics.srrqr_eta if eta is None else float(eta)
    if k != cols:
        raise InvalidArgumentError(f"Selection size {k} must equal the column count {cols}")
    if m < k:
        raise InvalidArgumentError(f"Cannot select {k} rows from {m}")
    if eta < 1.0:
        raise InvalidArgumentError(f"eta must be >= 1, got {eta}")

    _, _, pivots = sla.qr(q.T, mode="economic", pivoting=True)
    index = np.array(pivots[:k], dtype=np.int64)
    coeffs = _oblique_coefficients(q, index)

    swaps = 0
    max_swaps = config.numerics.srrqr_max_swaps
    while swaps < max_swaps:
        row, pos = np.unravel_index(np.abs(coeffs).argmax(), coeffs.shape)
        if abs(coeffs[row, pos]) <= eta:
            # Confirm on freshly solved coefficients before stopping
            coeffs = _oblique_coefficients(q, index)
            row, pos = np.unravel_index(np.abs(coeffs).argmax(), coeffs.shape)
            if abs(coeffs[row, pos]) <= eta:
                break
        # Sherman-Morrison update for replacing index[pos] by row
        pivot = coeffs[row, pos]
        column = coeffs[:, pos].copy()
        update = coeffs[row, :].copy()
        update[pos] -= 1.0
        coeffs -= np.outer(column, update) / pivot
        index[pos] = row
        swaps += 1
    else:
        logger.warning(f"sRRQR stopped after {max_swaps} swaps without meeting eta={eta}")

    index.sort()
    return RowSelection(indices=index, conditioning=_conditioning(q, index), swaps=swaps)


def pivoted_qr_select(q: np.ndarray) -> RowSelection:
    """Row selection from column-pivoted QR of Qᵀ alone (no swap refinement)."""
    q = _as_matrix(q)
    m, k = q.shape
    if m < k:
        raise InvalidArgumentError(f"Cannot select {k} rows from {m}")
    _, _, pivots = sla.qr(q.T, mode="economic", pivoting=True)
    index = np.sort(np.array(pivots[:k], dtype=np.int64))
    return RowSelection(indices=index, conditioning=_conditioning(q, index))


def oblique_factor(q: np.ndarray, sel: RowSelection) -> np.ndarray:
    """
    Form ``A = Q (PᵀQ)⁻¹``; rows ``sel.indices`` of A are exactly the identity.

    Raises:
        InvalidArgumentError: If the selection size does not match q's columns
        NumericalError: If the selected submatrix is singular
    """
    q = _as_matrix(q)
    index = np.asarray(sel.indices, dtype=np.int64)
    k = q.shape[1]
    if index.size != k:
        raise InvalidArgumentError(f"Selection of {index.size} rows for {k} columns")
    condition = np.linalg.cond(q[index])
    if not np.isfinite(condition) or condition * np.finfo(np.float64).eps >= 1.0:
        raise NumericalError(
            "Selected rows form a singular submatrix",
            details={"condition_estimate": float(condition)},
        )
    a = _oblique_coefficients(q, index)
    a[index] = np.eye(k)
    return a


def spectral_norm(
    x: np.ndarray, tol: float | None = None, max_iter: int | None = None
) -> NormEstimate:
    """
    σ_1(X) by power iteration on XᵀX.

    Stops when successive estimates agree to relative tolerance ``tol``; at the
    iteration cap the best estimate is returned with ``converged=False``.
    """
    x = _as_matrix(x)
    tol = config.numerics.spectral_norm_tol if tol is None else tol
    max_iter = config.numerics.spectral_norm_max_iter if max_iter is None else max_iter
    if tol <= 0:
        raise InvalidArgumentError(f"Tolerance must be positive, got {tol}")

    v = np.random.default_rng(0).standard_normal(x.shape[1])
    v /= np.linalg.norm(v)
    estimate = 0.0
    for iteration in range(1, max_iter + 1):
        w = x @ v
        sigma = float(np.linalg.norm(w))
        if sigma == 0.0:
            return NormEstimate(0.0, True, iteration)
        z = x.T @ w
        v = z / np.linalg.norm(z)
        if abs(sigma - estimate) <= tol * sigma:
            return NormEstimate(sigma, True, iteration)
        estimate = sigma

    logger.warning(f"Power iteration did not reach tol={tol} in {max_iter} steps")
    return NormEstimate(estimate, False, max_iter)


def orthonormality_defect(a: np.ndarray) -> float:
    """max |AᵀA - I|."""
    a = _as_matrix(a)
    return float(np.abs(a.T @ a - np.eye(a.shape[1])).max(initial=0.0))


def g_factor(rows: int, k: int) -> float:
    """Conditioning bound sqrt(1 + 4k(rows - k)) of strong RRQR with eta = 2."""
    return math.sqrt(1.0 + 4.0 * k * (rows - k))


def _oblique_coefficients(q: np.ndarray, index: np.ndarray) -> np.ndarray:
    try:
        return sla.solve(q[index].T, q.T).T
    except (sla.LinAlgError, ValueError) as e:
        raise NumericalError(
            "Selected rows form a singular submatrix", details={"rows": index.tolist()}
        ) from e


def _conditioning(q: np.ndarray, index: np.ndarray) -> float:
    smallest = sla.svdvals(q[index])[-1]
    if smallest == 0.0:
        raise NumericalError("Selected rows form a singular submatrix")
    return float(1.0 / smallest)
