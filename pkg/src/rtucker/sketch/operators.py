"""Matrix-free access to (possibly sparse) unfoldings."""

import math

import numpy as np
import scipy.sparse as sp

from ..tensor import Tensor, unfold
from ..utils.errors import InvalidArgumentError

_RESIDUAL_CHUNK = 4096


class LinearOperator:
    """
    A matrix X exposed through products ``X·M`` and ``Xᵀ·M``.

    Wraps a dense ndarray or a scipy sparse matrix; sparse unfoldings feed the
    randomized range finders without ever being densified.
    """

    def __init__(self, matrix: np.ndarray | sp.spmatrix):
        if sp.issparse(matrix):
            self._matrix = sp.csr_matrix(matrix, dtype=np.float64)
        else:
            self._matrix = np.asarray(matrix, dtype=np.float64)
            if self._matrix.ndim != 2:
                raise InvalidArgumentError(f"Expected a matrix, got shape {self._matrix.shape}")
        self._norm: float | None = None

    @classmethod
    def from_tensor(cls, x: Tensor, mode: int) -> "LinearOperator":
        """Operator for the mode-``mode`` unfolding of x."""
        return cls(unfold(x, mode))

    @property
    def shape(self) -> tuple[int, int]:
        return tuple(self._matrix.shape)  # type: ignore[return-value]

    @property
    def rows(self) -> int:
        return self._matrix.shape[0]

    @property
    def cols(self) -> int:
        return self._matrix.shape[1]

    @property
    def is_sparse(self) -> bool:
        return sp.issparse(self._matrix)

    @property
    def frobenius_norm(self) -> float:
        if self._norm is None:
            data = self._matrix.data if self.is_sparse else self._matrix
            self._norm = float(np.linalg.norm(data))
        return self._norm

    def apply(self, m: np.ndarray) -> np.ndarray:
        """X · M."""
        return np.asarray(self._matrix @ m)

    def apply_transposed(self, m: np.ndarray) -> np.ndarray:
        """Xᵀ · M."""
        return np.asarray(self._matrix.T @ m)

    def to_array(self) -> np.ndarray:
        return self._matrix.toarray() if self.is_sparse else self._matrix

    def residual_norm(self, q: np.ndarray) -> float:
        """‖X - Q Qᵀ X‖_F evaluated column block by column block (no cancellation)."""
        if not self.is_sparse:
            return float(np.linalg.norm(self._matrix - q @ (q.T @ self._matrix)))
        columns = self._matrix.tocsc()
        total = 0.0
        for start in range(0, self.cols, _RESIDUAL_CHUNK):
            block = columns[:, start : start + _RESIDUAL_CHUNK].toarray()
            total += float(np.linalg.norm(block - q @ (q.T @ block)) ** 2)
        return math.sqrt(total)


def as_operator(x: "LinearOperator | np.ndarray | sp.spmatrix") -> LinearOperator:
    """Wrap matrices as operators, pass operators through."""
    if isinstance(x, LinearOperator):
        return x
    return LinearOperator(x)
