"""
Tensor containers: dense and coordinate-format sparse tensors, and the Tucker format.

Dense tensors are linearized first-mode-fastest (Fortran order). Sparse
coordinates are 0-based in memory; 1-based indices only appear in files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np
from pydantic import BaseModel, Field

from ..utils.errors import InvalidArgumentError
from ..utils.validators import validate_shape


def _frozen(array: np.ndarray) -> np.ndarray:
    view = array.view()
    view.flags.writeable = False
    return view


@dataclass(frozen=True)
class DenseTensor:
    """
    A d-mode array of 64-bit floats.

    Attributes:
        data: The entries; any memory layout, linearized in Fortran order
    """

    data: np.ndarray

    def __post_init__(self) -> None:
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim < 1:
            raise InvalidArgumentError("A tensor needs at least one mode")
        validate_shape(data.shape)
        if not np.isfinite(data).all():
            raise InvalidArgumentError("Tensor entries must be finite")
        object.__setattr__(self, "data", _frozen(data))

    @classmethod
    def from_values(cls, values: np.ndarray, shape: tuple[int, ...]) -> DenseTensor:
        """Build a tensor from a first-mode-fastest value sequence."""
        shape = validate_shape(shape)
        values = np.asarray(values, dtype=np.float64).ravel()
        if values.size != math.prod(shape):
            raise InvalidArgumentError(
                f"{values.size} values cannot fill shape {shape}",
                details={"size": values.size, "shape": list(shape)},
            )
        return cls(values.reshape(shape, order="F"))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(self.data.shape)

    @property
    def ndim(self) -> int:
        return self.data.ndim

    @property
    def size(self) -> int:
        return int(self.data.size)

    @property
    def nnz(self) -> int:
        return int(np.count_nonzero(self.data))

    @property
    def values(self) -> np.ndarray:
        """Entries in first-mode-fastest order."""
        return self.data.ravel(order="F")

    def to_dense(self, cap: int | None = None) -> DenseTensor:
        return self


@dataclass(frozen=True)
class SparseTensor:
    """
    Coordinate-format sparse tensor.

    Entries are kept sorted lexicographically by coordinate, duplicates are
    merged by summation and exact zeros are dropped, whatever the input order.

    Attributes:
        shape: Mode sizes
        indices: (nnz, d) array of 0-based coordinates
        values: (nnz,) array of nonzero values
    """

    shape: tuple[int, ...]
    indices: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        shape = validate_shape(self.shape)
        indices = np.asarray(self.indices, dtype=np.int64)
        values = np.asarray(self.values, dtype=np.float64).ravel()
        if indices.size == 0:
            indices = indices.reshape(0, len(shape))
        if indices.ndim != 2 or indices.shape[1] != len(shape):
            raise InvalidArgumentError(
                f"Indices must have shape (nnz, {len(shape)}), got {indices.shape}"
            )
        if indices.shape[0] != values.size:
            raise InvalidArgumentError(
                f"{indices.shape[0]} coordinates but {values.size} values"
            )
        if indices.size and (
            (indices < 0).any() or (indices >= np.asarray(shape, dtype=np.int64)).any()
        ):
            raise InvalidArgumentError(f"Coordinates out of bounds for shape {shape}")
        if not np.isfinite(values).all():
            raise InvalidArgumentError("Tensor entries must be finite")

        indices, values = _canonicalize(indices, values)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "indices", _frozen(indices))
        object.__setattr__(self, "values", _frozen(values))

    @classmethod
    def from_dense(cls, x: DenseTensor | np.ndarray) -> SparseTensor:
        """Collect the nonzero entries of a dense tensor."""
        data = x.data if isinstance(x, DenseTensor) else np.asarray(x, dtype=np.float64)
        coords = np.nonzero(data)
        return cls(tuple(data.shape), np.stack(coords, axis=1), data[coords])

    @property
    def ndim(self) -> int:
        return len(self.shape)

    @property
    def nnz(self) -> int:
        return int(self.values.size)

    @property
    def size(self) -> int:
        return math.prod(self.shape)

    def to_dense(self, cap: int | None = None) -> DenseTensor:
        """
        Densify.

        Args:
            cap: Refuse to allocate more than this many elements

        Raises:
            InvalidArgumentError: If the dense size exceeds cap
        """
        if cap is not None and self.size > cap:
            raise InvalidArgumentError(
                f"Densifying shape {self.shape} exceeds the cap of {cap} elements",
                details={"size": self.size, "cap": cap},
            )
        data = np.zeros(self.shape, dtype=np.float64, order="F")
        data[tuple(self.indices.T)] = self.values
        return DenseTensor(data)

    def select(self, mode: int, positions: np.ndarray) -> SparseTensor:
        """
        Keep the slices ``positions`` along ``mode`` (the product with a selection Pᵀ).

        Values are carried over unchanged, so the result only holds entries of self.
        """
        positions = np.asarray(positions, dtype=np.int64)
        remap = np.full(self.shape[mode], -1, dtype=np.int64)
        remap[positions] = np.arange(positions.size)
        new_mode_index = remap[self.indices[:, mode]]
        keep = new_mode_index >= 0
        indices = self.indices[keep].copy()
        indices[:, mode] = new_mode_index[keep]
        shape = list(self.shape)
        shape[mode] = int(positions.size)
        return SparseTensor(tuple(shape), indices, self.values[keep])


def _canonicalize(indices: np.ndarray, values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sort coordinates lexicographically, sum duplicates and drop zeros."""
    if values.size == 0:
        return indices, values
    # lexsort treats its last key as primary
    order = np.lexsort(indices.T[::-1])
    indices = indices[order]
    values = values[order]
    starts = np.ones(values.size, dtype=bool)
    starts[1:] = (indices[1:] != indices[:-1]).any(axis=1)
    if not starts.all():
        bounds = np.flatnonzero(starts)
        values = np.add.reduceat(values, bounds)
        indices = indices[bounds]
    nonzero = values != 0.0
    return indices[nonzero], values[nonzero]


Tensor = Union[DenseTensor, SparseTensor]


def as_tensor(x: Tensor | np.ndarray) -> Tensor:
    """Wrap a raw array as a DenseTensor, pass tensors through."""
    if isinstance(x, (DenseTensor, SparseTensor)):
        return x
    return DenseTensor(np.asarray(x, dtype=np.float64))


class TuckerMeta(BaseModel):
    """Provenance of a Tucker decomposition."""

    method: str
    ranks: list[int] | None = None
    oversampling: int = Field(default=0, ge=0)
    power: int = Field(default=0, ge=0)
    seed: int | None = None
    order: list[int] | None = None
    tolerance: float | None = None
    mode_tolerances: list[float] | None = None
    block_size: int | None = None

    # Structure-preserving methods only: row selection rule and 0-based selected rows per mode
    selection: str | None = None
    eta: float | None = None
    selections: list[list[int]] | None = None
    intermediate_nnz: list[int] | None = None


@dataclass(frozen=True)
class TuckerTensor:
    """
    A tensor in Tucker format ``core ×_1 A_1 ×_2 ... ×_d A_d``.

    Attributes:
        core: Core tensor, dense or (for structure-preserving methods) sparse
        factors: One I_j × core.shape[j] matrix per mode
        meta: Method, ranks, oversampling, seed and processing order
    """

    core: Tensor
    factors: tuple[np.ndarray, ...]
    meta: TuckerMeta = field(default_factory=lambda: TuckerMeta(method="custom"))

    def __post_init__(self) -> None:
        factors = tuple(_frozen(np.asarray(a, dtype=np.float64)) for a in self.factors)
        if len(factors) != self.core.ndim:
            raise InvalidArgumentError(
                f"{len(factors)} factors for a {self.core.ndim}-mode core"
            )
        for j, a in enumerate(factors):
            if a.ndim != 2 or a.shape[1] != self.core.shape[j]:
                raise InvalidArgumentError(
                    f"Factor {j} has shape {a.shape}, expected (*, {self.core.shape[j]})",
                    details={"mode": j},
                )
        object.__setattr__(self, "factors", factors)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(a.shape[0] for a in self.factors)

    @property
    def core_shape(self) -> tuple[int, ...]:
        return self.core.shape

    @property
    def ndim(self) -> int:
        return len(self.factors)

    @property
    def is_structure_preserving(self) -> bool:
        return self.meta.selections is not None
