"""Decomposition settings shared by every Tucker algorithm."""

import math
from collections.abc import Sequence
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from ..utils.errors import InvalidArgumentError
from ..utils.validators import validate_order, validate_ranks
from .ordering import auto_order

# Per-mode tolerances must reproduce the global one to this accuracy
_TOLERANCE_SPLIT_ATOL = 1e-12


class TuckerConfig(BaseModel):
    """
    Inputs of a Tucker decomposition.

    Fixed-rank methods read ``ranks``; adaptive methods read ``tolerance``
    (optionally split per mode by ``mode_tolerances``) and ``block_size``.
    ``order`` is "auto" or a 0-based permutation of the modes.
    """

    ranks: tuple[int, ...] | None = None
    oversampling: int = Field(default=5, ge=0)
    power: int = Field(default=0, ge=0)
    order: Literal["auto"] | tuple[int, ...] = "auto"
    tolerance: float | None = Field(default=None, gt=0.0, lt=1.0)
    mode_tolerances: tuple[float, ...] | None = None
    block_size: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0)
    selection: Literal["srrqr", "pivoted-qr"] = "srrqr"
    eta: float | None = Field(default=None, ge=1.0)

    @field_validator("ranks")
    @classmethod
    def _positive_ranks(cls, ranks: tuple[int, ...] | None) -> tuple[int, ...] | None:
        if ranks is not None and (not ranks or any(r < 1 for r in ranks)):
            raise ValueError(f"Ranks must be positive integers, got {ranks}")
        return ranks

    @field_validator("order")
    @classmethod
    def _permutation(cls, order: str | tuple[int, ...]) -> str | tuple[int, ...]:
        if order != "auto" and sorted(order) != list(range(len(order))):
            raise ValueError(f"Order {list(order)} is not a permutation of 0..{len(order) - 1}")
        return order

    @field_validator("mode_tolerances")
    @classmethod
    def _nonnegative(cls, eps: tuple[float, ...] | None) -> tuple[float, ...] | None:
        if eps is not None and (not eps or any(e < 0.0 or e >= 1.0 for e in eps)):
            raise ValueError(f"Per-mode tolerances must lie in [0, 1), got {eps}")
        return eps

    @model_validator(mode="after")
    def _split_matches_total(self) -> "TuckerConfig":
        if self.mode_tolerances is None:
            return self
        total = sum(e * e for e in self.mode_tolerances)
        if self.tolerance is None:
            if not 0.0 < total < 1.0:
                raise ValueError(f"Per-mode tolerances give a total of {math.sqrt(total)}")
            self.tolerance = math.sqrt(total)
        elif abs(total - self.tolerance**2) > _TOLERANCE_SPLIT_ATOL:
            raise ValueError(
                f"Sum of squared per-mode tolerances {total} differs from "
                f"tolerance² = {self.tolerance**2}"
            )
        return self

    def require_ranks(self, shape: Sequence[int]) -> tuple[int, ...]:
        """Validated ranks for ``shape``."""
        if self.ranks is None:
            raise InvalidArgumentError("This method needs a rank vector")
        return validate_ranks(self.ranks, shape)

    def require_tolerance(self) -> float:
        if self.tolerance is None:
            raise InvalidArgumentError("This method needs a tolerance")
        return self.tolerance

    def mode_tolerance_vector(self, ndim: int) -> tuple[float, ...]:
        """Per-mode tolerances, ε/√d each unless given explicitly."""
        eps = self.require_tolerance()
        if self.mode_tolerances is None:
            return (eps / math.sqrt(ndim),) * ndim
        if len(self.mode_tolerances) != ndim:
            raise InvalidArgumentError(
                f"Expected {ndim} per-mode tolerances, got {len(self.mode_tolerances)}"
            )
        return self.mode_tolerances

    def processing_order(self, shape: Sequence[int], kind: str = "randomized") -> tuple[int, ...]:
        """Resolve "auto" for ``shape`` or validate an explicit order."""
        if self.order == "auto":
            return auto_order(shape, kind)
        return validate_order(self.order, len(shape))


def sketch_width(r: int, p: int, rows: int, cols: int) -> tuple[int, int]:
    """
    Clamp a sketch to the unfolding.

    Returns:
        (ℓ, rank) with ℓ = min(r + p, rows, cols) sketch columns and the
        truncation rank min(r, ℓ)
    """
    width = min(r + p, rows, cols)
    return width, min(r, width)
