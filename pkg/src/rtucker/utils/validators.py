"""Validation utilities for tensor operations and CLI input."""
from collections.abc import Sequence
from pathlib import Path
from typing import NamedTuple

from .errors import InvalidArgumentError


class InputSpec(NamedTuple):
    """Parsed form of a ``--input`` argument."""

    kind: str  # "tns", "npy", "hilbert" or "sparse"
    path: Path | None = None
    params: tuple[float, ...] = ()


def validate_mode(mode: int, ndim: int) -> int:
    """
    Validate a 0-based mode index.

    Args:
        mode: Mode index
        ndim: Number of modes of the tensor

    Returns:
        The mode as an int

    Raises:
        InvalidArgumentError: If the mode is out of range
    """
    if not 0 <= int(mode) < ndim:
        raise InvalidArgumentError(
            f"Mode {mode} out of range for a {ndim}-mode tensor",
            details={"mode": mode, "ndim": ndim},
        )
    return int(mode)


def validate_shape(shape: Sequence[int]) -> tuple[int, ...]:
    """
    Validate a tensor shape: at least one mode, every dim positive.

    Raises:
        InvalidArgumentError: If a dimension is not a positive integer
    """
    dims = tuple(int(n) for n in shape)
    if not dims:
        raise InvalidArgumentError("Shape must have at least one mode")
    if any(n < 1 for n in dims):
        raise InvalidArgumentError(f"Every dimension must be >= 1, got {dims}")
    return dims


def validate_ranks(ranks: Sequence[int], shape: Sequence[int]) -> tuple[int, ...]:
    """
    Validate a target rank vector against a shape.

    Args:
        ranks: One rank per mode
        shape: Tensor shape

    Returns:
        Ranks as a tuple of ints

    Raises:
        InvalidArgumentError: If the count is wrong or a rank is outside [1, I_j]
    """
    ranks = tuple(int(r) for r in ranks)
    if len(ranks) != len(shape):
        raise InvalidArgumentError(
            f"Expected {len(shape)} ranks, got {len(ranks)}",
            details={"ranks": list(ranks), "shape": list(shape)},
        )
    for j, (r, n) in enumerate(zip(ranks, shape)):
        if not 1 <= r <= n:
            raise InvalidArgumentError(
                f"Rank {r} for mode {j} must lie in [1, {n}]",
                details={"mode": j, "rank": r, "dim": n},
            )
    return ranks


def validate_order(order: Sequence[int], ndim: int) -> tuple[int, ...]:
    """
    Validate a processing order: a permutation of 0..ndim-1.

    Raises:
        InvalidArgumentError: If order is not a permutation
    """
    order = tuple(int(j) for j in order)
    if sorted(order) != list(range(ndim)):
        raise InvalidArgumentError(
            f"Processing order {list(order)} is not a permutation of 0..{ndim - 1}",
            details={"order": list(order)},
        )
    return order


def validate_tolerance(eps: float) -> float:
    """
    Validate a relative error tolerance in (0, 1).

    Raises:
        InvalidArgumentError: If eps is outside the open interval
    """
    eps = float(eps)
    if not 0.0 < eps < 1.0:
        raise InvalidArgumentError(f"Tolerance must lie in (0, 1), got {eps}")
    return eps


def parse_int_list(text: str, name: str = "value") -> list[int]:
    """
    Parse a comma-separated list of integers such as ``"30,30,30"``.

    Raises:
        InvalidArgumentError: If any item is not an integer
    """
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise InvalidArgumentError(f"Empty {name} list")
    try:
        return [int(item) for item in items]
    except ValueError as e:
        raise InvalidArgumentError(f"Invalid {name} list '{text}'") from e


def parse_order(text: str, ndim: int | None = None) -> tuple[int, ...] | str:
    """
    Parse ``--order``: ``auto`` or a 1-based permutation such as ``3,1,2``.

    Returns:
        "auto" or a 0-based permutation tuple
    """
    text = text.strip().lower()
    if text == "auto":
        return "auto"
    order = tuple(j - 1 for j in parse_int_list(text, "order"))
    if ndim is not None:
        return validate_order(order, ndim)
    return order


def parse_input_spec(text: str) -> InputSpec:
    """
    Parse an input descriptor.

    Accepted forms: ``path.tns``, ``path.npy``, ``hilbert:d,I`` and
    ``sparse:n,gamma``.

    Raises:
        InvalidArgumentError: If the descriptor is not recognised
    """
    text = text.strip()
    if not text:
        raise InvalidArgumentError("Input descriptor cannot be empty")

    head, sep, tail = text.partition(":")
    if sep and head.lower() in ("hilbert", "sparse"):
        parts = [p.strip() for p in tail.split(",")]
        if len(parts) != 2:
            raise InvalidArgumentError(f"Expected '{head}:a,b', got '{text}'")
        try:
            params = tuple(float(p) for p in parts)
        except ValueError as e:
            raise InvalidArgumentError(f"Invalid parameters in '{text}'") from e
        if head.lower() == "hilbert" and any(p != int(p) or p < 1 for p in params):
            raise InvalidArgumentError(f"Hilbert parameters must be positive integers: '{text}'")
        return InputSpec(kind=head.lower(), params=params)

    path = Path(text)
    suffix = path.suffix.lower()
    if suffix == ".tns":
        return InputSpec(kind="tns", path=path)
    if suffix == ".npy":
        return InputSpec(kind="npy", path=path)
    raise InvalidArgumentError(
        f"Unrecognised input '{text}' (expected *.tns, *.npy, hilbert:d,I or sparse:n,gamma)"
    )
