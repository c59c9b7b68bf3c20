"""Processing-order selection for sequential algorithms."""

from collections.abc import Sequence

from ..utils.errors import InvalidArgumentError
from ..utils.validators import validate_shape

ORDER_KINDS = ("randomized", "deterministic")


def auto_order(shape: Sequence[int], mode: str = "randomized") -> tuple[int, ...]:
    """
    Default processing order for a shape.

    Randomized sequential algorithms handle the largest modes first, since the
    sketch shrinks the core most there; deterministic STHOSVD takes the modes
    by increasing size. Ties keep ascending mode index.

    Args:
        shape: Tensor shape
        mode: "randomized" or "deterministic"

    Returns:
        0-based permutation of the modes
    """
    dims = validate_shape(shape)
    if mode == "randomized":
        return tuple(sorted(range(len(dims)), key=lambda j: (-dims[j], j)))
    if mode == "deterministic":
        return tuple(sorted(range(len(dims)), key=lambda j: (dims[j], j)))
    raise InvalidArgumentError(f"Unknown order kind '{mode}', expected one of {ORDER_KINDS}")
