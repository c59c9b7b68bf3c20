"""
Singular-value tails and a-priori error bounds.

Every bound is expressed through the computable tails
Δ_j = sqrt(Σ_{i>r_j} σ_i²(X_(j))) rather than the unknown optimal error.
"""

import math
from collections.abc import Sequence

import numpy as np

from ..linalg import g_factor, squared_singular_values
from ..tensor import Tensor, as_tensor, unfold
from ..utils.errors import InvalidArgumentError
from ..utils.validators import validate_mode, validate_order, validate_shape

# method -> (factor family, sequential)
_COST_FAMILIES = {
    "hosvd": ("svd", False),
    "sthosvd": ("svd", True),
    "r-hosvd": ("sketch", False),
    "r-sthosvd": ("sketch", True),
    "sp-hosvd": ("select", False),
    "sp-sthosvd": ("select", True),
}


def delta_tail(x: Tensor | np.ndarray, mode: int, r: int) -> float:
    """
    Δ_mode(x) for truncation rank r.

    Raises:
        InvalidArgumentError: If r is outside [1, I_mode]
    """
    x = as_tensor(x)
    mode = validate_mode(mode, x.ndim)
    if not 1 <= r <= x.shape[mode]:
        raise InvalidArgumentError(f"Rank {r} outside [1, {x.shape[mode]}] for mode {mode}")
    tail = squared_singular_values(unfold(x, mode))[r:]
    return math.sqrt(max(0.0, float(tail.sum())))


def delta_tails(x: Tensor | np.ndarray, ranks: Sequence[int]) -> list[float]:
    """Δ_j for every mode."""
    x = as_tensor(x)
    if len(ranks) != x.ndim:
        raise InvalidArgumentError(f"Expected {x.ndim} ranks, got {len(ranks)}")
    return [delta_tail(x, j, r) for j, r in enumerate(ranks)]


def f_factor(p: int, r: int) -> float:
    """Expectation factor sqrt(1 + r/(p - 1))."""
    if p <= 1:
        raise InvalidArgumentError(f"Oversampling must be at least 2, got {p}")
    return math.sqrt(1.0 + r / (p - 1))


def bound_deterministic(deltas: Sequence[float]) -> float:
    """sqrt(Σ Δ_j²), the HOSVD and STHOSVD error bound."""
    return math.sqrt(sum(d * d for d in deltas))


def bound_expected_error(deltas: Sequence[float], ranks: Sequence[int], p: int) -> float:
    """
    Expected-error bound of R-HOSVD and R-STHOSVD (independent of processing order).

    sqrt(Σ_j (1 + r_j/(p - 1)) Δ_j²)

    Raises:
        InvalidArgumentError: If p ≤ 1 or the lengths differ
    """
    if len(deltas) != len(ranks):
        raise InvalidArgumentError(f"{len(deltas)} tails for {len(ranks)} ranks")
    return math.sqrt(sum(f_factor(p, r) ** 2 * d * d for d, r in zip(deltas, ranks)))


def bound_sp(
    shape: Sequence[int],
    ranks: Sequence[int],
    p: int,
    deltas: Sequence[float],
    order: Sequence[int] | None = None,
) -> float:
    """
    Expected-error bound of SP-STHOSVD,

        Σ_t (Π_{s≤t} g(I_{ρ_s}, ℓ_{ρ_s})) f_p(r_{ρ_t}) Δ_{ρ_t}

    with ℓ_j = r_j + p, summed along the processing order ρ (identity by default).

    Raises:
        InvalidArgumentError: If p ≤ 1, ℓ_j ≥ I_j or the lengths differ
    """
    shape = validate_shape(shape)
    if not len(ranks) == len(deltas) == len(shape):
        raise InvalidArgumentError("shape, ranks and deltas must have one entry per mode")
    order = validate_order(range(len(shape)) if order is None else order, len(shape))
    total = 0.0
    growth = 1.0
    for j in order:
        width = ranks[j] + p
        if width >= shape[j]:
            raise InvalidArgumentError(f"Mode {j}: r + p = {width} must be below I = {shape[j]}")
        growth *= g_factor(shape[j], width)
        total += growth * f_factor(p, ranks[j]) * deltas[j]
    return total


def cost_estimate(method: str, shape: Sequence[int], ranks: Sequence[int], p: int = 0) -> float:
    """
    Leading flop count of a fixed-rank method.

    An SVD-based factor costs I_j per entry of the matrix it acts on, a sketch
    followed by projection 2ℓ_j and a selection sketch ℓ_j, with ℓ_j = r_j + p.
    Sequential methods act on a core that shrinks after every mode and take
    the modes largest first.
    """
    shape = validate_shape(shape)
    if method not in _COST_FAMILIES:
        raise InvalidArgumentError(f"No cost model for method '{method}'")
    family, sequential = _COST_FAMILIES[method]
    size = float(math.prod(shape))
    total = 0.0
    for j in sorted(range(len(shape)), key=lambda j: (-shape[j], j)):
        width = min(ranks[j] + p, shape[j])
        if family == "svd":
            total += shape[j] * size
            kept = ranks[j]
        elif family == "sketch":
            total += 2 * width * size
            kept = min(ranks[j], width)
        else:
            total += width * size
            kept = width
        if sequential:
            size *= kept / shape[j]
    return total
