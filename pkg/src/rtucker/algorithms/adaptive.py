"""
Tolerance-driven randomized Tucker decompositions.

Mode j receives the tolerance ε_j (ε/√d unless split explicitly), and the
squared per-mode residuals add up to at most ε²‖x‖², so the result satisfies
‖x - x̂‖_F ≤ ε‖x‖_F. A mode with ε_j = 0 is left uncompressed.
"""

import logging

import numpy as np

from ..sketch import LinearOperator, SketchStream, adapt_range_finder
from ..tensor import (
    Tensor,
    TuckerMeta,
    TuckerTensor,
    as_tensor,
    frobenius_norm,
    mode_product,
    project,
)
from .config import TuckerConfig

logger = logging.getLogger(__name__)


def adaptive_r_hosvd(x: Tensor | np.ndarray, cfg: TuckerConfig) -> TuckerTensor:
    """
    Adaptive randomized HOSVD.

    Every factor is an adaptive range-finder basis of the original unfolding
    with relative tolerance ε_j.

    Raises:
        InvalidArgumentError: If ``cfg.tolerance`` is missing
    """
    x = as_tensor(x)
    tolerances = cfg.mode_tolerance_vector(x.ndim)
    factors = []
    for j, eps in enumerate(tolerances):
        if eps == 0.0:
            factors.append(np.eye(x.shape[j]))
            continue
        op = LinearOperator.from_tensor(x, j)
        factors.append(
            adapt_range_finder(op, eps, cfg.block_size, SketchStream(cfg.seed, j), power=cfg.power)
        )
        logger.debug(f"adaptive_r_hosvd mode {j}: {factors[-1].shape[1]} columns")
    core = project(x, factors)
    logger.info(f"adaptive_r_hosvd(eps={cfg.tolerance}): {x.shape} -> core {core.shape}")
    meta = _meta("adaptive-r-hosvd", cfg, core.shape, tolerances)
    return TuckerTensor(core, tuple(factors), meta)


def adaptive_r_sthosvd(x: Tensor | np.ndarray, cfg: TuckerConfig) -> TuckerTensor:
    """
    Adaptive randomized STHOSVD.

    Step j stops once ‖core_j - Q Qᵀ core_j‖_F ≤ ε_j ‖x‖_F, measured against
    the norm of the original tensor.
    """
    x = as_tensor(x)
    tolerances = cfg.mode_tolerance_vector(x.ndim)
    order = cfg.processing_order(x.shape, "randomized")
    norm = frobenius_norm(x)
    factors: list[np.ndarray] = [np.empty((0, 0))] * x.ndim
    core: Tensor = x
    for j in order:
        if tolerances[j] == 0.0:
            factors[j] = np.eye(x.shape[j])
            continue
        op = LinearOperator.from_tensor(core, j)
        factors[j] = adapt_range_finder(
            op,
            tolerances[j],
            cfg.block_size,
            SketchStream(cfg.seed, j),
            reference_norm=norm,
            power=cfg.power,
        )
        core = mode_product(core, factors[j].T, j)
        logger.debug(f"adaptive_r_sthosvd mode {j}: core now {core.shape}")
    logger.info(f"adaptive_r_sthosvd(eps={cfg.tolerance}): {x.shape} -> core {core.shape}")
    meta = _meta("adaptive-r-sthosvd", cfg, core.shape, tolerances, order)
    return TuckerTensor(core.to_dense(), tuple(factors), meta)


def _meta(
    method: str,
    cfg: TuckerConfig,
    core_shape: tuple[int, ...],
    tolerances: tuple[float, ...],
    order: tuple[int, ...] | None = None,
) -> TuckerMeta:
    return TuckerMeta(
        method=method,
        ranks=list(core_shape),
        power=cfg.power,
        seed=cfg.seed,
        order=list(order) if order is not None else None,
        tolerance=cfg.tolerance,
        mode_tolerances=list(tolerances),
        block_size=cfg.block_size,
    )
