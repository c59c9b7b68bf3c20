"""
Randomized HOSVD and STHOSVD.

Each mode draws its Gaussian sketch from stream ``(seed, mode)``, so results
depend only on the configuration and never on how modes are scheduled.
Sketch widths are clamped to min(r_j + p, I_j, Π_{i≠j} I_i), using the current
core dimensions for the sequential variant.
"""

import logging

import numpy as np

from ..sketch import LinearOperator, SketchStream, randsvd
from ..tensor import Tensor, TuckerMeta, TuckerTensor, as_tensor, fold, project
from .config import TuckerConfig, sketch_width

logger = logging.getLogger(__name__)


def r_hosvd(x: Tensor | np.ndarray, cfg: TuckerConfig) -> TuckerTensor:
    """
    Randomized HOSVD: one randomized SVD per original unfolding.

    Raises:
        InvalidArgumentError: If ranks are missing or exceed a mode size
    """
    x = as_tensor(x)
    ranks = cfg.require_ranks(x.shape)
    factors = []
    for j, r in enumerate(ranks):
        op = LinearOperator.from_tensor(x, j)
        width, rank = sketch_width(r, cfg.oversampling, op.rows, op.cols)
        result = randsvd(op, rank, width - rank, SketchStream(cfg.seed, j), cfg.power)
        factors.append(result.u)
        logger.debug(f"r_hosvd mode {j}: sketch width {width}, rank {rank}")
    core = project(x, factors)
    logger.info(f"r_hosvd: {x.shape} -> core {core.shape}")
    return TuckerTensor(core, tuple(factors), _meta("r-hosvd", cfg, ranks))


def r_sthosvd(x: Tensor | np.ndarray, cfg: TuckerConfig) -> TuckerTensor:
    """
    Randomized STHOSVD; "auto" order handles the largest modes first.

    After mode j the core becomes ``S_r V_rᵀ`` folded back, which equals
    ``core ×_j U_rᵀ`` without a second pass over the data.
    """
    x = as_tensor(x)
    ranks = cfg.require_ranks(x.shape)
    order = cfg.processing_order(x.shape, "randomized")
    factors: list[np.ndarray] = [np.empty((0, 0))] * x.ndim
    core: Tensor = x
    for j in order:
        op = LinearOperator.from_tensor(core, j)
        width, rank = sketch_width(ranks[j], cfg.oversampling, op.rows, op.cols)
        result = randsvd(op, rank, width - rank, SketchStream(cfg.seed, j), cfg.power)
        factors[j] = result.u
        shape = list(core.shape)
        shape[j] = rank
        core = fold(result.s[:, None] * result.v.T, j, shape)
        logger.debug(f"r_sthosvd mode {j}: sketch width {width}, core now {core.shape}")
    logger.info(f"r_sthosvd: {x.shape} -> core {core.shape}")
    return TuckerTensor(core, tuple(factors), _meta("r-sthosvd", cfg, ranks, order))


def _meta(
    method: str, cfg: TuckerConfig, ranks: tuple[int, ...], order: tuple[int, ...] | None = None
) -> TuckerMeta:
    return TuckerMeta(
        method=method,
        ranks=list(ranks),
        oversampling=cfg.oversampling,
        power=cfg.power,
        seed=cfg.seed,
        order=list(order) if order is not None else None,
    )
