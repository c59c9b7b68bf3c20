"""
Deterministic Tucker decompositions.

HOSVD takes every factor from the leading left singular vectors of the
original unfoldings; STHOSVD truncates mode after mode, so later SVDs act on
an already shrunken core.
"""

import logging

import numpy as np

from ..linalg import leading_left_singular_vectors
from ..tensor import Tensor, TuckerMeta, TuckerTensor, as_tensor, mode_product, project, unfold
from .config import TuckerConfig

logger = logging.getLogger(__name__)


def hosvd(x: Tensor | np.ndarray, cfg: TuckerConfig) -> TuckerTensor:
    """
    Truncated higher-order SVD.

    Raises:
        InvalidArgumentError: If ranks are missing or exceed a mode size
    """
    x = as_tensor(x)
    ranks = cfg.require_ranks(x.shape)
    factors = []
    for j, r in enumerate(ranks):
        factors.append(leading_left_singular_vectors(unfold(x, j), r))
        logger.debug(f"hosvd mode {j}: rank {r}")
    core = project(x, factors)
    logger.info(f"hosvd: {x.shape} -> core {core.shape}")
    return TuckerTensor(core, tuple(factors), TuckerMeta(method="hosvd", ranks=list(ranks)))


def sthosvd(x: Tensor | np.ndarray, cfg: TuckerConfig) -> TuckerTensor:
    """
    Sequentially truncated HOSVD, modes visited in ``cfg.order``.

    "auto" takes modes by increasing size.
    """
    x = as_tensor(x)
    ranks = cfg.require_ranks(x.shape)
    order = cfg.processing_order(x.shape, "deterministic")
    factors: list[np.ndarray] = [np.empty((0, 0))] * x.ndim
    core: Tensor = x
    for j in order:
        factors[j] = leading_left_singular_vectors(unfold(core, j), ranks[j])
        core = mode_product(core, factors[j].T, j)
        logger.debug(f"sthosvd mode {j}: core now {core.shape}")
    logger.info(f"sthosvd: {x.shape} -> core {core.shape}")
    meta = TuckerMeta(method="sthosvd", ranks=list(ranks), order=list(order))
    return TuckerTensor(core, tuple(factors), meta)
