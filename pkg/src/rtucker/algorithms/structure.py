"""
Structure-preserving Tucker decompositions.

The core is never multiplied by anything: it is a subtensor of x obtained by
keeping ℓ_j = r_j + p selected slices per mode, so sparsity, signs and
integrality of x carry over. Factor j is the oblique basis Q_j (P_jᵀQ_j)⁻¹,
which holds an exact ℓ_j × ℓ_j identity at the selected rows.
"""

import logging
import math

import numpy as np

from ..config import config
from ..linalg import RowSelection, oblique_factor, pivoted_qr_select, srrqr_select
from ..sketch import LinearOperator, SketchStream, range_sketch
from ..tensor import Tensor, TuckerMeta, TuckerTensor, as_tensor, select
from ..utils.errors import InvalidArgumentError
from .config import TuckerConfig

logger = logging.getLogger(__name__)


def sp_sthosvd(x: Tensor | np.ndarray, cfg: TuckerConfig) -> TuckerTensor:
    """
    Structure-preserving STHOSVD.

    Mode j is sketched from the current (already subsampled) core, rows are
    picked from the sketch basis by strong RRQR, and the core keeps only those
    slices. Intermediate cores of a sparse input stay sparse.

    Raises:
        InvalidArgumentError: If ℓ_j ≥ min(I_j, Π_{i≠j} I_i) for some mode
    """
    x = as_tensor(x)
    widths = _check_widths(x.shape, cfg)
    order = cfg.processing_order(x.shape, "randomized")

    factors: list[np.ndarray] = [np.empty((0, 0))] * x.ndim
    selections: list[list[int]] = [[] for _ in range(x.ndim)]
    intermediate_nnz = []
    core: Tensor = x
    for j in order:
        op = LinearOperator.from_tensor(core, j)
        if widths[j] > op.cols:
            raise InvalidArgumentError(
                f"Mode {j} sketch width {widths[j]} exceeds the {op.cols} columns left "
                f"in the core {core.shape}",
                details={"mode": j, "core_shape": list(core.shape)},
            )
        q, sel = _select_rows(op, widths[j], SketchStream(cfg.seed, j), cfg)
        factors[j] = oblique_factor(q, sel)
        selections[j] = sel.indices.tolist()
        core = select(core, j, sel.indices)
        intermediate_nnz.append(core.nnz)
        logger.debug(
            f"sp_sthosvd mode {j}: conditioning {sel.conditioning:.3g}, "
            f"{sel.swaps} swaps, core nnz {core.nnz}"
        )

    logger.info(f"sp_sthosvd: {x.shape} -> core {core.shape} with {core.nnz} nonzeros")
    meta = _meta("sp-sthosvd", cfg, selections, order, intermediate_nnz)
    return TuckerTensor(core, tuple(factors), meta)


def sp_hosvd(x: Tensor | np.ndarray, cfg: TuckerConfig) -> TuckerTensor:
    """
    Structure-preserving HOSVD: independent selections from the original
    unfoldings, core = x at the Cartesian product of the selected indices.
    """
    x = as_tensor(x)
    widths = _check_widths(x.shape, cfg)

    factors = []
    selections = []
    for j in range(x.ndim):
        op = LinearOperator.from_tensor(x, j)
        q, sel = _select_rows(op, widths[j], SketchStream(cfg.seed, j), cfg)
        factors.append(oblique_factor(q, sel))
        selections.append(sel.indices.tolist())
        logger.debug(f"sp_hosvd mode {j}: conditioning {sel.conditioning:.3g}")

    core: Tensor = x
    for j, rows in enumerate(selections):
        core = select(core, j, np.asarray(rows, dtype=np.int64))
    logger.info(f"sp_hosvd: {x.shape} -> core {core.shape} with {core.nnz} nonzeros")
    return TuckerTensor(core, tuple(factors), _meta("sp-hosvd", cfg, selections))


def _check_widths(shape: tuple[int, ...], cfg: TuckerConfig) -> tuple[int, ...]:
    ranks = cfg.require_ranks(shape)
    size = math.prod(shape)
    widths = []
    for j, (r, n) in enumerate(zip(ranks, shape)):
        width = r + cfg.oversampling
        limit = min(n, size // n)
        if width >= limit:
            raise InvalidArgumentError(
                f"Mode {j}: r + p = {width} must be below min(I_j, Π other dims) = {limit}",
                details={"mode": j, "rank": r, "oversampling": cfg.oversampling, "limit": limit},
            )
        widths.append(width)
    return tuple(widths)


def _select_rows(
    op: LinearOperator, width: int, stream: SketchStream, cfg: TuckerConfig
) -> tuple[np.ndarray, RowSelection]:
    q = range_sketch(op, width, stream, cfg.power)
    if cfg.selection == "pivoted-qr":
        return q, pivoted_qr_select(q)
    return q, srrqr_select(q, eta=_eta(cfg))


def _eta(cfg: TuckerConfig) -> float:
    return cfg.eta if cfg.eta is not None else config.numerics.srrqr_eta


def _meta(
    method: str,
    cfg: TuckerConfig,
    selections: list[list[int]],
    order: tuple[int, ...] | None = None,
    intermediate_nnz: list[int] | None = None,
) -> TuckerMeta:
    return TuckerMeta(
        method=method,
        ranks=list(cfg.ranks or []),
        oversampling=cfg.oversampling,
        power=cfg.power,
        seed=cfg.seed,
        order=list(order) if order is not None else None,
        selection=cfg.selection,
        eta=_eta(cfg) if cfg.selection == "srrqr" else None,
        selections=selections,
        intermediate_nnz=intermediate_nnz,
    )
