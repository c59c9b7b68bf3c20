"""
Benchmark sweeps.

Each sweep returns one :class:`RunRecord` per run; the CLI prints or appends
them as CSV. Error bounds are evaluated once per rank and shared by every
trial at that rank.
"""

import logging
from collections.abc import Sequence

from ..algorithms import (
    MethodDefinition,
    TuckerConfig,
    bound_deterministic,
    bound_expected_error,
    bound_sp,
    delta_tails,
    get_method,
)
from ..config import config
from ..datasets import gen_hilbert
from ..tensor import Tensor, as_tensor, frobenius_norm
from ..utils.errors import InvalidArgumentError
from .records import RunRecord, timed_run

logger = logging.getLogger(__name__)

HILBERT_METHODS = ("hosvd", "sthosvd", "r-hosvd", "r-sthosvd")
SPARSE_METHODS = ("sthosvd", "r-sthosvd", "sp-sthosvd")
ADAPTIVE_TOLERANCES = (1e-3, 1e-4, 1e-5, 1e-6, 1e-7)
# Seeds per randomized method in the sparse sweep; rows are summarized by their median
SPARSE_SEEDS = (0, 1, 2, 3, 4)


def _method(name: str) -> MethodDefinition:
    method = get_method(name)
    if method is None:
        raise InvalidArgumentError(f"Unknown method '{name}'")
    return method


def bench_hilbert(
    d: int,
    size: int,
    ranks: Sequence[int],
    p: int = 5,
    trials: int | None = None,
    seed: int = 0,
    power: int = 0,
    methods: Sequence[str] = HILBERT_METHODS,
) -> list[RunRecord]:
    """
    Fixed-rank methods on the d-mode Hilbert tensor of size I, sweeping r.

    Randomized methods use seeds seed, seed+1, ... across trials; deterministic
    methods are repeated for timing only.
    """
    if any(r > size for r in ranks):
        raise InvalidArgumentError(f"Ranks {list(ranks)} exceed the mode size {size}")
    trials = config.runtime_trials if trials is None else trials
    x = gen_hilbert((size,) * d)
    norm = frobenius_norm(x)

    records = []
    for r in ranks:
        rank_vector = (r,) * d
        deltas = delta_tails(x, rank_vector)
        bounds = {
            "deterministic": bound_deterministic(deltas) / norm,
            "randomized": bound_expected_error(deltas, rank_vector, p) / norm if p >= 2 else None,
        }
        for name in methods:
            method = _method(name)
            for trial in range(trials):
                cfg = TuckerConfig(
                    ranks=rank_vector, oversampling=p, seed=seed + trial, power=power
                )
                _, record = timed_run(x, method, cfg, with_bound=False)
                records.append(record.model_copy(update={"bound": bounds.get(method.family)}))
    return records


def bench_adaptive(
    sizes: Sequence[int] = (25, 50, 100),
    tolerances: Sequence[float] = ADAPTIVE_TOLERANCES,
    d: int = 3,
    block_size: int = 1,
    seed: int = 0,
    order: str | tuple[int, ...] | None = None,
    compare: bool = False,
) -> list[RunRecord]:
    """
    Adaptive R-STHOSVD on Hilbert tensors over a tolerance sweep.

    With ``compare`` every adaptive row is followed by an STHOSVD row at the
    rank the adaptive run chose, in the same processing order.
    """
    order = tuple(range(d)) if order is None else order
    adaptive = _method("adaptive-r-sthosvd")
    records = []
    for size in sizes:
        x = gen_hilbert((size,) * d)
        for eps in tolerances:
            cfg = TuckerConfig(tolerance=eps, block_size=block_size, seed=seed, order=order)
            t, record = timed_run(x, adaptive, cfg)
            records.append(record)
            if compare:
                fixed = TuckerConfig(ranks=t.core_shape, order=order)
                records.append(timed_run(x, _method("sthosvd"), fixed)[1])
    return records


def bench_sparse(
    x: Tensor,
    ranks: Sequence[int],
    p: int = 5,
    seeds: Sequence[int] = SPARSE_SEEDS,
    order: str | tuple[int, ...] = "auto",
    power: int = 0,
    methods: Sequence[str] = SPARSE_METHODS,
) -> list[RunRecord]:
    """
    Sequential methods on a sparse tensor at matched output size.

    SP-STHOSVD with target rank r keeps r + p slices per mode; STHOSVD and
    R-STHOSVD get rank r + p so every core has the same shape.
    """
    x = as_tensor(x)
    norm = frobenius_norm(x)
    sp_order = TuckerConfig(order=order).processing_order(x.shape, "randomized")
    records = []
    for r in ranks:
        target = (r,) * x.ndim
        matched = (r + p,) * x.ndim
        if any(n <= r + p for n in x.shape):
            raise InvalidArgumentError(f"r + p = {r + p} must be below every mode size {x.shape}")
        matched_deltas = delta_tails(x, matched)
        bounds: dict[str, float] = {"sthosvd": bound_deterministic(matched_deltas) / norm}
        if p >= 2:
            sp_bound = bound_sp(x.shape, target, p, delta_tails(x, target), sp_order)
            bounds["sp-sthosvd"] = sp_bound / norm
            bounds["r-sthosvd"] = bound_expected_error(matched_deltas, matched, p) / norm

        for name in methods:
            method = _method(name)
            run_seeds = seeds if method.randomized else seeds[:1]
            for seed in run_seeds:
                ranks_for = target if method.family == "structure-preserving" else matched
                cfg = TuckerConfig(
                    ranks=ranks_for, oversampling=p, seed=seed, order=order, power=power
                )
                _, record = timed_run(x, method, cfg, with_bound=False)
                records.append(record.model_copy(update={"bound": bounds.get(name)}))
    return records
