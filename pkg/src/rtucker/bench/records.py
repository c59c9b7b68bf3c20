"""One CSV row per decomposition run."""

import csv
import io
import logging
import time
from collections.abc import Iterable
from pathlib import Path

from pydantic import BaseModel, Field

from ..algorithms import (
    MethodDefinition,
    TuckerConfig,
    bound_deterministic,
    bound_expected_error,
    bound_sp,
    delta_tails,
)
from ..tensor import Tensor, TuckerTensor, as_tensor, frobenius_norm, relative_error

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "method",
    "d",
    "shape",
    "ranks",
    "p",
    "q",
    "seed",
    "order",
    "rel_error",
    "bound",
    "seconds",
    "nnz_in",
    "nnz_core",
)


class RunRecord(BaseModel):
    """
    Result of one timed decomposition.

    ``ranks`` are the core dimensions actually produced (ℓ_j for the
    structure-preserving methods); ``order`` is 0-based and written 1-based.
    ``bound`` is the tail-based error bound relative to ‖x‖_F, when one applies.
    """

    method: str
    shape: list[int]
    ranks: list[int]
    p: int = Field(ge=0)
    q: int = Field(default=0, ge=0)
    seed: int | None = None
    order: list[int] | None = None
    rel_error: float = Field(ge=0.0)
    bound: float | None = Field(default=None, ge=0.0)
    seconds: float = Field(gt=0.0)
    nnz_in: int = Field(ge=0)
    nnz_core: int = Field(ge=0)

    @property
    def d(self) -> int:
        return len(self.shape)

    def to_row(self) -> dict[str, str]:
        return {
            "method": self.method,
            "d": str(self.d),
            "shape": "x".join(map(str, self.shape)),
            "ranks": "x".join(map(str, self.ranks)),
            "p": str(self.p),
            "q": str(self.q),
            "seed": "" if self.seed is None else str(self.seed),
            "order": "" if self.order is None else ",".join(str(j + 1) for j in self.order),
            "rel_error": repr(self.rel_error),
            "bound": "" if self.bound is None else repr(self.bound),
            "seconds": f"{self.seconds:.6f}",
            "nnz_in": str(self.nnz_in),
            "nnz_core": str(self.nnz_core),
        }


def format_csv(records: Iterable[RunRecord], header: bool = True) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    if header:
        writer.writeheader()
    for record in records:
        writer.writerow(record.to_row())
    return buffer.getvalue()


def append_csv(records: Iterable[RunRecord], path: str | Path) -> None:
    """Append rows to ``path``, writing the header first if the file is new or empty."""
    path = Path(path)
    new = not path.exists() or path.stat().st_size == 0
    with path.open("a", encoding="utf-8", newline="") as fh:
        fh.write(format_csv(records, header=new))


def read_csv(path: str | Path) -> list[dict[str, str]]:
    with Path(path).open("r", encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))


def error_bound(
    x: Tensor, method: MethodDefinition, cfg: TuckerConfig, t: TuckerTensor
) -> float | None:
    """
    Relative error bound for a fixed-rank run, or None when no bound applies.

    Deterministic methods use sqrt(Σ Δ_j²); randomized and structure-preserving
    methods need p ≥ 2. Adaptive methods carry their tolerance instead.
    """
    if not method.needs_ranks or cfg.ranks is None:
        return None
    x = as_tensor(x)
    ranks = cfg.require_ranks(x.shape)
    norm = frobenius_norm(x)
    if norm == 0.0:
        return None
    if method.family == "deterministic":
        return bound_deterministic(delta_tails(x, ranks)) / norm
    if cfg.oversampling < 2:
        return None
    if method.family == "structure-preserving":
        deltas = delta_tails(x, ranks)
        return bound_sp(x.shape, ranks, cfg.oversampling, deltas, t.meta.order) / norm
    return bound_expected_error(delta_tails(x, ranks), ranks, cfg.oversampling) / norm


def timed_run(
    x: Tensor, method: MethodDefinition, cfg: TuckerConfig, with_bound: bool = True
) -> tuple[TuckerTensor, RunRecord]:
    """Run one decomposition, timing the call alone, and summarize it."""
    x = as_tensor(x)
    start = time.perf_counter()
    t = method(x, cfg)
    seconds = time.perf_counter() - start

    record = RunRecord(
        method=method.name,
        shape=list(x.shape),
        ranks=list(t.core_shape),
        p=cfg.oversampling if method.randomized and method.needs_ranks else 0,
        q=cfg.power if method.randomized else 0,
        seed=cfg.seed if method.randomized else None,
        order=t.meta.order,
        rel_error=relative_error(x, t),
        bound=error_bound(x, method, cfg, t) if with_bound else None,
        seconds=seconds,
        nnz_in=x.nnz,
        nnz_core=t.core.nnz,
    )
    logger.info(
        f"{method.name} {x.shape} -> {t.core_shape}: rel_error {record.rel_error:.3e} "
        f"in {seconds:.3f}s"
    )
    return t, record
