"""Benchmark sweeps, CSV run records and archive verification."""
from .experiments import (
    ADAPTIVE_TOLERANCES,
    HILBERT_METHODS,
    SPARSE_METHODS,
    SPARSE_SEEDS,
    bench_adaptive,
    bench_hilbert,
    bench_sparse,
)
from .records import (
    CSV_COLUMNS,
    RunRecord,
    append_csv,
    error_bound,
    format_csv,
    read_csv,
    timed_run,
)
from .verify import CheckResult, VerificationReport, verify_archive

__all__ = [
    "ADAPTIVE_TOLERANCES",
    "CSV_COLUMNS",
    "CheckResult",
    "HILBERT_METHODS",
    "RunRecord",
    "SPARSE_METHODS",
    "SPARSE_SEEDS",
    "VerificationReport",
    "append_csv",
    "bench_adaptive",
    "bench_hilbert",
    "bench_sparse",
    "error_bound",
    "format_csv",
    "read_csv",
    "timed_run",
    "verify_archive",
]
