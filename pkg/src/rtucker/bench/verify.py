"""
Post-hoc checks of a stored Tucker archive against its original tensor.

Every archive gets the shape and relative-error checks. Archives of
orthonormal methods have their factors checked for orthonormality;
structure-preserving archives are checked for the identity rows in every
factor, for a core made only of original entries, and for the factor norm
guarantee of the row selection.
"""

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..algorithms import get_method
from ..config import config
from ..datasets import load_tucker, read_manifest
from ..linalg import orthonormality_defect, spectral_norm
from ..tensor import SparseTensor, Tensor, TuckerTensor, as_tensor, relative_error
from ..utils.errors import VerificationError

logger = logging.getLogger(__name__)

# Stored and recomputed relative errors must agree to this accuracy
REL_ERROR_ATOL = 1e-10

# Slack for power-iteration estimates of ‖A_j‖_2
_NORM_SLACK = 1e-6


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    message: str = ""


@dataclass
class VerificationReport:
    """Outcome of every check run on one archive."""

    directory: Path
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, message: str = "") -> None:
        self.checks.append(CheckResult(name, bool(passed), message))
        if not passed:
            logger.warning(f"Check {name} failed: {message}")

    def raise_for_failures(self) -> None:
        """
        Raises:
            VerificationError: Listing the failed checks, if any
        """
        if self.passed:
            return
        names = [c.name for c in self.failed]
        raise VerificationError(
            f"{len(names)} check(s) failed for {self.directory}: {', '.join(names)}",
            details={"failed": names, "messages": [c.message for c in self.failed]},
        )


def verify_archive(directory: str | Path, x: Tensor | np.ndarray) -> VerificationReport:
    """
    Check the archive in ``directory`` against the original tensor ``x``.

    Raises:
        ArchiveError: If the archive cannot be read
    """
    directory = Path(directory)
    x = as_tensor(x)
    manifest = read_manifest(directory)
    t = load_tucker(directory)
    report = VerificationReport(directory)

    report.add(
        "shape",
        tuple(x.shape) == t.shape,
        f"tensor shape {x.shape}, archive shape {t.shape}",
    )
    if not report.passed:
        return report

    err = relative_error(x, t)
    if manifest.rel_error is not None:
        report.add(
            "rel_error",
            abs(err - manifest.rel_error) <= REL_ERROR_ATOL,
            f"recomputed {err!r}, stored {manifest.rel_error!r}",
        )
    if t.meta.tolerance is not None:
        report.add(
            "tolerance",
            err <= t.meta.tolerance,
            f"relative error {err:.3e} above tolerance {t.meta.tolerance:.3e}",
        )

    method = get_method(t.meta.method)
    if t.is_structure_preserving:
        _check_structure(report, x, t)
    elif method is not None and method.orthonormal:
        tol = config.numerics.orthonormality_tol
        for j, a in enumerate(t.factors, start=1):
            defect = orthonormality_defect(a)
            report.add(f"orthonormal_{j}", defect <= tol, f"max |AᵀA - I| = {defect:.3e}")

    logger.info(
        f"Verified {directory}: {len(report.checks) - len(report.failed)}/{len(report.checks)} "
        "checks passed"
    )
    return report


def _check_structure(report: VerificationReport, x: Tensor, t: TuckerTensor) -> None:
    selections = [np.asarray(rows, dtype=np.int64) for rows in t.meta.selections or []]
    if len(selections) != t.ndim:
        report.add("selections", False, f"{len(selections)} selections for {t.ndim} modes")
        return

    for j, (a, rows) in enumerate(zip(t.factors, selections), start=1):
        exact = a.shape[1] == rows.size and np.array_equal(a[rows], np.eye(rows.size))
        report.add(f"identity_{j}", exact, "selected rows are not an exact identity")

    report.add("core_entries", _core_matches(x, t.core, selections), "core is not a subtensor")

    eta = t.meta.eta if t.meta.selection == "srrqr" else None
    for j, (a, rows) in enumerate(zip(t.factors, selections), start=1):
        norm = spectral_norm(a).value
        ell, n = rows.size, a.shape[0]
        ok = norm >= 1.0 - _NORM_SLACK
        limit = math.inf
        if eta is not None:
            limit = math.sqrt(1.0 + eta**2 * ell * (n - ell))
            ok = ok and norm <= limit * (1.0 + _NORM_SLACK)
        report.add(f"factor_norm_{j}", ok, f"‖A_{j}‖_2 = {norm:.6g}, limit {limit:.6g}")

    if t.meta.intermediate_nnz:
        peak = max(t.meta.intermediate_nnz)
        report.add(
            "intermediate_nnz", peak <= x.nnz, f"intermediate nnz {peak} above input {x.nnz}"
        )


def _core_matches(x: Tensor, core: Tensor, selections: list[np.ndarray]) -> bool:
    """Whether ``core`` equals x at the Cartesian product of the selections, bit for bit."""
    if tuple(core.shape) != tuple(rows.size for rows in selections):
        return False
    if isinstance(x, SparseTensor) and isinstance(core, SparseTensor):
        sub = x
        for j, rows in enumerate(selections):
            sub = sub.select(j, rows)
        return np.array_equal(sub.indices, core.indices) and np.array_equal(
            sub.values, core.values
        )
    return np.array_equal(x.to_dense().data[np.ix_(*selections)], core.to_dense().data)
