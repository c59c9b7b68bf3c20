"""
Coordinate text format for sparse tensors.

One entry per line: d whitespace-separated 1-based indices followed by a
real value. Text after '#' is a comment; blank lines are ignored. Repeated
coordinates are summed on load.
"""

import io
import logging
import math
import re
import warnings
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from ..tensor import DenseTensor, SparseTensor, Tensor
from ..utils.errors import TnsParseError

logger = logging.getLogger(__name__)

# A token with a decimal point or exponent followed by another token on the same
# line, before any comment: an index written as a float
_FLOAT_INDEX = re.compile(r"^[^#\n]*?(?<![^ \t\n])[^ \t\n#]*[.eE][^ \t\n#]*[ \t]+[^ \t\n#]", re.M)


def read_tns(path: str | Path, shape: Sequence[int] | None = None) -> SparseTensor:
    """
    Load a .tns file.

    Args:
        path: File to read
        shape: Declared shape; inferred as the per-mode maximum index if absent

    Raises:
        TnsParseError: On a malformed line (with its line number), inconsistent
            arity, an empty file without a declared shape, or indices outside
            the declared shape
    """
    path = Path(path)
    if not path.is_file():
        raise TnsParseError(f"No such .tns file: {path}", details={"path": str(path)})

    try:
        text = path.read_text(encoding="utf-8")
        if _FLOAT_INDEX.search(text):
            raise TnsParseError("Indices must be integers")
        with warnings.catch_warnings():
            # An all-comment file is valid; loadtxt warns about it
            warnings.simplefilter("ignore", UserWarning)
            table = np.loadtxt(io.StringIO(text), comments="#", ndmin=2, dtype=np.float64)
        indices, values = _split_table(table)
    except (ValueError, TnsParseError):
        # Reparse line by line to report where the problem is
        indices, values = _parse_lines(path)

    if indices.shape[0] == 0:
        if shape is None:
            raise TnsParseError(f"{path} holds no entries", details={"path": str(path)})
        return SparseTensor(tuple(shape), np.zeros((0, len(shape)), dtype=np.int64), [])

    inferred = tuple(int(m) + 1 for m in indices.max(axis=0))
    if shape is None:
        shape = inferred
    elif len(shape) != indices.shape[1] or any(i > n for i, n in zip(inferred, shape)):
        raise TnsParseError(
            f"Entries of {path} do not fit the declared shape {tuple(shape)}",
            details={"path": str(path), "inferred": list(inferred)},
        )
    x = SparseTensor(tuple(shape), indices, values)
    logger.debug(f"Read {path}: shape {x.shape}, {x.nnz} nonzeros")
    return x


def write_tns(x: Tensor, path: str | Path) -> None:
    """Write the nonzeros of x, 1-based and in canonical order, values to 17 digits."""
    path = Path(path)
    if isinstance(x, DenseTensor):
        x = SparseTensor.from_dense(x)
    table = np.column_stack([x.indices + 1, x.values]) if x.nnz else np.zeros((0, x.ndim + 1))
    fmt = ["%d"] * x.ndim + ["%.17g"]
    np.savetxt(path, table, fmt=fmt, delimiter=" ")
    logger.debug(f"Wrote {x.nnz} entries to {path}")


def _split_table(table: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if table.size == 0:
        return np.zeros((0, 0), dtype=np.int64), np.zeros(0)
    if table.shape[1] < 2:
        raise TnsParseError("Every line needs at least one index and a value")
    coords = table[:, :-1]
    if (coords < 1).any() or (coords != np.floor(coords)).any() or not np.isfinite(table).all():
        raise TnsParseError("Invalid index or value")
    return coords.astype(np.int64) - 1, table[:, -1].copy()


def _parse_lines(path: Path) -> tuple[np.ndarray, np.ndarray]:
    coords: list[list[int]] = []
    values: list[float] = []
    arity: int | None = None
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            fields = line.split("#", 1)[0].split()
            if not fields:
                continue
            if arity is None:
                arity = len(fields)
                if arity < 2:
                    raise _line_error(path, lineno, "expected indices followed by a value")
            elif len(fields) != arity:
                raise _line_error(path, lineno, f"expected {arity} fields, got {len(fields)}")
            try:
                index = [int(f) for f in fields[:-1]]
                value = float(fields[-1])
            except ValueError as e:
                raise _line_error(path, lineno, f"cannot parse '{line.strip()}'") from e
            if min(index) < 1:
                raise _line_error(path, lineno, "indices are 1-based")
            if not math.isfinite(value):
                raise _line_error(path, lineno, "value is not finite")
            coords.append([i - 1 for i in index])
            values.append(value)

    if arity is None:
        return np.zeros((0, 0), dtype=np.int64), np.zeros(0)
    return np.asarray(coords, dtype=np.int64), np.asarray(values, dtype=np.float64)


def _line_error(path: Path, lineno: int, reason: str) -> TnsParseError:
    return TnsParseError(
        f"{path}, line {lineno}: {reason}", details={"path": str(path), "line": lineno}
    )
