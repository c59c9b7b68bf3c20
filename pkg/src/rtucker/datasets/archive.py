"""
Tucker archives on disk.

Layout of an archive directory::

    manifest.json        shape, core shape and format, decomposition metadata
    factor_<j>.bin       one per mode, j = 1..d
    core.bin | core.tns  dense or sparse core
    selection_<j>.txt    structure-preserving archives only, 1-based rows

Binary files hold the magic ``RTKT``, the mode count and the dims as
little-endian uint64, then the values as little-endian float64 in
first-mode-fastest order. Values survive a save/load cycle bit for bit.
"""

import logging
import math
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ValidationError

from ..tensor import DenseTensor, SparseTensor, TuckerMeta, TuckerTensor
from ..utils.errors import ArchiveError, TuckerError
from .tns import read_tns, write_tns

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"
_MAGIC = b"RTKT"
_FORMAT_VERSION = 1


class TuckerManifest(BaseModel):
    """Self-describing summary of an archive."""

    format_version: int = _FORMAT_VERSION
    shape: list[int]
    core_shape: list[int]
    core_format: Literal["dense", "sparse"]
    meta: TuckerMeta
    rel_error: float | None = None


def save_tucker(t: TuckerTensor, directory: str | Path, rel_error: float | None = None) -> Path:
    """
    Write t as an archive, creating the directory if needed.

    Args:
        t: Decomposition to store
        directory: Target directory
        rel_error: Measured relative error, kept in the manifest for verification

    Returns:
        The archive directory
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    for j, a in enumerate(t.factors, start=1):
        _write_bin(directory / f"factor_{j}.bin", a)

    sparse = isinstance(t.core, SparseTensor)
    if sparse:
        write_tns(t.core, directory / "core.tns")
    else:
        _write_bin(directory / "core.bin", t.core.data)

    for j, rows in enumerate(t.meta.selections or [], start=1):
        text = "".join(f"{i + 1}\n" for i in rows)
        (directory / f"selection_{j}.txt").write_text(text, encoding="utf-8")

    manifest = TuckerManifest(
        shape=list(t.shape),
        core_shape=list(t.core_shape),
        core_format="sparse" if sparse else "dense",
        meta=t.meta,
        rel_error=rel_error,
    )
    (directory / MANIFEST).write_text(manifest.model_dump_json(indent=2), encoding="utf-8")
    logger.info(f"Saved {t.meta.method} archive to {directory}")
    return directory


def load_tucker(directory: str | Path) -> TuckerTensor:
    """
    Read an archive written by :func:`save_tucker`.

    Raises:
        ArchiveError: If a component is missing, corrupt or inconsistent with
            the manifest; the offending file is named in the message and details
    """
    directory = Path(directory)
    manifest = read_manifest(directory)

    factors = []
    for j in range(1, len(manifest.shape) + 1):
        path = directory / f"factor_{j}.bin"
        a = _read_bin(path)
        if a.shape != (manifest.shape[j - 1], manifest.core_shape[j - 1]):
            raise _archive_error(path, f"factor has shape {a.shape}")
        factors.append(a)

    if manifest.core_format == "sparse":
        path = directory / "core.tns"
        if not path.is_file():
            raise _archive_error(path, "missing")
        try:
            core: DenseTensor | SparseTensor = read_tns(path, shape=manifest.core_shape)
        except TuckerError as e:
            raise _archive_error(path, str(e)) from e
    else:
        path = directory / "core.bin"
        data = _read_bin(path)
        if list(data.shape) != manifest.core_shape:
            raise _archive_error(path, f"core has shape {data.shape}")
        core = DenseTensor(data)

    for j, rows in enumerate(manifest.meta.selections or [], start=1):
        path = directory / f"selection_{j}.txt"
        if _read_selection(path) != rows:
            raise _archive_error(path, "selection disagrees with the manifest")

    return TuckerTensor(core, tuple(factors), manifest.meta)


def read_manifest(directory: str | Path) -> TuckerManifest:
    path = Path(directory) / MANIFEST
    if not path.is_file():
        raise _archive_error(path, "missing")
    try:
        return TuckerManifest.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as e:
        raise _archive_error(path, f"invalid manifest ({e.error_count()} errors)") from e


def _write_bin(path: Path, array: np.ndarray) -> None:
    array = np.asarray(array, dtype=np.float64)
    header = np.array([array.ndim, *array.shape], dtype="<u8")
    with path.open("wb") as fh:
        fh.write(_MAGIC)
        fh.write(header.tobytes())
        fh.write(array.astype("<f8").ravel(order="F").tobytes())


def _read_bin(path: Path) -> np.ndarray:
    if not path.is_file():
        raise _archive_error(path, "missing")
    raw = path.read_bytes()
    if len(raw) < 12 or raw[:4] != _MAGIC:
        raise _archive_error(path, "not a tensor file")
    ndim = int(np.frombuffer(raw, dtype="<u8", count=1, offset=4)[0])
    offset = 12 + 8 * ndim
    if len(raw) < offset:
        raise _archive_error(path, "truncated header")
    dims = tuple(int(n) for n in np.frombuffer(raw, dtype="<u8", count=ndim, offset=12))
    if len(raw) != offset + 8 * math.prod(dims):
        raise _archive_error(path, f"size does not match dims {dims}")
    values = np.frombuffer(raw, dtype="<f8", offset=offset)
    return values.astype(np.float64).reshape(dims, order="F")


def _read_selection(path: Path) -> list[int]:
    if not path.is_file():
        raise _archive_error(path, "missing")
    try:
        return [int(line) - 1 for line in path.read_text(encoding="utf-8").split()]
    except ValueError as e:
        raise _archive_error(path, "malformed selection") from e


def _archive_error(path: Path, reason: str) -> ArchiveError:
    return ArchiveError(f"{path.name}: {reason}", details={"file": str(path)})
