"""Tests for Tucker archives on disk."""
import json

import numpy as np
import pytest

from rtucker.algorithms import TuckerConfig, r_sthosvd, sp_sthosvd
from rtucker.datasets import load_tucker, read_manifest, save_tucker
from rtucker.tensor import SparseTensor
from rtucker.utils.errors import ArchiveError


def test_dense_archive_roundtrip(tmp_path, dense_tensor):
    """Factors and core come back bit for bit with their metadata."""
    t = r_sthosvd(dense_tensor, TuckerConfig(ranks=(2, 3, 3), oversampling=1, seed=4))
    save_tucker(t, tmp_path / "run", rel_error=0.25)
    back = load_tucker(tmp_path / "run")

    np.testing.assert_array_equal(back.core.data, t.core.data)
    for a, b in zip(back.factors, t.factors):
        np.testing.assert_array_equal(a, b)
    assert back.meta == t.meta

    manifest = read_manifest(tmp_path / "run")
    assert manifest.shape == [4, 5, 6]
    assert manifest.core_shape == [2, 3, 3]
    assert manifest.core_format == "dense"
    assert manifest.rel_error == 0.25
    assert (tmp_path / "run" / "core.bin").is_file()
    assert not list((tmp_path / "run").glob("selection_*.txt"))


def test_sparse_archive_layout(tmp_path, sparse_tensor):
    """Structure-preserving archives store a .tns core and 1-based selections."""
    t = sp_sthosvd(sparse_tensor, TuckerConfig(ranks=(2, 2, 2), oversampling=1))
    directory = save_tucker(t, tmp_path / "sp")

    assert (directory / "core.tns").is_file()
    for j, rows in enumerate(t.meta.selections, start=1):
        lines = (directory / f"selection_{j}.txt").read_text().split()
        assert [int(i) for i in lines] == [i + 1 for i in rows]

    back = load_tucker(directory)
    assert isinstance(back.core, SparseTensor)
    assert back.core.shape == (3, 3, 3)
    np.testing.assert_array_equal(back.core.values, t.core.values)
    assert back.meta.selections == t.meta.selections

    manifest = json.loads((directory / "manifest.json").read_text())
    assert manifest["core_format"] == "sparse"
    assert manifest["meta"]["method"] == "sp-sthosvd"


def test_factor_file_header(tmp_path, dense_tensor):
    """Binary files start with the magic and little-endian dims."""
    t = r_sthosvd(dense_tensor, TuckerConfig(ranks=(2, 2, 2)))
    save_tucker(t, tmp_path)
    raw = (tmp_path / "factor_3.bin").read_bytes()

    assert raw[:4] == b"RTKT"
    assert np.frombuffer(raw, dtype="<u8", count=3, offset=4).tolist() == [2, 6, 2]
    values = np.frombuffer(raw, dtype="<f8", offset=28)
    np.testing.assert_array_equal(values, t.factors[2].ravel(order="F"))


def test_missing_component_is_named(tmp_path, dense_tensor):
    """A missing file is reported by name."""
    t = r_sthosvd(dense_tensor, TuckerConfig(ranks=(2, 2, 2)))
    save_tucker(t, tmp_path)
    (tmp_path / "factor_2.bin").unlink()

    with pytest.raises(ArchiveError) as excinfo:
        load_tucker(tmp_path)
    assert "factor_2.bin" in excinfo.value.message
    assert excinfo.value.details["file"].endswith("factor_2.bin")


def test_corrupt_components(tmp_path, dense_tensor):
    """Truncated or foreign files are rejected."""
    t = r_sthosvd(dense_tensor, TuckerConfig(ranks=(2, 2, 2)))
    save_tucker(t, tmp_path)

    core = tmp_path / "core.bin"
    core.write_bytes(core.read_bytes()[:-8])
    with pytest.raises(ArchiveError, match="core.bin"):
        load_tucker(tmp_path)

    core.write_bytes(b"junk")
    with pytest.raises(ArchiveError, match="core.bin"):
        load_tucker(tmp_path)

    (tmp_path / "manifest.json").write_text("{not json")
    with pytest.raises(ArchiveError, match="manifest.json"):
        load_tucker(tmp_path)


def test_selection_mismatch(tmp_path, sparse_tensor):
    """Edited selection files no longer match the manifest."""
    t = sp_sthosvd(sparse_tensor, TuckerConfig(ranks=(2, 2, 2), oversampling=1))
    save_tucker(t, tmp_path)
    path = tmp_path / "selection_1.txt"
    rows = path.read_text().split()
    path.write_text("\n".join(reversed(rows)) + "\n")

    with pytest.raises(ArchiveError, match="selection_1.txt"):
        load_tucker(tmp_path)


def test_missing_manifest(tmp_path):
    """An empty directory is not an archive."""
    with pytest.raises(ArchiveError, match="manifest.json"):
        load_tucker(tmp_path)
