#!/usr/bin/env python3
# tests/test_cli.py
# -*- coding: utf-8 -*-
"""
Tests for the command line interface: exit codes, CSV output and archives.
"""

import pytest

from rtucker import __version__
from rtucker.bench import CSV_COLUMNS, read_csv
from rtucker.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main

HEADER = ",".join(CSV_COLUMNS)


def _rows(text: str) -> list[str]:
    return [line for line in text.splitlines() if line]


def test_compress_writes_archive_and_csv(tmp_path, capsys):
    """compress prints one CSV row and writes a verifiable archive."""
    out = tmp_path / "archive"
    code = main(
        [
            "compress",
            "--input",
            "hilbert:3,10",
            "--method",
            "r-sthosvd",
            "--rank",
            "2,2,2",
            "--seed",
            "7",
            "--out",
            str(out),
        ]
    )
    assert code == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert rows[0] == HEADER
    assert len(rows) == 2
    assert rows[1].startswith("r-sthosvd,3,10x10x10,2x2x2,5,0,7,")
    assert (out / "manifest.json").is_file()
    assert (out / "factor_3.bin").is_file()

    assert main(["verify", str(out), "--input", "hilbert:3,10"]) == EXIT_OK
    report = capsys.readouterr().out
    assert "PASS shape" in report
    assert "PASS orthonormal_1" in report
    assert "FAIL" not in report


def test_compress_appends_csv_file(tmp_path, capsys):
    """--csv appends rows below a single header."""
    csv_path = tmp_path / "runs.csv"
    for method in ("sthosvd", "sp-sthosvd"):
        args = ["compress", "--input", "hilbert:3,10", "--method", method]
        args += ["--rank", "2,2,2", "--oversample", "2"]
        args += ["--out", str(tmp_path / method), "--csv", str(csv_path)]
        assert main(args) == EXIT_OK
    capsys.readouterr()

    records = read_csv(csv_path)
    assert [r["method"] for r in records] == ["sthosvd", "sp-sthosvd"]
    assert records[1]["ranks"] == "4x4x4"
    assert csv_path.read_text().count(HEADER) == 1


def test_compress_adaptive(tmp_path, capsys):
    """Adaptive methods take --tolerance instead of --rank."""
    out = tmp_path / "adaptive"
    args = ["compress", "--input", "hilbert:3,12", "--method", "adaptive-r-sthosvd"]
    code = main([*args, "--tolerance", "1e-4", "--out", str(out)])
    assert code == EXIT_OK
    capsys.readouterr()

    assert main(["verify", str(out), "--input", "hilbert:3,12"]) == EXIT_OK
    assert "PASS tolerance" in capsys.readouterr().out


def test_verify_wrong_tensor_fails(tmp_path, capsys):
    """A mismatching original tensor gives exit status 1."""
    out = tmp_path / "archive"
    args = ["compress", "--input", "hilbert:3,10", "--method", "hosvd", "--rank", "2,2,2"]
    assert main([*args, "--out", str(out)]) == EXIT_OK
    capsys.readouterr()

    assert main(["verify", str(out), "--input", "hilbert:3,11"]) == EXIT_FAILURE
    captured = capsys.readouterr()
    assert "FAIL shape" in captured.out
    assert "rtucker verify" in captured.err


def test_verify_missing_archive(tmp_path, capsys):
    """An unreadable archive is a failure, not a usage error."""
    code = main(["verify", str(tmp_path / "nothing"), "--input", "hilbert:3,10"])
    assert code == EXIT_FAILURE
    assert "manifest.json" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["compress", "--input", "hilbert:3,10", "--method", "sthosvd", "--out", "x"],
        ["compress", "--input", "hilbert:3,10", "--method", "bogus", "--rank", "2,2,2"],
        ["compress", "--input", "hilbert:3,10", "--method", "adaptive-r-hosvd", "--out", "x"],
        ["compress", "--input", "hilbert:3,10", "--method", "sthosvd", "--rank", "2,2"],
        ["compress", "--input", "cube:3", "--method", "sthosvd", "--rank", "2,2,2"],
        ["bench-hilbert", "--input", "sparse:30,2"],
        ["bench-hilbert", "--no-such-flag"],
        [],
    ],
)
def test_usage_errors(argv, tmp_path, monkeypatch, capsys):
    """Bad arguments give exit status 2."""
    monkeypatch.chdir(tmp_path)
    assert main(argv) == EXIT_USAGE
    assert capsys.readouterr().err


def test_version(capsys):
    """--version prints the package version."""
    assert main(["--version"]) == EXIT_OK
    assert __version__ in capsys.readouterr().out


def test_bench_hilbert_rows(capsys):
    """One row per method, rank and trial."""
    code = main(
        [
            "bench-hilbert",
            "--input",
            "hilbert:3,8",
            "--rank",
            "1,2",
            "--trials",
            "1",
            "--methods",
            "hosvd,r-sthosvd",
        ]
    )
    assert code == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert rows[0] == HEADER
    assert [row.split(",")[0] for row in rows[1:]] == ["hosvd", "r-sthosvd"] * 2


def test_bench_sparse_rows(capsys):
    """The default sparse sweep runs the randomized methods over five seeds."""
    code = main(["bench-sparse", "--input", "sparse:30,2", "--rank", "3", "--oversample", "2"])
    assert code == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    methods = [row.split(",")[0] for row in rows[1:]]
    assert methods == ["sthosvd"] + ["r-sthosvd"] * 5 + ["sp-sthosvd"] * 5
    assert [row.split(",")[6] for row in rows[2:7]] == ["0", "1", "2", "3", "4"]
    assert all(",5x5x5," in row for row in rows[1:])

    args = ["bench-sparse", "--input", "sparse:30,2", "--rank", "3", "--oversample", "2"]
    assert main([*args, "--trials", "1"]) == EXIT_OK
    methods = [row.split(",")[0] for row in _rows(capsys.readouterr().out)[1:]]
    assert methods == ["sthosvd", "r-sthosvd", "sp-sthosvd"]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
