"""Tests for utility modules."""
from pathlib import Path

import pytest

from rtucker.utils import (
    InvalidArgumentError,
    TuckerError,
    handle_error,
    parse_input_spec,
    parse_int_list,
    parse_order,
    validate_mode,
    validate_order,
    validate_ranks,
    validate_shape,
    validate_tolerance,
)


def test_validate_mode():
    """Test mode validation."""
    assert validate_mode(0, 3) == 0
    assert validate_mode(2, 3) == 2

    with pytest.raises(InvalidArgumentError):
        validate_mode(3, 3)

    with pytest.raises(InvalidArgumentError):
        validate_mode(-1, 3)


def test_validate_shape():
    """Test shape validation."""
    assert validate_shape([4, 5, 6]) == (4, 5, 6)

    with pytest.raises(InvalidArgumentError):
        validate_shape([])

    with pytest.raises(InvalidArgumentError):
        validate_shape([3, 0])


def test_validate_ranks():
    """Test rank validation."""
    assert validate_ranks([2, 3], (4, 5)) == (2, 3)

    with pytest.raises(InvalidArgumentError):
        validate_ranks([2], (4, 5))  # wrong count

    with pytest.raises(InvalidArgumentError):
        validate_ranks([5, 3], (4, 5))  # exceeds I_1

    with pytest.raises(InvalidArgumentError):
        validate_ranks([0, 3], (4, 5))


def test_validate_order():
    """Test processing order validation."""
    assert validate_order([2, 0, 1], 3) == (2, 0, 1)

    with pytest.raises(InvalidArgumentError):
        validate_order([0, 0, 1], 3)

    with pytest.raises(InvalidArgumentError):
        validate_order([0, 1], 3)


def test_validate_tolerance():
    """Test tolerance validation."""
    assert validate_tolerance(1e-3) == 1e-3

    for bad in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(InvalidArgumentError):
            validate_tolerance(bad)


def test_parse_int_list():
    """Test comma-separated integer parsing."""
    assert parse_int_list("30,30,30") == [30, 30, 30]
    assert parse_int_list(" 1, 2 ,3 ") == [1, 2, 3]

    with pytest.raises(InvalidArgumentError):
        parse_int_list("1,a,3")

    with pytest.raises(InvalidArgumentError):
        parse_int_list(" , ")


def test_parse_order():
    """CLI orders are 1-based; the API is 0-based."""
    assert parse_order("auto") == "auto"
    assert parse_order("AUTO", 3) == "auto"
    assert parse_order("3,1,2") == (2, 0, 1)
    assert parse_order("1,2,3", 3) == (0, 1, 2)

    with pytest.raises(InvalidArgumentError):
        parse_order("1,1,2", 3)


def test_parse_input_spec():
    """Test input descriptors."""
    spec = parse_input_spec("data/nell2.tns")
    assert spec.kind == "tns"
    assert spec.path == Path("data/nell2.tns")

    assert parse_input_spec("x.npy").kind == "npy"

    hilbert = parse_input_spec("hilbert:5,25")
    assert hilbert.kind == "hilbert"
    assert hilbert.params == (5.0, 25.0)

    sparse = parse_input_spec("sparse:200,10")
    assert sparse.kind == "sparse"
    assert sparse.params == (200.0, 10.0)


def test_parse_input_spec_rejects_bad_input():
    """Test invalid descriptors."""
    for bad in ("", "data.csv", "hilbert:5", "hilbert:2.5,4", "sparse:a,b"):
        with pytest.raises(InvalidArgumentError):
            parse_input_spec(bad)


def test_handle_error_formats_tucker_errors():
    """Test error formatting."""
    error = InvalidArgumentError("bad rank", details={"mode": 1})
    result = handle_error(error, "compress")

    assert result["success"] is False
    assert result["error"] == "bad rank"
    assert result["error_type"] == "InvalidArgumentError"
    assert result["details"] == {"mode": 1}


def test_handle_error_formats_other_errors():
    """Test formatting of unexpected exceptions."""
    result = handle_error(RuntimeError("boom"))

    assert result["success"] is False
    assert result["error_type"] == "RuntimeError"
    assert "details" not in result


def test_invalid_argument_is_value_error():
    """InvalidArgumentError can be caught as ValueError."""
    assert issubclass(InvalidArgumentError, ValueError)
    assert issubclass(InvalidArgumentError, TuckerError)
