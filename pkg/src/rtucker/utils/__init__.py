"""Utility modules for rtucker."""
from .errors import (
    ArchiveError,
    InvalidArgumentError,
    NumericalError,
    TnsParseError,
    TuckerError,
    VerificationError,
    handle_error,
)
from .logging_config import configure_logging
from .validators import (
    InputSpec,
    parse_input_spec,
    parse_int_list,
    parse_order,
    validate_mode,
    validate_order,
    validate_ranks,
    validate_shape,
    validate_tolerance,
)

__all__ = [
    "TuckerError",
    "InvalidArgumentError",
    "NumericalError",
    "TnsParseError",
    "ArchiveError",
    "VerificationError",
    "handle_error",
    "configure_logging",
    "InputSpec",
    "parse_input_spec",
    "parse_int_list",
    "parse_order",
    "validate_mode",
    "validate_order",
    "validate_ranks",
    "validate_shape",
    "validate_tolerance",
]
