"""Tucker decomposition algorithms, error bounds and the method registry."""
from .adaptive import adaptive_r_hosvd, adaptive_r_sthosvd
from .bounds import (
    bound_deterministic,
    bound_expected_error,
    bound_sp,
    cost_estimate,
    delta_tail,
    delta_tails,
    f_factor,
)
from .config import TuckerConfig, sketch_width
from .deterministic import hosvd, sthosvd
from .ordering import auto_order
from .randomized import r_hosvd, r_sthosvd
from .registry import MethodDefinition, MethodRegistry, get_method, get_registry, list_methods
from .structure import sp_hosvd, sp_sthosvd

__all__ = [
    "MethodDefinition",
    "MethodRegistry",
    "TuckerConfig",
    "adaptive_r_hosvd",
    "adaptive_r_sthosvd",
    "auto_order",
    "bound_deterministic",
    "bound_expected_error",
    "bound_sp",
    "cost_estimate",
    "delta_tail",
    "delta_tails",
    "f_factor",
    "get_method",
    "get_registry",
    "hosvd",
    "list_methods",
    "r_hosvd",
    "r_sthosvd",
    "sketch_width",
    "sp_hosvd",
    "sp_sthosvd",
    "sthosvd",
]
