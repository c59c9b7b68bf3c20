"""Tensor containers and multilinear operations."""
from .containers import DenseTensor, SparseTensor, Tensor, TuckerMeta, TuckerTensor, as_tensor
from .ops import (
    fold,
    frobenius_norm,
    mode_product,
    multi_mode_product,
    project,
    reconstruct,
    relative_error,
    select,
    tucker_norm,
    unfold,
)

__all__ = [
    "DenseTensor",
    "SparseTensor",
    "Tensor",
    "TuckerMeta",
    "TuckerTensor",
    "as_tensor",
    "fold",
    "frobenius_norm",
    "mode_product",
    "multi_mode_product",
    "project",
    "reconstruct",
    "relative_error",
    "select",
    "tucker_norm",
    "unfold",
]
