"""Dense matrix kernels."""
from .kernels import (
    NormEstimate,
    RowSelection,
    SvdResult,
    g_factor,
    leading_left_singular_vectors,
    oblique_factor,
    orthonormality_defect,
    pivoted_qr_select,
    spectral_norm,
    squared_singular_values,
    srrqr_select,
    thin_qr,
    thin_svd,
    truncated_svd,
)

__all__ = [
    "NormEstimate",
    "RowSelection",
    "SvdResult",
    "g_factor",
    "leading_left_singular_vectors",
    "oblique_factor",
    "orthonormality_defect",
    "pivoted_qr_select",
    "spectral_norm",
    "squared_singular_values",
    "srrqr_select",
    "thin_qr",
    "thin_svd",
    "truncated_svd",
]
