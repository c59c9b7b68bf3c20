"""Tests for the tolerance-driven decompositions."""
import numpy as np
import pytest

from rtucker.algorithms import TuckerConfig, adaptive_r_hosvd, adaptive_r_sthosvd
from rtucker.datasets import gen_hilbert
from rtucker.linalg import orthonormality_defect
from rtucker.tensor import relative_error
from rtucker.utils.errors import InvalidArgumentError

# Core sizes of adaptive R-STHOSVD on d=3 Hilbert tensors with b=1, order 1,2,3
# size -> dimension per mode for eps = 1e-3, 1e-4, 1e-5, 1e-6, 1e-7
RANK_TABLE = {
    25: (4, 5, 6, 7, 8),
    50: (5, 6, 7, 8, 9),
    100: (5, 6, 8, 9, 10),
}
TOLERANCES = (1e-3, 1e-4, 1e-5, 1e-6, 1e-7)


def test_rank_table_on_hilbert_tensors():
    """Chosen core sizes track the reference table and every run meets eps."""
    matches = 0
    for size, expected in RANK_TABLE.items():
        x = gen_hilbert((size, size, size))
        for eps, r in zip(TOLERANCES, expected):
            cfg = TuckerConfig(tolerance=eps, block_size=1, order=(0, 1, 2))
            t = adaptive_r_sthosvd(x, cfg)
            assert relative_error(x, t) <= eps
            if all(abs(n - r) <= 1 for n in t.core_shape):
                matches += 1
    assert matches >= 13


@pytest.mark.parametrize("method", [adaptive_r_hosvd, adaptive_r_sthosvd])
@pytest.mark.parametrize("eps,block", [(1e-2, 1), (1e-5, 1), (1e-4, 3)])
def test_tolerance_is_met(method, eps, block):
    """‖x - x̂‖ ≤ eps ‖x‖ with orthonormal factors."""
    x = gen_hilbert((20, 15, 10))
    t = method(x, TuckerConfig(tolerance=eps, block_size=block, seed=7))

    assert relative_error(x, t) <= eps
    for a in t.factors:
        assert orthonormality_defect(a) <= 1e-10


def test_tolerance_on_sparse_input(sparse_tensor):
    """Sparse tensors meet the tolerance as well."""
    for method in (adaptive_r_hosvd, adaptive_r_sthosvd):
        t = method(sparse_tensor, TuckerConfig(tolerance=0.3, block_size=2))
        assert relative_error(sparse_tensor, t) <= 0.3


def test_tighter_tolerance_grows_core():
    """Core sizes are monotone in the tolerance."""
    x = gen_hilbert((30, 30, 30))
    loose = adaptive_r_sthosvd(x, TuckerConfig(tolerance=1e-2))
    tight = adaptive_r_sthosvd(x, TuckerConfig(tolerance=1e-6))

    assert all(a <= b for a, b in zip(loose.core_shape, tight.core_shape))
    assert sum(tight.core_shape) > sum(loose.core_shape)


def test_zero_mode_tolerance_keeps_mode():
    """A mode with eps_j = 0 gets an identity factor."""
    x = gen_hilbert((6, 12, 14))
    cfg = TuckerConfig(tolerance=1e-3, mode_tolerances=(0.0, 6e-4, 8e-4))
    for method in (adaptive_r_hosvd, adaptive_r_sthosvd):
        t = method(x, cfg)
        np.testing.assert_array_equal(t.factors[0], np.eye(6))
        assert t.core_shape[0] == 6
        assert relative_error(x, t) <= 1e-3


def test_block_size_granularity():
    """Added columns come in whole blocks unless a dimension caps them."""
    x = gen_hilbert((40, 40, 40))
    t = adaptive_r_hosvd(x, TuckerConfig(tolerance=1e-4, block_size=4))

    assert all(n % 4 == 0 for n in t.core_shape)


def test_metadata(dense_tensor):
    """Adaptive runs record their tolerance split and chosen sizes."""
    t = adaptive_r_sthosvd(dense_tensor, TuckerConfig(tolerance=0.5, block_size=2, seed=4))

    assert t.meta.method == "adaptive-r-sthosvd"
    assert t.meta.tolerance == 0.5
    assert t.meta.mode_tolerances == pytest.approx([0.5 / np.sqrt(3)] * 3)
    assert t.meta.ranks == list(t.core_shape)
    assert t.meta.block_size == 2
    assert t.meta.order == [2, 1, 0]


def test_reproducible(dense_tensor):
    """Reruns are bit-identical."""
    cfg = TuckerConfig(tolerance=0.2, seed=5)
    a = adaptive_r_hosvd(dense_tensor, cfg)
    b = adaptive_r_hosvd(dense_tensor, cfg)

    np.testing.assert_array_equal(a.core.data, b.core.data)


def test_missing_tolerance(dense_tensor):
    """Adaptive methods need a tolerance."""
    with pytest.raises(InvalidArgumentError):
        adaptive_r_sthosvd(dense_tensor, TuckerConfig(ranks=(2, 2, 2)))
