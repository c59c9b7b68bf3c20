"""Tests for the structure-preserving decompositions."""
import math

import numpy as np
import pytest

from rtucker.algorithms import (
    TuckerConfig,
    bound_sp,
    delta_tails,
    r_sthosvd,
    sp_hosvd,
    sp_sthosvd,
)
from rtucker.datasets import gen_synthetic_sparse
from rtucker.linalg import g_factor, spectral_norm
from rtucker.tensor import DenseTensor, SparseTensor, relative_error
from rtucker.utils.errors import InvalidArgumentError


@pytest.fixture(scope="module")
def synthetic():
    return gen_synthetic_sparse(200, 200.0, seed=0)


def _subtensor(x: SparseTensor, selections) -> SparseTensor:
    for j, rows in enumerate(selections):
        x = x.select(j, np.asarray(rows))
    return x


def test_structure_on_synthetic_tensor(synthetic):
    """Core entries are original entries; factors hold exact identities."""
    cfg = TuckerConfig(ranks=(30, 30, 30), oversampling=5)
    t = sp_sthosvd(synthetic, cfg)

    assert isinstance(t.core, SparseTensor)
    assert t.core_shape == (35, 35, 35)
    assert t.core.nnz <= 35**3

    expected = _subtensor(synthetic, t.meta.selections)
    np.testing.assert_array_equal(t.core.indices, expected.indices)
    np.testing.assert_array_equal(t.core.values, expected.values)

    for a, rows in zip(t.factors, t.meta.selections):
        np.testing.assert_array_equal(a[rows], np.eye(35))
        norm = spectral_norm(a).value
        assert 1.0 - 1e-8 <= norm <= g_factor(200, 35)

    assert all(nnz <= synthetic.nnz for nnz in t.meta.intermediate_nnz)
    assert len(t.meta.intermediate_nnz) == 3


def test_core_values_are_original_entries(make_low_rank):
    """Dense inputs keep their entries bit for bit as well."""
    x = make_low_rank((10, 11, 12), (2, 2, 2), seed=3)
    t = sp_hosvd(x, TuckerConfig(ranks=(2, 2, 2), oversampling=2))

    assert isinstance(t.core, DenseTensor)
    np.testing.assert_array_equal(t.core.data, x.data[np.ix_(*t.meta.selections)])
    assert relative_error(x, t) <= 1e-8


def test_nonnegative_integer_data_stays_so(rng):
    """Signs and integrality of the data carry over to the core."""
    data = rng.integers(0, 4, size=(12, 13, 14)).astype(float)
    data[rng.random(data.shape) > 0.3] = 0.0
    x = SparseTensor.from_dense(data)
    t = sp_sthosvd(x, TuckerConfig(ranks=(3, 3, 3), oversampling=2))

    assert np.all(t.core.values >= 0)
    np.testing.assert_array_equal(t.core.values, np.round(t.core.values))


def test_sp_hosvd_selects_from_original_unfoldings(sparse_tensor):
    """SP-HOSVD's core is x at the Cartesian product of the selections."""
    t = sp_hosvd(sparse_tensor, TuckerConfig(ranks=(2, 2, 2), oversampling=1))

    assert t.core_shape == (3, 3, 3)
    expected = _subtensor(sparse_tensor, t.meta.selections)
    np.testing.assert_array_equal(t.core.to_dense().data, expected.to_dense().data)
    assert t.meta.method == "sp-hosvd"
    assert t.meta.order is None


def test_pivoted_qr_selection(sparse_tensor):
    """The pivoted-QR rule also yields identity rows."""
    cfg = TuckerConfig(ranks=(2, 2, 2), oversampling=1, selection="pivoted-qr")
    t = sp_sthosvd(sparse_tensor, cfg)

    assert t.meta.selection == "pivoted-qr"
    assert t.meta.eta is None
    for a, rows in zip(t.factors, t.meta.selections):
        np.testing.assert_array_equal(a[rows], np.eye(3))


def test_sketch_width_must_fit(sparse_tensor):
    """r + p must stay below every mode size and the other modes' product."""
    with pytest.raises(InvalidArgumentError):
        sp_sthosvd(sparse_tensor, TuckerConfig(ranks=(2, 2, 2), oversampling=4))

    with pytest.raises(InvalidArgumentError):
        sp_hosvd(DenseTensor(np.ones((10, 2, 2))), TuckerConfig(ranks=(3, 1, 1), oversampling=1))


def test_reproducible(sparse_tensor):
    """Same seed, same selections."""
    cfg = TuckerConfig(ranks=(2, 2, 2), oversampling=2, seed=8)
    assert sp_sthosvd(sparse_tensor, cfg).meta.selections == sp_sthosvd(
        sparse_tensor, cfg
    ).meta.selections


def test_sp_error_close_to_randomized(synthetic):
    """At matched output size the selected core stays within 10x of R-STHOSVD."""
    for r in (10, 20, 30):
        sp = sp_sthosvd(synthetic, TuckerConfig(ranks=(r,) * 3, oversampling=5))
        rand = r_sthosvd(synthetic, TuckerConfig(ranks=(r + 5,) * 3, oversampling=5))
        sp_error = relative_error(synthetic, sp)
        assert sp_error <= 10 * relative_error(synthetic, rand)
        assert math.isfinite(sp_error)


def test_mean_error_below_a_priori_bound(rng):
    """The seed-averaged SP-STHOSVD error stays under its expected-error bound."""
    x = DenseTensor(rng.standard_normal((12, 13, 14)))
    ranks, p = (3, 3, 3), 2
    norm = float(np.linalg.norm(x.data))
    errors = []
    for seed in range(20):
        t = sp_sthosvd(x, TuckerConfig(ranks=ranks, oversampling=p, seed=seed))
        errors.append(relative_error(x, t) * norm)

    bound = bound_sp(x.shape, ranks, p, delta_tails(x, ranks), t.meta.order)
    assert np.mean(errors) <= bound
