"""Shared fixtures: small tensors of known multilinear rank."""

import numpy as np
import pytest

from rtucker.tensor import DenseTensor, SparseTensor


def low_rank_tensor(
    shape: tuple[int, ...], ranks: tuple[int, ...], seed: int = 0
) -> DenseTensor:
    """Random tensor of exact multilinear rank ``ranks``."""
    rng = np.random.default_rng(seed)
    data = rng.standard_normal(ranks)
    for j, (n, r) in enumerate(zip(shape, ranks)):
        a = rng.standard_normal((n, r))
        data = np.moveaxis(np.tensordot(a, data, axes=(1, j)), 0, j)
    return DenseTensor(np.asfortranarray(data))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def dense_tensor(rng):
    return DenseTensor(rng.standard_normal((4, 5, 6)))


@pytest.fixture
def sparse_tensor(rng):
    """A 6 × 7 × 8 sparse tensor with about 15% nonzeros."""
    dense = rng.standard_normal((6, 7, 8))
    dense[rng.random(dense.shape) > 0.15] = 0.0
    return SparseTensor.from_dense(dense)


@pytest.fixture
def low_rank():
    return low_rank_tensor((8, 9, 10), (2, 3, 2))


@pytest.fixture
def superdiagonal():
    """Superdiagonal entries 3, 2, 1; every mode has singular values (3, 2, 1)."""
    data = np.zeros((3, 3, 3))
    for i, v in enumerate((3.0, 2.0, 1.0)):
        data[i, i, i] = v
    return DenseTensor(data)


@pytest.fixture
def make_low_rank():
    """Factory for tensors of exact multilinear rank."""
    return low_rank_tensor
