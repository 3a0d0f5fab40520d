import pytest

from homoglue.fixtures import fixture
from homoglue.quiver import random_element, random_module


@pytest.mark.parametrize('name', ['kA2', 'A3rad2', 'kxx2', 'kron2'])
def test_random_module_bounds(name):
    A = fixture(name).algebra
    for seed in range(10):
        M = random_module(A, 4, seed)
        assert M.algebra is A
        assert 0 < M.total_dim <= 4


def test_random_module_reproducible():
    A = fixture('kron2').algebra
    assert random_module(A, 4, 7) == random_module(A, 4, 7)


def test_random_module_max_dim():
    A = fixture('kA3').algebra
    with pytest.raises(ValueError):
        random_module(A, -1)
    for seed in range(5):
        assert random_module(A, 1, seed).total_dim == 1


def test_random_element_shape():
    A = fixture('kron2').algebra
    M = random_module(A, 4, 0)
    assert random_element(M, 1, 0).shape == (M.dims[1], 1)
