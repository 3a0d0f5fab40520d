import numpy as np
import pytest

from homoglue.linalg import (PrimeField, Matrix, rref, rank, kernel_basis,
                             solve, inverse, hstack, vstack, block_diag,
                             complement_columns, left_kernel_basis)

F5 = PrimeField(5)


def test_constructor():
    m = Matrix(F5, [[1, 7], [-1, 3]])
    assert m.entries == [1, 2, 4, 3]
    assert m.shape == (2, 2)


def test_constructor_empty():
    m = Matrix(F5, [], shape=(0, 3))
    assert m.shape == (0, 3)
    with pytest.raises(ValueError):
        Matrix(F5, [1, 2, 3])


def test_immutable():
    m = Matrix(F5, [[1, 2]])
    with pytest.raises(ValueError):
        m.array[0, 0] = 3


def test_rref_empty():
    reduced, pivots, r = rref(Matrix.zeros(F5, 0, 0))
    assert reduced.shape == (0, 0)
    assert pivots == []
    assert r == 0


def test_rref_identity():
    reduced, pivots, r = rref(Matrix.identity(F5, 3))
    assert reduced == Matrix.identity(F5, 3)
    assert pivots == [0, 1, 2]
    assert r == 3


def test_rref_rank_one():
    reduced, pivots, r = rref(Matrix(F5, [[1, 2], [2, 4]]))
    assert r == 1
    assert pivots == [0]
    assert reduced == Matrix(F5, [[1, 2], [0, 0]])


def test_rref_idempotent():
    rng = np.random.default_rng(0)
    for _ in range(20):
        m = Matrix.random(F5, 4, 6, rng)
        once = rref(m)[0]
        assert rref(once)[0] == once


def test_rank_against_galois():
    rng = np.random.default_rng(1)
    for _ in range(10):
        m = Matrix.random(F5, 5, 4, rng)
        assert rank(m) == np.linalg.matrix_rank(m.to_galois())


def test_kernel_identity():
    assert kernel_basis(Matrix.identity(F5, 4)).shape == (4, 0)


def test_kernel_zero():
    k = kernel_basis(Matrix.zeros(F5, 2, 3))
    assert k.shape == (3, 3)
    assert rank(k) == 3


def test_kernel_rank_one():
    m = Matrix(F5, [[1, 2], [2, 4]])
    k = kernel_basis(m)
    assert k.shape == (2, 1)
    assert (m @ k).is_zero()
    x, y = k.entries
    assert (x + 2 * y) % 5 == 0


def test_rank_nullity():
    rng = np.random.default_rng(2)
    for rows, cols in [(3, 5), (5, 3), (4, 4), (1, 6)]:
        m = Matrix.random(F5, rows, cols, rng)
        k = kernel_basis(m)
        assert rank(m) + k.cols == cols
        assert (m @ k).is_zero()
        assert rank(k) == k.cols


def test_left_kernel():
    m = Matrix(F5, [[1, 2], [2, 4], [0, 1]])
    left = left_kernel_basis(m)
    assert left.rows == 1
    assert (left @ m).is_zero()


def test_solve_identity():
    b = Matrix(F5, [[1, 2], [3, 4]])
    assert solve(Matrix.identity(F5, 2), b) == b


def test_solve_inconsistent():
    assert solve(Matrix.zeros(F5, 2, 2), Matrix(F5, [[1], [0]])) is None


def test_solve_small():
    x = solve(Matrix(F5, [[1], [2]]), Matrix(F5, [[2], [4]]))
    assert x == Matrix(F5, [[2]])


def test_solve_random():
    rng = np.random.default_rng(3)
    for _ in range(20):
        a = Matrix.random(F5, 4, 3, rng)
        x0 = Matrix.random(F5, 3, 2, rng)
        b = a @ x0
        x = solve(a, b)
        assert x is not None
        assert (a @ x - b).is_zero()


def test_solve_mismatch():
    with pytest.raises(ValueError):
        solve(Matrix.identity(F5, 2), Matrix.identity(F5, 3))


def test_inverse():
    m = Matrix(F5, [[1, 2], [3, 4]])
    assert m @ inverse(m) == Matrix.identity(F5, 2)
    with pytest.raises(ValueError):
        inverse(Matrix(F5, [[1, 2], [2, 4]]))


def test_stacking():
    a = Matrix(F5, [[1, 2]])
    b = Matrix(F5, [[3]])
    assert hstack([a, b]) == Matrix(F5, [[1, 2, 3]])
    assert vstack([a, Matrix(F5, [[0, 1]])]).shape == (2, 2)
    d = block_diag([a, b])
    assert d == Matrix(F5, [[1, 2, 0], [0, 0, 3]])
    with pytest.raises(ValueError):
        hstack([a, Matrix.zeros(F5, 2, 1)])


def test_complement_columns():
    m = Matrix(F5, [[1], [1], [0]])
    c = complement_columns(m)
    assert c.shape == (3, 2)
    assert rank(hstack([m, c])) == 3


def test_large_prime():
    F = PrimeField(2147483647)
    m = Matrix(F, [[2147483646, 5], [3, 2147483640]])
    assert rank(m) == 2
    assert m @ inverse(m) == Matrix.identity(F, 2)
