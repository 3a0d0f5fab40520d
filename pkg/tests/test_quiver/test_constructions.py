import pytest

from homoglue.fixtures import FIXTURES, fixture
from homoglue.quiver import (DirectSum, Morphism, Pullback, Pushout,
                             cokernel, column_morphism, corestriction,
                             direct_sum, image, kernel, projective,
                             projective_morphism, row_morphism, simple,
                             pullback_preserves_hom_epi,
                             pushout_preserves_hom_epi, random_module,
                             random_morphism)
from homoglue.utils import default_rng


def _cover(A, v):
    return projective_morphism(A, v, simple(A, v), [[1]])


def test_kernel_image_cokernel():
    A = fixture('kA2').algebra
    cover = _cover(A, 0)
    K, inclusion = kernel(cover)
    assert K.dims == (0, 1)
    assert inclusion.is_injective()
    assert (cover @ inclusion).is_zero()
    I, _ = image(cover)
    assert I.dims == (1, 0)
    C, projection = cokernel(inclusion)
    assert C.dims == (1, 0)
    assert projection.is_surjective()
    assert cokernel(cover)[0].is_zero()


def test_corestriction():
    A = fixture('kA2').algebra
    _, inclusion = kernel(_cover(A, 0))
    P0 = projective(A, 0)
    with pytest.raises(ValueError):
        corestriction(Morphism.identity(P0), inclusion)
    assert corestriction(inclusion, inclusion) == Morphism.identity(
        inclusion.source)


def test_direct_sum():
    A = fixture('A3rad2').algebra
    summands = [projective(A, 0), simple(A, 2), projective(A, 1)]
    total = DirectSum(summands)
    assert total.module.dims == (1, 2, 2)
    for i, s in enumerate(summands):
        assert total.projections[i] @ total.injections[i] == (
            Morphism.identity(s))
    assert (total.projections[0] @ total.injections[1]).is_zero()
    assert direct_sum([], A).is_zero()
    with pytest.raises(ValueError):
        DirectSum([])


def test_pullback():
    A = fixture('kA2').algebra
    f = _cover(A, 0)
    square = Pullback(f, f)
    assert square.module.dims == (1, 2)
    assert f @ square.p1 == f @ square.p2
    one = Morphism.identity(f.source)
    u = square.factor(one, one)
    assert square.p1 @ u == one
    assert square.p2 @ u == one
    with pytest.raises(ValueError):
        square.factor(one, Morphism.zero(f.source, f.source))


def test_pushout():
    A = fixture('kA2').algebra
    _, i = kernel(_cover(A, 0))
    square = Pushout(i, i)
    assert square.module.dims == (2, 1)
    assert square.i1 @ i == square.i2 @ i
    one = Morphism.identity(i.target)
    u = square.factor(one, one)
    assert u @ square.i1 == one
    with pytest.raises(ValueError):
        Pushout(i, Morphism.identity(i.target))


@pytest.mark.parametrize('name', ['A3rad2', 'kron2'])
def test_squares_preserve_hom_epi(name):
    A = fixture(name).algebra
    rng = default_rng(3)
    for _ in range(6):
        Z = random_module(A, 3, rng)
        f = random_morphism(random_module(A, 3, rng), Z, rng)
        g = random_morphism(random_module(A, 3, rng), Z, rng)
        C = random_module(A, 3, rng)
        hypothesis, conclusion = pullback_preserves_hom_epi(f, g, C)
        assert conclusion or not hypothesis
        X = random_module(A, 3, rng)
        f = random_morphism(X, random_module(A, 3, rng), rng)
        g = random_morphism(X, random_module(A, 3, rng), rng)
        hypothesis, conclusion = pushout_preserves_hom_epi(f, g, C)
        assert conclusion or not hypothesis


@pytest.mark.parametrize('name', FIXTURES)
def test_squares_with_split_hypothesis(name):
    A = fixture(name).algebra
    rng = default_rng(8)
    for _ in range(5):
        C = random_module(A, 3, rng)
        Z = random_module(A, 3, rng)
        g = row_morphism([
            Morphism.identity(Z),
            random_morphism(random_module(A, 2, rng), Z, rng)
        ])
        f = random_morphism(random_module(A, 3, rng), Z, rng)
        assert pullback_preserves_hom_epi(f, g, C) == (True, True)
        X = random_module(A, 3, rng)
        g = column_morphism([
            Morphism.identity(X),
            random_morphism(X, random_module(A, 2, rng), rng)
        ])
        f = random_morphism(X, random_module(A, 3, rng), rng)
        assert pushout_preserves_hom_epi(f, g, C) == (True, True)
