import pytest

from homoglue.fixtures import fixture
from homoglue.linalg import Matrix
from homoglue.quiver import (Morphism, DirectSum, hom_basis, hom_map,
                             injective, is_hom_epic, extend, kernel, lift,
                             projective, projective_morphism, simple,
                             random_module, random_morphism)


def _standard(A):
    return [
        family(A, v) for family in (simple, projective, injective)
        for v in A.vertices
    ]


@pytest.mark.parametrize('name', ['kA2', 'A3rad2', 'kxx2', 'kron2'])
def test_hom_from_projective_and_into_injective(name):
    A = fixture(name).algebra
    for M in _standard(A):
        for v in A.vertices:
            assert len(hom_basis(projective(A, v), M)) == M.dims[v]
            assert len(hom_basis(M, injective(A, v))) == M.dims[v]


def test_hom_small_cases():
    A = fixture('kA2').algebra
    assert len(hom_basis(simple(A, 0), projective(A, 0))) == 0
    assert len(hom_basis(simple(A, 1), projective(A, 0))) == 1
    assert len(hom_basis(projective(A, 1), projective(A, 0))) == 1
    assert len(hom_basis(projective(A, 0), projective(A, 1))) == 0
    K = fixture('kron2').algebra
    assert len(hom_basis(projective(K, 1), projective(K, 0))) == 2


def test_hom_basis_elements_commute():
    A = fixture('A3rad2').algebra
    for phi in hom_basis(injective(A, 1), projective(A, 1)):
        Morphism(phi.source, phi.target, phi.blocks)


def test_hom_different_algebras():
    with pytest.raises(ValueError):
        hom_basis(simple(fixture('kA2').algebra, 0),
                  simple(fixture('kA3').algebra, 0))


def test_non_commuting_blocks():
    A = fixture('kA2').algebra
    P0, S1 = projective(A, 0), simple(A, 1)
    with pytest.raises(ValueError):
        Morphism(P0, S1, [Matrix.zeros(A.field, 0, 1), [[1]]])
    socle = Morphism(S1, P0, [Matrix.zeros(A.field, 1, 0), [[1]]])
    assert socle.is_injective()
    assert not socle.is_surjective()


def test_morphism_arithmetic():
    A = fixture('kA2').algebra
    P0 = projective(A, 0)
    one = Morphism.identity(P0)
    assert one + one == one * 2
    assert (one - one).is_zero()
    assert (-one + one).is_zero()
    assert (one * 2).inverse() == one * 3
    assert one @ one == one
    with pytest.raises(ValueError):
        Morphism.zero(P0, P0).inverse()


def test_lift():
    A = fixture('kA2').algebra
    P0, P1 = projective(A, 0), projective(A, 1)
    total = DirectSum([P0, P1])
    one = Morphism.identity(P0)
    u = lift(one, total.projections[0])
    assert total.projections[0] @ u == one
    cover = projective_morphism(A, 0, simple(A, 0), [[1]])
    assert lift(Morphism.identity(simple(A, 0)), cover) is None
    with pytest.raises(ValueError):
        lift(one, cover)


def test_extend():
    A = fixture('kA2').algebra
    cover = projective_morphism(A, 0, simple(A, 0), [[1]])
    _, inclusion = kernel(cover)
    assert extend(Morphism.identity(inclusion.source), inclusion) is None
    u = extend(cover, Morphism.identity(cover.source))
    assert u == cover


def test_hom_map_and_epic():
    A = fixture('kA2').algebra
    S0, P0 = simple(A, 0), projective(A, 0)
    cover = projective_morphism(A, 0, S0, [[1]])
    assert hom_map(S0, cover).shape == (1, 0)
    assert not is_hom_epic(S0, cover)
    assert is_hom_epic(P0, cover)
    assert is_hom_epic(projective(A, 1), cover)
    assert is_hom_epic(S0, cover, contravariant=True)


def test_random_morphism_commutes():
    A = fixture('A3rad2').algebra
    for seed in range(5):
        M = random_module(A, 4, seed)
        N = random_module(A, 4, seed + 10)
        f = random_morphism(M, N, seed)
        Morphism(f.source, f.target, f.blocks)
