import pytest

from homoglue.fixtures import fixture
from homoglue.linalg import Matrix
from homoglue.quiver import (ModuleKey, Representation, injective,
                             matlis_dual, projective, regular, simple,
                             zero_module, evaluation)


def test_constructor():
    A = fixture('kA2').algebra
    M = Representation(A, [1, 1], {'a': [[1]]}, name='M')
    assert M.dims == (1, 1)
    assert M.total_dim == 2
    assert M.maps['a'] == Matrix(A.field, [[1]])
    assert M.name == 'M'


def test_missing_arrows_act_by_zero():
    A = fixture('kA2').algebra
    M = Representation(A, [1, 1])
    assert M.maps['a'].is_zero()


def test_constructor_errors():
    A = fixture('kA2').algebra
    with pytest.raises(ValueError):
        Representation(A, [1])
    with pytest.raises(ValueError):
        Representation(A, [1, -1])
    with pytest.raises(ValueError):
        Representation(A, [1, 1], {'z': [[1]]})
    with pytest.raises(ValueError):
        Representation(A, [1, 2], {'a': [[1]]})


def test_relations_are_checked():
    A = fixture('A3rad2').algebra
    maps = {'a': [[1]], 'b': [[1]]}
    with pytest.raises(ValueError):
        Representation(A, [1, 1, 1], maps)
    M = Representation(A, [1, 1, 1], maps, check=False)
    assert M.dims == (1, 1, 1)
    with pytest.raises(ValueError):
        Representation(fixture('kxx2').algebra, [1], {'x': [[1]]})


def test_equality_ignores_name():
    A = fixture('kA2').algebra
    M = Representation(A, [1, 1], {'a': [[1]]}, name='M')
    assert M == M.renamed('N')
    assert M == projective(A, 0)
    assert M != Representation(A, [1, 1])
    other = fixture('kA2', 7).algebra
    assert M != Representation(other, [1, 1], {'a': [[1]]})


def test_path_matrix():
    A = fixture('kA3').algebra
    P0 = projective(A, 0)
    assert P0.path_matrix(A.quiver.path('ab')) == Matrix(A.field, [[1]])


@pytest.mark.parametrize('name, v, dims', [
    ('kA2', 0, (1, 1)),
    ('kA2', 1, (0, 1)),
    ('A3rad2', 0, (1, 1, 0)),
    ('A3rad2', 1, (0, 1, 1)),
    ('kxx2', 0, (2, )),
    ('kron2', 0, (1, 2)),
])
def test_projective_dims(name, v, dims):
    assert projective(fixture(name).algebra, v).dims == dims


@pytest.mark.parametrize('name, v, dims', [
    ('kA2', 0, (1, 0)),
    ('kA2', 1, (1, 1)),
    ('A3rad2', 1, (1, 1, 0)),
    ('A3rad2', 2, (0, 1, 1)),
    ('kron2', 1, (2, 1)),
])
def test_injective_dims(name, v, dims):
    I = injective(fixture(name).algebra, v)
    assert I.dims == dims
    assert I.name == f'I({v})'


def test_loop_projective_action():
    A = fixture('kxx2').algebra
    assert projective(A, 0).maps['x'] == Matrix(A.field, [[0, 0], [1, 0]])


def test_standard_modules():
    A = fixture('kA3').algebra
    assert simple(A, 1).dims == (0, 1, 0)
    assert zero_module(A).is_zero()
    assert regular(A).dims == (1, 2, 3)
    assert regular(A).name == 'A'
    with pytest.raises(ValueError):
        simple(A, 3)


def test_matlis_dual():
    A = fixture('kron2').algebra
    P0 = projective(A, 0)
    D = matlis_dual(P0)
    assert D.algebra is A.opposite()
    assert D.dims == P0.dims
    assert D.name == 'D(P(0))'
    assert matlis_dual(D) == P0
    assert evaluation(P0).is_isomorphism()
    with pytest.raises(TypeError):
        matlis_dual(3)


def test_module_key():
    A = fixture('kA2').algebra
    S = simple(A, 0)
    renamed = ModuleKey(S.renamed('x'))
    assert ModuleKey(S) == renamed
    assert hash(ModuleKey(S)) == hash(renamed)
    assert renamed.module.name == 'x'
    assert ModuleKey(S) != ModuleKey(simple(A, 1))
    assert ModuleKey(S) != S
    assert len({ModuleKey(S), renamed, ModuleKey(projective(A, 0))}) == 2
    with pytest.raises(ValueError):
        ModuleKey('S(0)')
