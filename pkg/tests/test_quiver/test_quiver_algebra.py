import pytest

from homoglue.fixtures import fixture
from homoglue.linalg import PrimeField
from homoglue.quiver import BoundQuiverAlgebra, Path, Quiver

F5 = PrimeField(5)


def test_quiver_paths():
    Q = Quiver(2, [('a', 0, 1), ('b', 0, 1)])
    assert [str(p) for p in Q.paths(1)] == ['a', 'b']
    assert Q.vertex_count == 2
    assert [a.id for a in Q.arrows_from(0)] == ['a', 'b']
    assert Q.arrows_into(0) == []


def test_quiver_constructor_errors():
    with pytest.raises(ValueError):
        Quiver(2, [('a', 0, 1), ('a', 1, 0)])
    with pytest.raises(ValueError):
        Quiver(2, [('a', 0, 2)])
    with pytest.raises(KeyError):
        Quiver(2, [('a', 0, 1)]).arrow('z')


def test_quiver_path_words():
    Q = Quiver(3, [('a', 0, 1), ('b', 1, 2)])
    assert Q.path('ab') == Path(0, 2, ('a', 'b'))
    assert Q.path('', source=1) == Path(1, 1, ())
    with pytest.raises(ValueError):
        Q.path('ba')
    with pytest.raises(ValueError):
        Q.path('')


def test_quiver_acyclic_and_opposite():
    Q = Quiver(3, [('a', 0, 1), ('b', 1, 2)])
    assert Q.is_acyclic()
    assert not Quiver(1, [('x', 0, 0)]).is_acyclic()
    op = Q.opposite()
    assert op.arrow('a').source == 1
    assert op.arrow('a').target == 0


@pytest.mark.parametrize('name, dimension', [('kA2', 3), ('kA3', 6),
                                             ('A3rad2', 5), ('kxx2', 2),
                                             ('kron2', 4)])
def test_fixture_dimensions(name, dimension):
    assert fixture(name).algebra.dimension == dimension


def test_path_length_bound():
    assert fixture('kA3').algebra.path_length_bound == 2
    assert fixture('A3rad2').algebra.path_length_bound == 1
    assert fixture('kxx2').algebra.path_length_bound == 1


def test_path_basis_trivial_first():
    A = fixture('kxx2').algebra
    basis = A.path_basis(0, 0)
    assert [str(p) for p in basis] == ['e0', 'x']
    assert A.path_basis(0, 0)[0].length == 0


def test_relation_zero_modulo_p():
    Q = Quiver(3, [('a', 0, 1), ('b', 1, 2)])
    A = BoundQuiverAlgebra(Q, F5, [[(5, 'ab')]])
    assert A.relations == ()
    assert A.dimension == 6


def test_relation_errors():
    Q = Quiver(4, [('a', 0, 1), ('b', 1, 2), ('c', 1, 3)])
    with pytest.raises(ValueError):
        BoundQuiverAlgebra(Q, F5, [[(1, 'a')]])
    with pytest.raises(ValueError):
        BoundQuiverAlgebra(Q, F5, [[(1, 'ab'), (1, 'ac')]])


def test_not_nilpotent():
    loop = Quiver(1, [('x', 0, 0)])
    with pytest.raises(ValueError):
        BoundQuiverAlgebra(loop, F5, max_bound=4)
    with pytest.raises(ValueError):
        BoundQuiverAlgebra(loop, F5, [[(1, 'xxx')]], path_length_bound=1)


def test_opposite_is_cached_involution():
    A = fixture('A3rad2').algebra
    op = A.opposite()
    assert op is A.opposite()
    assert op.opposite() is A
    assert op.name == 'A3rad2^op'
    assert op.dimension == A.dimension
    assert len(op.relations) == 1


def test_coordinates_of_vanishing_path():
    A = fixture('A3rad2').algebra
    path = A.quiver.path('ab')
    assert A.path_basis(0, 2) == []
    assert A.coordinates(path).size == 0
