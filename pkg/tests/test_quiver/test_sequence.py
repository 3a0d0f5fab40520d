import pytest

from homoglue.fixtures import fixture
from homoglue.quiver import (DirectSum, LongExactSequence, Morphism,
                             ShortExactSequence, cohorseshoe_fill,
                             horseshoe_fill, is_exact_at, kernel,
                             matlis_dual, projective, projective_morphism,
                             random_ses, simple)


def _cover(A, v):
    return projective_morphism(A, v, simple(A, v), [[1]])


def _presentation(A):
    """``P(1) -> P(0) -> S(0) -> 0`` over A3rad2."""
    g0 = _cover(A, 0)
    K, inclusion = kernel(g0)
    g1 = projective_morphism(A, 1, K, [[1]])
    return inclusion @ g1, g0


def test_from_surjection():
    A = fixture('kA2').algebra
    ses = ShortExactSequence.from_surjection(_cover(A, 0))
    assert ses.left.dims == (0, 1)
    assert ses.middle == projective(A, 0)
    assert not ses.is_split()
    assert ses.section() is None
    assert ses.retraction() is None


def test_split_sequence():
    A = fixture('kA2').algebra
    total = DirectSum([simple(A, 0), projective(A, 1)])
    ses = ShortExactSequence(total.injections[0], total.projections[1])
    assert ses.is_split()
    assert ses.g @ ses.section() == Morphism.identity(ses.right)
    assert ses.retraction() @ ses.f == Morphism.identity(ses.left)


def test_not_exact():
    A = fixture('kA2').algebra
    cover = _cover(A, 0)
    P0 = projective(A, 0)
    with pytest.raises(ValueError):
        ShortExactSequence(Morphism.zero(simple(A, 1), P0), cover)
    with pytest.raises(ValueError):
        ShortExactSequence(Morphism.identity(P0), cover)
    with pytest.raises(ValueError):
        ShortExactSequence(cover, cover)


def test_dual_sequence():
    A = fixture('kA3').algebra
    ses = ShortExactSequence.from_surjection(_cover(A, 0))
    dual = ses.dual()
    assert dual.algebra is A.opposite()
    assert dual.left == matlis_dual(ses.right)
    assert dual.right == matlis_dual(ses.left)


def test_long_exact_sequence():
    A = fixture('A3rad2').algebra
    d1, g0 = _presentation(A)
    assert is_exact_at(d1, g0)
    assert not is_exact_at(Morphism.zero(d1.source, d1.target), g0)
    les = LongExactSequence([d1, g0])
    assert len(les) == 2
    assert [t.dims for t in les.terms] == [(0, 1, 1), (1, 1, 0), (1, 0, 0)]
    assert not les.left_exact
    assert les.right_exact
    pieces = les.splice()
    assert len(pieces) == 1
    assert pieces[0].left.dims == (0, 1, 0)
    assert les.head().is_surjective()
    assert les.head().target.dims == (0, 1, 0)
    assert len(les.dual()) == 2
    with pytest.raises(ValueError):
        LongExactSequence([Morphism.zero(d1.source, d1.target), g0])
    with pytest.raises(ValueError):
        LongExactSequence([])


def test_horseshoe_fill():
    A = fixture('A3rad2').algebra
    ses = ShortExactSequence.from_surjection(_cover(A, 0))
    alpha = projective_morphism(A, 1, ses.left, [[1]])
    h = Morphism.identity(ses.middle)
    filled = horseshoe_fill(ses, alpha, ses.g, h)
    assert filled.is_surjective()
    assert filled.source.dims == (1, 2, 1)
    with pytest.raises(ValueError):
        horseshoe_fill(ses, alpha, ses.g, Morphism.zero(ses.middle,
                                                        ses.middle))


def test_cohorseshoe_fill():
    A = fixture('A3rad2').algebra
    ses = ShortExactSequence.from_surjection(_cover(A, 0))
    k = Morphism.identity(ses.middle)
    filled = cohorseshoe_fill(ses, ses.f, Morphism.identity(ses.right), k)
    assert filled.is_injective()
    with pytest.raises(ValueError):
        cohorseshoe_fill(ses, ses.f, Morphism.identity(ses.right),
                         Morphism.zero(ses.middle, ses.middle))


@pytest.mark.parametrize('name', ['kA3', 'A3rad2', 'kxx2', 'kron2'])
def test_random_ses(name):
    A = fixture(name).algebra
    for seed in range(8):
        ses = random_ses(A, 4, seed)
        assert ses.algebra is A
        assert is_exact_at(ses.f, ses.g)
        assert ses.f.is_injective()
        assert ses.g.is_surjective()
