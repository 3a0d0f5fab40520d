import pytest

from homoglue.fixtures import fixture
from homoglue.quiver import projective, simple
from homoglue.approx import (LEFT, RIGHT, attach_ladder, ladder_coherence,
                             ladder_map, left_presentation,
                             right_presentation)


def test_attach_ladder_index_one():
    A = fixture('kA2').algebra
    pres = left_presentation(simple(A, 1), 1, test_modules=[])
    assert attach_ladder(pres) is pres


def test_left_ladder_commutes():
    A = fixture('kA2').algebra
    upper = left_presentation(simple(A, 1), 2, test_modules=[])
    lower = left_presentation(simple(A, 1), 1, test_modules=[])
    ladder = ladder_map(upper, lower)
    assert ladder.commutes
    assert ladder.i_map.source == upper.sequence.middle
    assert ladder.i_map.target == lower.sequence.middle
    assert str(ladder).startswith('ladder 2 -> 1')


def test_attached_ladder():
    A = fixture('kA2').algebra
    pres = attach_ladder(left_presentation(simple(A, 1), 2, test_modules=[]))
    assert pres.ladder is not None
    assert pres.ladder.lower.i == 1
    assert 'ladder 2 -> 1' in str(pres)


def test_ladder_errors():
    A = fixture('kA2').algebra
    left = left_presentation(simple(A, 1), 2, test_modules=[])
    right = right_presentation(simple(A, 1), 1, test_modules=[])
    with pytest.raises(ValueError, match='two left or two right'):
        ladder_map(left, right)
    with pytest.raises(ValueError, match='consecutive'):
        ladder_map(left, left)
    lower = left_presentation(simple(A, 1), 1, test_modules=[])
    with pytest.raises(ValueError, match='consecutive'):
        ladder_map(lower, left)


@pytest.mark.parametrize('kind, build', [(LEFT, projective), (RIGHT, simple)])
def test_ladder_coherence(kind, build):
    A = fixture('kA2').algebra
    result = ladder_coherence(build(A, 0 if kind == LEFT else 1), 1,
                              kind=kind)
    assert result.holds is True
    assert result.witness == ''
    assert result.detail == f'{kind}, indices 3 -> 2 -> 1'
    with pytest.raises(ValueError):
        ladder_coherence(simple(A, 1), 1, kind='sideways')
