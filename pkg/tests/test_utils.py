import numpy as np
import pytest

from homoglue.fixtures import fixture
from homoglue.quiver import Representation, simple
from homoglue.utils import (check_consistency, check_non_negative,
                            check_same_algebra, default_rng)


def test_check_consistency_correct():
    A = fixture('kA2').algebra
    check_consistency(simple(A, 0), Representation)
    check_consistency([simple(A, 0), simple(A, 1)], Representation)
    check_consistency(Representation, object, subclass=True)


def test_check_consistency_incorrect():
    A = fixture('kA2').algebra
    with pytest.raises(ValueError):
        check_consistency(A, Representation)
    with pytest.raises(ValueError):
        check_consistency([simple(A, 0), 3], Representation)
    with pytest.raises(ValueError):
        check_consistency(int, Representation, subclass=True)


def test_check_non_negative():
    check_non_negative(0, 'n')
    check_non_negative(np.int64(3), 'n')
    with pytest.raises(ValueError, match='n must be non-negative'):
        check_non_negative(-1, 'n')
    with pytest.raises(ValueError, match='must be an integer'):
        check_non_negative(True, 'n')
    with pytest.raises(ValueError, match='must be an integer'):
        check_non_negative(1.0, 'n')


def test_check_same_algebra():
    A, B = fixture('kA2').algebra, fixture('kA3').algebra
    check_same_algebra(simple(A, 0), simple(A, 1))
    with pytest.raises(ValueError):
        check_same_algebra(simple(A, 0), simple(B, 0))


def test_default_rng():
    assert default_rng().integers(0, 100) == default_rng(0).integers(0, 100)
    rng = np.random.default_rng(7)
    assert default_rng(rng) is rng
