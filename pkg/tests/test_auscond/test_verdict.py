import pytest

from homoglue.fixtures import fixture
from homoglue.quiver import simple
from homoglue.auscond import gorenstein_verdict, regular_verdict


def _simples(A):
    return [simple(A, v) for v in A.vertices]


def test_gorenstein_kA2():
    A = fixture('kA2').algebra
    report = gorenstein_verdict(A, 1, sample=_simples(A))
    assert report.condition is True
    assert report.holds is True
    assert report.inequalities is True
    assert report.bound.value == 1
    assert report.alarms == []
    assert report.failures() == []
    assert str(report).startswith('gorenstein verdict, n = 1: yes')


def test_gorenstein_A3rad2():
    A = fixture('A3rad2').algebra
    assert gorenstein_verdict(A, 2, sample=_simples(A)).condition is True
    report = gorenstein_verdict(A, 1, sample=_simples(A))
    assert report.condition is False
    assert report.bound.value == 2


def test_gorenstein_selfinjective():
    A = fixture('kxx2').algebra
    report = gorenstein_verdict(A, 1, cutoff=4, sample=_simples(A))
    assert report.condition is True
    assert report.rows == ()
    assert report.alarms == []


def test_regular():
    A = fixture('kA2').algebra
    assert regular_verdict(A, 1, sample=_simples(A)).condition is True
    K = fixture('kxx2').algebra
    report = regular_verdict(K, 1, cutoff=4, sample=_simples(K))
    assert report.condition is False
    assert report.kind == 'regular'


def test_kronecker():
    A = fixture('kron2').algebra
    assert gorenstein_verdict(A, 1, sample=_simples(A)).condition is False
    assert regular_verdict(A, 1, sample=_simples(A)).condition is False


def test_validation():
    with pytest.raises(ValueError):
        gorenstein_verdict(fixture('kA2').algebra, 0)
