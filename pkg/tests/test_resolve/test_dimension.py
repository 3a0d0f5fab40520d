import pytest

from homoglue.fixtures import fixture
from homoglue.quiver import projective, regular, simple, zero_module
from homoglue.resolve import (DimensionReport, FindimScan, fd, findim_scan,
                              id, pd, sup_dimension)


def test_projective_dimension():
    A = fixture('A3rad2').algebra
    assert [pd(simple(A, v)).value for v in A.vertices] == [2, 1, 0]
    assert pd(zero_module(A)).value == 0
    report = pd(simple(A, 0), 3)
    assert report.is_finite
    assert not report.exceeds
    assert report.witness.length == 4


def test_injective_dimension():
    A = fixture('A3rad2').algebra
    assert [id(simple(A, v)).value for v in A.vertices] == [0, 1, 2]
    assert id(regular(A)).value == 2
    report = id(simple(A, 2))
    assert report.kind == 'id'
    assert report.witness.direction == 'coresolution'
    assert report.witness.module == simple(A, 2)


def test_periodic_dimension():
    A = fixture('kxx2').algebra
    report = pd(simple(A, 0), 3)
    assert report.value is None
    assert report.exceeds
    assert str(report) == 'exceeds(3)'
    assert 'periodic' in report.note
    assert report.at_most(2) is False
    assert report.at_most(5) is None
    assert id(regular(A), 3).value == 0
    assert id(simple(A, 0), 3).value is None


def test_at_most():
    A = fixture('kA2').algebra
    report = pd(simple(A, 0))
    assert str(report) == '1'
    assert report.at_most(1)
    assert not report.at_most(0)


def test_flat_dimension():
    A = fixture('kA2').algebra
    report = fd(simple(A, 0))
    assert report.value == 1
    assert str(report) == '1 (fd = pd over Artin algebra)'


def test_cutoff_validation():
    A = fixture('kA2').algebra
    with pytest.raises(ValueError):
        pd(simple(A, 0), -1)


def test_sup_dimension():
    A = fixture('A3rad2').algebra
    reports = [pd(simple(A, v)) for v in A.vertices]
    assert sup_dimension(reports) == 2
    assert sup_dimension([]) == 0
    K = fixture('kxx2').algebra
    assert sup_dimension(reports + [pd(simple(K, 0), 2)]) is None


def test_report_equality_ignores_witness():
    A = fixture('kA2').algebra
    assert pd(simple(A, 0), 4) == DimensionReport('pd', 1, 4, None)


def test_findim_scan():
    A = fixture('A3rad2').algebra
    scan = findim_scan(A, [simple(A, v) for v in A.vertices])
    assert isinstance(scan, FindimScan)
    assert scan.value == 2
    assert scan.finite == 3
    assert scan.skipped == 0
    assert scan.consistent is True
    K = fixture('kxx2').algebra
    scan = findim_scan(K, [simple(K, 0), projective(K, 0)], 3)
    assert scan.value == 0
    assert scan.skipped == 1
    assert scan.consistent is True
