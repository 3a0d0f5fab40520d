from homoglue.fixtures import fixture
from homoglue.auscond import (default_sample, projective_shift,
                              structural_checks)


def test_projective_shift():
    assert projective_shift(fixture('kA2').algebra, 2) == 0
    assert projective_shift(fixture('A3rad2').algebra, 3) == 0
    assert projective_shift(fixture('kxx2').algebra, 2) == 0
    assert projective_shift(fixture('kron2').algebra, 2) == 1


def test_structural_kA2():
    A = fixture('kA2').algebra
    report = structural_checks(A, sample=default_sample(A, size=3), depth=2)
    assert report.alarms == []
    assert all(c.holds is not False for c in report.checks)
    assert report.check('findim_bound').holds is True
    assert len(report.checks) == 11


def test_structural_kron2():
    A = fixture('kron2').algebra
    report = structural_checks(A, sample=default_sample(A, size=3), depth=2)
    assert report.alarms == []
    assert report.check('class_equality').holds is None
    assert 'requires the Auslander condition' in str(report)
