import pytest

from homoglue.fixtures import FIXTURES, FixtureTruth, fixture
from homoglue.formats import parse_algebra
from homoglue.resolve import id, injective_envelope, pd
from homoglue.quiver import regular, simple


def test_fixture_cache():
    assert fixture('kA2') is fixture('kA2')
    assert fixture('kA2', p=3) is not fixture('kA2')
    assert fixture('kA2', p=3).algebra.field.p == 3
    with pytest.raises(ValueError, match='Unknown fixture'):
        fixture('kA4')


@pytest.mark.parametrize('name', FIXTURES)
def test_dimensions_match_truth(name):
    fix = fixture(name)
    A = fix.algebra
    assert id(regular(A)).value == fix.truth.regular_id
    assert tuple(pd(simple(A, v)).value
                 for v in A.vertices) == fix.truth.simple_pd
    assert tuple(id(simple(A, v)).value
                 for v in A.vertices) == fix.truth.simple_id


@pytest.mark.parametrize('name, count', [('kA2', 3), ('kA3', 6),
                                         ('A3rad2', 5), ('kxx2', 2)])
def test_indecomposables(name, count):
    modules = fixture(name).indecomposables()
    assert len(modules) == count
    assert all(not m.is_zero() for m in modules)


def test_kronecker_infinite_type():
    with pytest.raises(ValueError, match='infinitely many'):
        fixture('kron2').indecomposables()


@pytest.mark.parametrize('name', ['kA2', 'kxx2', 'kron2'])
def test_selftest(name):
    report = fixture(name, p=3).selftest(sample_size=2)
    assert report.mismatches == []
    assert report.holds
    assert report.computed == report.expected


def test_truth_rows():
    truth = fixture('kA2').truth
    rows = truth.rows()
    assert rows[0] == ('gldim', 1)
    assert rows[-1] == ('indecomposables', 3)
    assert len(rows) == 10
    assert str(truth).splitlines()[0].split() == ['gldim', '1']
    assert isinstance(truth, FixtureTruth)


def test_to_text():
    fix = fixture('A3rad2')
    text = fix.to_text()
    assert text.splitlines() == ['# A3rad2', 'field 5', 'vertices 3',
                                 'arrow a 0 1', 'arrow b 1 2', 'rel 1*ab']
    assert parse_algebra(text).dimension == fix.algebra.dimension


def test_envelope_keeps_projective_dimension():
    fix = fixture('kA2')
    for module in fix.indecomposables():
        envelope = injective_envelope(module).target
        assert pd(envelope).value == pd(module).value


@pytest.mark.parametrize('p', [2, 7])
@pytest.mark.parametrize('name', FIXTURES)
def test_selftest_other_fields(name, p):
    fixed = fixture(name, p=p)
    assert fixed.algebra.field.p == p
    report = fixed.selftest(sample_size=2)
    assert report.mismatches == []
