from homoglue.fixtures import fixture
from homoglue.quiver import simple
from homoglue.auscond import (ModuleProfile, Sample, default_sample,
                              explicit_sample, profile_module,
                              profile_sample)


def test_default_sample_structured():
    A = fixture('kA2').algebra
    sample = default_sample(A, size=0)
    assert isinstance(sample, Sample)
    assert sample.names() == ['P(0)', 'P(1)', 'S(0)']
    assert len(sample) == 3
    assert '3 structured modules' in sample.description


def test_default_sample_random():
    A = fixture('A3rad2').algebra
    sample = default_sample(A, size=6, seed=2)
    assert sample.names() == default_sample(A, size=6, seed=2).names()
    assert all(0 < m.total_dim <= 4 for m in sample if m.name[0] == 'R')
    keys = [m.key() for m in sample]
    assert len(keys) == len(set(keys))


def test_explicit_sample():
    A = fixture('kA2').algebra
    sample = explicit_sample(A, [simple(A, 0), simple(A, 1).renamed('')])
    assert sample.names() == ['S(0)', 'M1']
    assert sample.description == 'explicit sample'
    assert [m.dims for m in sample] == [(1, 0), (0, 1)]


def test_profile_module():
    A = fixture('kA2').algebra
    profile = profile_module(simple(A, 0), 2)
    assert profile == ModuleProfile('S(0)', (1, 0), 1, 0, (1, 0), (0, 1))


def test_profile_sample_parallel():
    A = fixture('kA2').algebra
    sample = default_sample(A, size=2, seed=1)
    serial = profile_sample(sample, 2)
    assert serial == [profile_module(m, 2) for m in sample]
    assert profile_sample(sample, 2, jobs=2) == serial
