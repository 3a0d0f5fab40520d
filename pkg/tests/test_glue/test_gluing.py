import numpy as np
import pytest

from homoglue.fixtures import FIXTURES, fixture
from homoglue.quiver import (LongExactSequence, Morphism, ShortExactSequence,
                             injective, projective, projective_morphism,
                             random_ses, simple)
from homoglue.glue import (GLUINGS, DualGluing, FirstTermGluing,
                           GluingInterface, LastTermGluing, SubcatSpec,
                           glue_first, glue_first_cores, glue_last_cores,
                           glue_last_res, iterate_glue, proper_coresolution,
                           proper_resolution)
from homoglue.utils import HypothesisError


def _projectives(A):
    return SubcatSpec([projective(A, v) for v in A.vertices])


def _injectives(A):
    return SubcatSpec([injective(A, v) for v in A.vertices])


def _sequence(A):
    """``0 -> S(1) -> P(0) -> S(0) -> 0`` over kA2."""
    cover = projective_morphism(A, 0, simple(A, 0), [[1]])
    return ShortExactSequence.from_surjection(cover)


def test_gluings_table():
    assert set(GLUINGS) == {'first', 'last_res', 'last_cores', 'first_cores'}
    assert issubclass(LastTermGluing, GluingInterface)
    assert DualGluing(FirstTermGluing()).resolves == 'right'
    assert DualGluing(LastTermGluing()).resolves == 'left'
    with pytest.raises(TypeError):
        GluingInterface()


def test_glue_last_res():
    A = fixture('kA2').algebra
    ses = _sequence(A)
    spec = _projectives(A)
    res0 = proper_resolution(spec, ses.middle, 2)
    res1 = proper_resolution(spec, ses.left, 2)
    result = glue_last_res(ses, res0, res1, 'strong')
    glued = result.resolution
    assert glued.module == ses.right
    assert glued.length == 2
    assert glued.exact
    assert glued.in_subcategory
    assert glued.proper
    assert result.predicted_proper
    assert result.predicted_strong
    assert result.consistent()
    assert result.preconditions['hom_exact']
    assert result.preconditions['strongly_hom_exact']
    assert result.bridge is not None


def test_glue_last_res_length_zero():
    A = fixture('kA2').algebra
    ses = _sequence(A)
    spec = _projectives(A)
    result = glue_last_res(ses, proper_resolution(spec, ses.middle, 0),
                           proper_resolution(spec, ses.left, 1))
    assert result.resolution.length == 0
    assert result.resolution.module == ses.right
    assert result.bridge is None


def test_glue_last_res_requirement():
    A = fixture('kA2').algebra
    ses = _sequence(A)
    spec = _injectives(A)
    res0 = proper_resolution(spec, ses.middle, 1)
    res1 = proper_resolution(spec, ses.left, 1)
    with pytest.raises(HypothesisError, match='I\\(0\\)'):
        glue_last_res(ses, res0, res1, 'proper')
    with pytest.raises(HypothesisError):
        glue_last_res(ses, res0, res1, 'strong')
    with pytest.raises(ValueError):
        glue_last_res(ses, res0, res1, 'bogus')
    found = LastTermGluing.preconditions(ses, spec)
    assert not found['hom_exact']
    assert found['hom_exact_offender'] == 'I(0)'


def test_glue_inputs_checked():
    A = fixture('kA2').algebra
    ses = _sequence(A)
    spec = _projectives(A)
    res0 = proper_resolution(spec, ses.middle, 2)
    with pytest.raises(ValueError):
        glue_last_res(ses, res0, res0)
    cores = proper_coresolution(_injectives(A), ses.middle, 2)
    with pytest.raises(ValueError):
        glue_last_res(ses, cores, proper_resolution(spec, ses.left, 2))


def test_glue_first():
    A = fixture('kA2').algebra
    ses = _sequence(A)
    spec = _projectives(A)
    res0 = proper_resolution(spec, ses.middle, 2)
    res1 = proper_resolution(spec, ses.right, 2)
    result = glue_first(ses, res0, res1)
    glued = result.resolution
    assert glued.module == ses.left
    assert glued.length == 1
    assert glued.exact
    assert glued.proper
    assert result.consistent()
    with pytest.raises(ValueError):
        glue_first(ses, res0, proper_resolution(spec, ses.right, 0))


def test_glue_first_cores():
    A = fixture('kA2').algebra
    ses = _sequence(A)
    spec = _injectives(A)
    cores0 = proper_coresolution(spec, ses.middle, 2)
    cores1 = proper_coresolution(spec, ses.right, 2)
    result = glue_first_cores(ses, cores0, cores1, 'strong')
    glued = result.resolution
    assert not glued.is_resolution
    assert glued.module == ses.left
    assert glued.exact
    assert glued.proper
    assert result.consistent()


def test_glue_last_cores():
    A = fixture('kA2').algebra
    ses = _sequence(A)
    spec = _injectives(A)
    cores0 = proper_coresolution(spec, ses.middle, 2)
    cores1 = proper_coresolution(spec, ses.left, 2)
    result = glue_last_cores(ses, cores0, cores1)
    glued = result.resolution
    assert not glued.is_resolution
    assert glued.module == ses.right
    assert glued.exact
    assert result.consistent()


def test_iterate_glue_single_term():
    A = fixture('kA2').algebra
    P0 = projective(A, 0)
    spec = _projectives(A)
    sequence = LongExactSequence([Morphism.identity(P0) * 2])
    res = proper_resolution(spec, P0, 1)
    result = iterate_glue('last_res', sequence, [res])
    assert result.resolution.module == P0
    assert result.resolution.exact
    with pytest.raises(ValueError):
        iterate_glue('last_res', sequence, [res, res])
    with pytest.raises(ValueError):
        iterate_glue('sideways', sequence, [res])


def test_iterate_glue_short_sequence():
    A = fixture('kA2').algebra
    ses = _sequence(A)
    spec = _projectives(A)
    sequence = LongExactSequence([ses.f, ses.g])
    resolutions = [proper_resolution(spec, ses.middle, 2),
                   proper_resolution(spec, ses.left, 2)]
    result = iterate_glue('last_res', sequence, resolutions)
    assert len(result.steps) == 1
    assert result.resolution.module == ses.right
    assert result.resolution.exact
    assert result.preconditions['step 0: hom_exact']


# gluing kind: (takes coresolutions, outer term, resolved term, shape)
KINDS = {
    'first': (False, 'right', 'left', 'first'),
    'last_res': (False, 'left', 'right', 'last'),
    'first_cores': (True, 'right', 'left', 'last'),
    'last_cores': (True, 'left', 'right', 'first'),
}
LENGTH = 3
RUNS = 20


def _specs(name, cores):
    """Generating (or cogenerating) subcategories for the kind of input."""
    A = fixture(name).algebra
    projectives = [projective(A, v) for v in A.vertices]
    injectives = [injective(A, v) for v in A.vertices]
    own, other = (injectives, projectives) if cores else (projectives,
                                                          injectives)
    specs = [SubcatSpec(own), SubcatSpec(projectives + injectives)]
    if fixture(name).truth.regular_id == 0:
        specs.append(SubcatSpec(other))
    return specs


def _sequences(A, count, seed):
    rng = np.random.default_rng(seed)
    found = 0
    for _ in range(25 * count):
        ses = random_ses(A, 4, rng)
        if ses.left.is_zero() or ses.right.is_zero():
            continue
        yield ses
        found += 1
        if found == count:
            return
    raise AssertionError(f'only {found} nondegenerate sequences drawn')


def _plus(*vectors):
    return tuple(sum(parts) for parts in zip(*vectors))


def _expected_dims(shape, inner, outer):
    """Term dimensions of the glued complex from those of the inputs."""
    if shape == 'first':
        first = tuple(a + b - c for a, b, c in zip(outer[1], inner[0],
                                                    outer[0]))
        last = min(len(inner) - 1, len(outer) - 2)
        return [first] + [
            _plus(outer[i + 1], inner[i]) for i in range(1, last + 1)
        ]
    last = min(len(inner) - 1, len(outer))
    return [inner[0]] + [
        _plus(inner[i], outer[i - 1]) for i in range(1, last + 1)
    ]


@pytest.mark.parametrize('name', FIXTURES)
@pytest.mark.parametrize('kind', sorted(KINDS))
def test_random_gluings(name, kind):
    cores, outer_term, resolved_term, shape = KINDS[kind]
    build = proper_coresolution if cores else proper_resolution
    A = fixture(name).algebra
    for number, spec in enumerate(_specs(name, cores)):
        for ses in _sequences(A, RUNS, seed=number):
            res0 = build(spec, ses.middle, LENGTH)
            res1 = build(spec, getattr(ses, outer_term), LENGTH)
            result = GLUINGS[kind](ses, res0, res1)
            glued = result.resolution
            assert glued.module == getattr(ses, resolved_term)
            assert glued.is_resolution != cores
            assert glued.exact
            assert glued.complex.dims() == _expected_dims(
                shape, res0.complex.dims(), res1.complex.dims())
            assert result.consistent()
            if result.predicted_proper:
                assert glued.proper


@pytest.mark.parametrize('name', FIXTURES)
def test_first_gluing_projective_bridge_splits(name):
    A = fixture(name).algebra
    spec = _projectives(A)
    for ses in _sequences(A, 5, seed=11):
        result = glue_first(ses, proper_resolution(spec, ses.middle, 2),
                            proper_resolution(spec, ses.right, 2))
        assert result.bridge.is_split()
        assert result.bridge.left == result.resolution.terms[0]
        assert result.resolution.in_subcategory
        assert result.resolution.strong


@pytest.mark.parametrize('name', FIXTURES)
def test_last_cores_injective_bridge_splits(name):
    A = fixture(name).algebra
    spec = _injectives(A)
    for ses in _sequences(A, 5, seed=12):
        result = glue_last_cores(ses, proper_coresolution(spec, ses.middle, 2),
                                 proper_coresolution(spec, ses.left, 2))
        assert result.bridge.is_split()
        assert result.resolution.in_subcategory
        assert result.resolution.strong
