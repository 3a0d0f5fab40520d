import pytest

from homoglue.fixtures import fixture
from homoglue.quiver import (Morphism, ShortExactSequence, projective,
                             simple, zero_module)
from homoglue.resolve import (AugmentedComplex, cosyzygy, horseshoe_tower,
                              min_coresolution, min_resolution, pd,
                              projective_cover, syzygy)
from homoglue.resolve.dimension import _pd
from homoglue.resolve.resolution import _min_resolution
from homoglue.utils import DEFAULT_CACHE_SIZE


def test_min_resolution_kA2():
    A = fixture('kA2').algebra
    cx = min_resolution(simple(A, 0), 2)
    assert cx.dims() == [(1, 1), (0, 1), (0, 0)]
    assert cx.length == 2
    assert len(cx) == 3
    assert cx.is_resolution
    assert cx.is_complex()
    assert cx.is_exact()
    assert cx.is_minimal()


def test_min_resolution_A3rad2():
    A = fixture('A3rad2').algebra
    cx = min_resolution(simple(A, 0), 3)
    assert cx.dims() == [(1, 1, 0), (0, 1, 1), (0, 0, 1), (0, 0, 0)]
    assert cx.is_exact()
    assert cx.kernel(2)[0].is_zero()


def test_min_resolution_cached():
    A = fixture('A3rad2').algebra
    S = simple(A, 1)
    first = min_resolution(S, 2)
    second = min_resolution(S, 2)
    assert first.dims() == second.dims()
    assert second.module is S


def test_min_resolution_cache_bounded():
    A = fixture('kA3').algebra
    S = simple(A, 0)
    assert _min_resolution.cache_info().maxsize == DEFAULT_CACHE_SIZE
    assert _pd.cache_info().maxsize == DEFAULT_CACHE_SIZE
    first = min_resolution(S, 3)
    other = min_resolution(S.renamed('x'), 3)
    assert other.module.name == 'x'
    assert other.dims() == first.dims()
    assert pd(S.renamed('y')).value == 1
    assert {kind for kind, _ in A.cache} <= {'projective', 'injective'}


def test_min_resolution_periodic():
    A = fixture('kxx2').algebra
    cx = min_resolution(simple(A, 0), 4)
    assert cx.dims() == [(2, )] * 5
    assert cx.is_exact()
    assert cx.is_minimal()


def test_min_resolution_zero_module():
    A = fixture('kA3').algebra
    cx = min_resolution(zero_module(A), 2)
    assert all(t.is_zero() for t in cx.terms)


def test_min_coresolution():
    A = fixture('kA2').algebra
    cx = min_coresolution(simple(A, 1), 2)
    assert cx.direction == 'coresolution'
    assert cx.dims() == [(1, 1), (1, 0), (0, 0)]
    assert cx.module == simple(A, 1)
    assert cx.algebra is A
    assert cx.is_exact()
    assert cx.is_minimal()
    assert cx.cokernel(0)[0].dims == (1, 0)
    with pytest.raises(ValueError):
        cx.kernel(0)


def test_non_minimal_resolution():
    A = fixture('kA2').algebra
    P0 = projective(A, 0)
    cover = projective_cover(simple(A, 0))
    doubled = AugmentedComplex('resolution', simple(A, 0), [P0, P0],
                               [Morphism.identity(P0)], cover)
    assert not doubled.is_exact()
    assert not doubled.is_complex()


def test_complex_constructor_errors():
    A = fixture('kA2').algebra
    S = simple(A, 0)
    cover = projective_cover(S)
    with pytest.raises(ValueError):
        AugmentedComplex('sideways', S, [cover.source], [], cover)
    with pytest.raises(ValueError):
        AugmentedComplex('resolution', S, [], [], cover)
    with pytest.raises(ValueError):
        AugmentedComplex('coresolution', S, [cover.source], [], cover)


def test_shift_truncate_dual():
    A = fixture('A3rad2').algebra
    cx = min_resolution(simple(A, 0), 2)
    shifted, inclusion = cx.shift()
    assert shifted.module.dims == (0, 1, 0)
    assert shifted.length == 1
    assert inclusion.target == cx.terms[0]
    assert cx.truncate(1).length == 1
    with pytest.raises(ValueError):
        cx.truncate(3)
    dual = cx.dual()
    assert dual.direction == 'coresolution'
    assert dual.algebra is A.opposite()
    assert dual.is_exact()
    with pytest.raises(ValueError):
        min_coresolution(simple(A, 0), 1).shift()


def test_syzygy_cosyzygy():
    A = fixture('kA2').algebra
    S0, S1 = simple(A, 0), simple(A, 1)
    assert syzygy(S0, 1)[0].dims == (0, 1)
    assert syzygy(S0, 2)[0].is_zero()
    module, inclusion = syzygy(S0, 0)
    assert module is S0 and inclusion is None
    assert cosyzygy(S1, 1)[0].dims == (1, 0)
    assert cosyzygy(S1, 2)[0].is_zero()


def test_horseshoe_tower():
    A = fixture('A3rad2').algebra
    ses = ShortExactSequence.from_surjection(projective_cover(simple(A, 0)))
    left = min_resolution(ses.left, 2)
    right = min_resolution(ses.right, 2)
    middle, sums, stages, inclusions = horseshoe_tower(ses, left, right)
    assert middle.module == ses.middle
    assert middle.length == 2
    assert middle.terms[0].dims == (1, 2, 1)
    assert middle.is_exact()
    assert len(sums) == len(stages) == len(inclusions) == 3
    with pytest.raises(ValueError):
        horseshoe_tower(ses, right, left)
