""" Module for isomorphism search and the bounded finitistic dimension. """
import warnings
from dataclasses import dataclass, field
from typing import Optional

from .dimension import DimensionReport, pd, id
from ..quiver import Representation, Morphism, hom_basis, regular
from ..utils import (DEFAULT_CUTOFF, DEFAULT_TRIALS, check_consistency,
                     check_same_algebra, default_rng)


def is_isomorphic(module, other, trials=DEFAULT_TRIALS, seed=None):
    """
    Search for an isomorphism among random combinations of
    ``hom_basis(M, N)``.

    A positive answer is certain. A negative answer after ``trials``
    attempts on modules with equal dimension vectors is heuristic and is
    reported with a warning.

    :param Representation module: the first module.
    :param Representation other: the second module.
    :param int trials: the number of random combinations tried.
    :param seed: a seed or a ``numpy.random.Generator``.
    :rtype: bool
    """
    check_consistency([module, other], Representation)
    check_same_algebra(module, other)
    if module.dims != other.dims:
        return False
    if module == other or module.is_zero():
        return True
    basis = hom_basis(module, other)
    if not basis:
        return False
    rng = default_rng(seed)
    p = module.field.p
    for phi in basis:
        if phi.is_isomorphism():
            return True
    for _ in range(trials):
        candidate = Morphism.zero(module, other)
        for phi in basis:
            candidate = candidate + phi * int(rng.integers(0, p))
        if candidate.is_isomorphism():
            return True
    warnings.warn(f'No isomorphism {module!r} -> {other!r} found in '
                  f'{trials} trials; the modules are taken as '
                  f'non-isomorphic.')
    return False


@dataclass(frozen=True)
class FindimScan:
    """
    The bounded finitistic dimension of a sample: the largest projective
    dimension among the sampled modules whose dimension is at most the
    cutoff.

    ``consistent`` compares the scan with the injective dimension of the
    regular module, which bounds every finite projective dimension when it
    is itself finite; it is ``None`` when that dimension exceeds the cutoff.
    """
    value: int
    finite: int
    skipped: int
    regular_id: DimensionReport = field(repr=False)
    consistent: Optional[bool]


def findim_scan(algebra, sample, cutoff=DEFAULT_CUTOFF):
    """
    The largest finite projective dimension over ``sample``.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param list(Representation) sample: the modules to scan.
    :param int cutoff: the cutoff for every dimension.
    :rtype: FindimScan
    """
    value, finite, skipped = 0, 0, 0
    for module in sample:
        report = pd(module, cutoff)
        if report.is_finite:
            finite += 1
            value = max(value, report.value)
        else:
            skipped += 1
    ring = id(regular(algebra), cutoff)
    consistent = ring.value >= value if ring.is_finite else None
    return FindimScan(value, finite, skipped, ring, consistent)
