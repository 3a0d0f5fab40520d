""" Module for projective, injective and flat dimensions with a cutoff. """
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .complex import AugmentedComplex
from .resolution import min_resolution
from ..quiver import ModuleKey, Representation, matlis_dual
from ..utils import (DEFAULT_CACHE_SIZE, DEFAULT_CUTOFF, check_consistency,
                     check_non_negative)

PD, ID, FD = 'pd', 'id', 'fd'


@dataclass(frozen=True)
class DimensionReport:
    """
    A homological dimension computed up to a cutoff.

    ``value`` is the dimension when it is at most ``cutoff`` and ``None``
    when the minimal (co)resolution still has a nonzero term at position
    ``cutoff + 1``; the dimension is then only known to exceed the cutoff.

    :Example:
        >>> report = pd(simple(A, 0))
        >>> report.value, str(report)
        (1, '1')
    """
    kind: str
    value: Optional[int]
    cutoff: int
    witness: AugmentedComplex = field(repr=False, compare=False)
    note: str = ''

    @property
    def exceeds(self):
        """True if the dimension is larger than the cutoff."""
        return self.value is None

    @property
    def is_finite(self):
        """True if a finite value was found within the cutoff."""
        return self.value is not None

    def at_most(self, bound):
        """
        Decide ``dimension <= bound``.

        :return: ``True`` or ``False``, or ``None`` when the cutoff is too
            small to decide.
        :rtype: bool or None
        """
        if self.value is not None:
            return self.value <= bound
        return False if bound <= self.cutoff else None

    def __str__(self):
        text = (str(self.value)
                if self.value is not None else f'exceeds({self.cutoff})')
        if self.kind == FD:
            text += ' (fd = pd over Artin algebra)'
        return text


def _syzygy_dims(module, witness):
    dims = [tuple(module.dims)]
    for term in witness.terms:
        dims.append(tuple(t - s for t, s in zip(term.dims, dims[-1])))
    return dims


def _periodicity_note(dims):
    seen = {}
    for t, d in enumerate(dims):
        if d in seen and any(d):
            return (f'syzygies {seen[d]} and {t} share the dimension vector '
                    f'{list(d)}: periodic resolution suspected')
        seen.setdefault(d, t)
    return ''


def _projective_dimension(module, cutoff, kind):
    witness = min_resolution(module, cutoff + 1)
    nonzero = [l for l, t in enumerate(witness.terms) if not t.is_zero()]
    if not nonzero:
        value = 0
    elif nonzero[-1] <= cutoff:
        value = nonzero[-1]
    else:
        value = None
    note = ''
    if value is None:
        note = _periodicity_note(_syzygy_dims(module, witness))
    return DimensionReport(kind, value, cutoff, witness, note)


def pd(module, cutoff=DEFAULT_CUTOFF):
    """
    Projective dimension, the index of the last nonzero term of the
    minimal projective resolution. The zero module has dimension 0.

    :param Representation module: the module.
    :param int cutoff: the largest dimension that is decided.
    :rtype: DimensionReport
    """
    check_consistency(module, Representation)
    check_non_negative(cutoff, 'cutoff')
    return _pd(ModuleKey(module), cutoff)


@lru_cache(maxsize=DEFAULT_CACHE_SIZE)
def _pd(handle, cutoff):
    return _projective_dimension(handle.module, cutoff, PD)


def id(module, cutoff=DEFAULT_CUTOFF):
    """
    Injective dimension, computed as the projective dimension of ``D M``
    over the opposite algebra. The witness is the minimal injective
    coresolution of ``M``.

    :rtype: DimensionReport
    """
    check_consistency(module, Representation)
    report = pd(matlis_dual(module), cutoff)
    witness = report.witness.dual().rebased(module)
    return DimensionReport(ID, report.value, cutoff, witness, report.note)


def fd(module, cutoff=DEFAULT_CUTOFF):
    """
    Flat dimension. Finitely generated flat modules over an Artin algebra
    are projective, so this is the projective dimension.

    :rtype: DimensionReport
    """
    report = pd(module, cutoff)
    return DimensionReport(FD, report.value, cutoff, report.witness,
                           report.note)


def sup_dimension(reports):
    """
    The supremum of a family of reports: ``None`` (exceeds) as soon as one
    of them exceeds its cutoff, ``0`` for an empty family.

    :rtype: int or None
    """
    value = 0
    for report in reports:
        if report.value is None:
            return None
        value = max(value, report.value)
    return value
