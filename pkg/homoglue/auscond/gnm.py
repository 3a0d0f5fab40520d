""" Module for the Auslander-type conditions G_n(m) and their duals. """
from dataclasses import dataclass
from typing import Optional, Tuple

from ..quiver import Representation
from ..resolve import (min_coresolution, min_resolution, fd, id,
                       injective_label, projective_label)
from ..utils import DEFAULT_CUTOFF, check_consistency, check_non_negative


@dataclass(frozen=True)
class GnmRow:
    """
    One row of a :class:`GnmReport`: the term of degree ``index`` of the
    (co)resolution, its relevant dimension and the bound it must respect.
    ``ok`` is ``None`` when the cutoff does not decide the inequality.
    """
    index: int
    term: str
    value: Optional[int]
    bound: int
    ok: Optional[bool]


def compare(value, bound, cutoff):
    """
    Decide ``value <= bound`` for a dimension known up to ``cutoff``
    (``value is None`` meaning it exceeds the cutoff).

    :rtype: bool or None
    """
    if value is not None:
        return value <= bound
    return False if bound <= cutoff else None


class _RowConditions:
    """Verdict helpers shared by the row-based reports."""

    @property
    def holds(self):
        return all(row.ok is True for row in self.rows)

    @property
    def inconclusive(self):
        return (not self.holds
                and all(row.ok is not False for row in self.rows))

    @property
    def failure(self):
        """The first row that is decided and violated, or ``None``."""
        return next((row for row in self.rows if row.ok is False), None)


@dataclass(frozen=True)
class GnmReport(_RowConditions):
    """
    The condition ``fd E^i(M) <= m + i`` for ``0 <= i <= n - 1``.

    ``holds`` is True only when every row is decided and satisfied;
    ``inconclusive`` marks a report whose failure comes from the cutoff
    alone. ``exact`` records that the coresolution vanishes from degree
    ``n`` on, so the report also decides ``G_infinity(m)``.
    """
    module: Representation
    n: int
    m: int
    cutoff: int
    rows: Tuple[GnmRow, ...]
    exact: bool

    def __str__(self):
        name = self.module.name or 'M'
        state = ('holds' if self.holds else
                 'inconclusive at cutoff' if self.inconclusive else 'fails')
        lines = [f'{name} in G_{self.n}({self.m}): {state}']
        for row in self.rows:
            value = row.value if row.value is not None else (
                f'exceeds({self.cutoff})')
            lines.append(f'  E^{row.index} = {row.term}: fd {value} '
                         f'<= {row.bound}')
        return '\n'.join(lines)


def is_gnm(module, n, m, cutoff=DEFAULT_CUTOFF):
    """
    Test whether ``M`` is ``G_n(m)``: ``fd E^i(M) <= m + i`` for every
    ``0 <= i <= n - 1``, with ``E^.`` the minimal injective coresolution.
    ``G_0(m)`` holds for every module.

    :Example:
        >>> is_gnm(regular(A), 2, 0).holds
        True

    :param Representation module: the module.
    :param int n: the number of degrees checked.
    :param int m: the shift.
    :param int cutoff: the cutoff for each flat dimension.
    :rtype: GnmReport
    """
    check_consistency(module, Representation)
    check_non_negative(n, 'n')
    check_non_negative(m, 'm')
    cx = min_coresolution(module, n)
    rows = []
    for i in range(n):
        term = cx.terms[i]
        value = fd(term, cutoff).value
        rows.append(
            GnmRow(i, injective_label(term), value, m + i,
                   compare(value, m + i, cutoff)))
    exact = cx.terms[n].is_zero()
    return GnmReport(module, n, m, cutoff, tuple(rows), exact)


@dataclass(frozen=True)
class CoGnmReport(_RowConditions):
    """
    The dual condition ``id P_i(M) <= k + i`` for ``0 <= i <= n - 1`` on
    the minimal projective resolution.
    """
    module: Representation
    n: int
    k: int
    cutoff: int
    rows: Tuple[GnmRow, ...]
    exact: bool


def is_cognm(module, n, k, cutoff=DEFAULT_CUTOFF):
    """
    Test whether ``M`` lies in the dual class: ``id P_i(M) <= k + i`` for
    ``0 <= i <= n - 1``. Over the opposite algebra it is ``G_n(k)`` of
    ``D M``.

    :rtype: CoGnmReport
    """
    check_consistency(module, Representation)
    check_non_negative(n, 'n')
    check_non_negative(k, 'k')
    cx = min_resolution(module, n)
    rows = []
    for i in range(n):
        term = cx.terms[i]
        value = id(term, cutoff).value
        rows.append(
            GnmRow(i, projective_label(term), value, k + i,
                   compare(value, k + i, cutoff)))
    exact = cx.terms[n].is_zero()
    return CoGnmReport(module, n, k, cutoff, tuple(rows), exact)


def in_g_infinity(module, m, cutoff=DEFAULT_CUTOFF):
    """
    Membership in ``G_infinity(m)``, decided when the injective
    coresolution of ``M`` stops within the cutoff.

    :return: True, False, or ``None`` when undecided.
    :rtype: bool or None
    """
    report = is_gnm(module, cutoff + 1, m, cutoff)
    if report.failure is not None:
        return False
    if report.exact and report.holds:
        return True
    return None
