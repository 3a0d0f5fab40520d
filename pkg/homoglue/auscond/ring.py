""" Module for the ring-level Auslander condition and global dimension. """
from dataclasses import dataclass, field
from typing import List

from .gnm import GnmReport, is_gnm
from ..quiver import BoundQuiverAlgebra, regular, simple
from ..resolve import DimensionReport, pd, id
from ..utils import (DEFAULT_CUTOFF, HypothesisError, check_consistency,
                     check_non_negative)

NONE = 'none'


def gldim(algebra, cutoff=DEFAULT_CUTOFF):
    """
    Global dimension, the largest projective dimension of a simple module.
    The witness is the resolution of a simple of largest dimension.

    :rtype: DimensionReport
    """
    check_consistency(algebra, BoundQuiverAlgebra)
    reports = [pd(simple(algebra, v), cutoff) for v in algebra.vertices]
    worst = None
    for report in reports:
        if report.value is None:
            worst = report
            break
        if worst is None or report.value > worst.value:
            worst = report
    return DimensionReport('gldim', worst.value, cutoff, worst.witness,
                           worst.note)


@dataclass(frozen=True)
class RingVerdict:
    """
    The Auslander condition of the regular module on both sides, to depth
    ``n``, with the resulting classification:

    * ``'none'`` when it fails;
    * ``'auslander(n)'`` when it holds to depth ``n`` only;
    * ``'gorenstein_candidate(d)'`` when moreover ``id A = d`` on both
      sides;
    * ``'regular(d)'`` when moreover ``gldim A = d``.

    A disagreement between the two sides is recorded in ``alarms``; the
    condition is left-right symmetric, so it signals a defect.
    """
    algebra: BoundQuiverAlgebra
    n: int
    cutoff: int
    left: GnmReport = field(repr=False)
    right: GnmReport = field(repr=False)
    regular_id: DimensionReport = field(repr=False)
    opposite_id: DimensionReport = field(repr=False)
    global_dimension: DimensionReport = field(repr=False)
    alarms: List[str] = field(default_factory=list)

    @property
    def left_holds(self):
        return self.left.holds

    @property
    def right_holds(self):
        return self.right.holds

    @property
    def holds(self):
        """True, False, or ``None`` when the cutoff decides neither."""
        if self.left.holds and self.right.holds:
            return True
        if self.left.failure is not None or self.right.failure is not None:
            return False
        return None

    @property
    def exact(self):
        """True if the verdict also decides the full Auslander condition."""
        return self.left.exact and self.right.exact

    @property
    def classification(self):
        if not self.holds:
            return NONE
        if not self.exact:
            return f'auslander({self.n})'
        if self.global_dimension.is_finite:
            return f'regular({self.global_dimension.value})'
        if self.regular_id.is_finite and self.opposite_id.is_finite:
            return f'gorenstein_candidate({self.regular_id.value})'
        return f'auslander({self.n})'

    def __str__(self):
        lines = [f'Auslander condition to depth {self.n}: '
                 f'left {_state(self.left)}, right {_state(self.right)}',
                 f'classification: {self.classification}']
        failure = self.left.failure
        if failure is not None:
            lines.append(f'fails at i={failure.index}: fd E^{failure.index}'
                         f'(R)={failure.value}')
        lines.extend(f'ALARM: {a}' for a in self.alarms)
        return '\n'.join(lines)


def _state(report):
    if report.holds:
        return 'holds'
    return 'fails' if report.failure is not None else 'inconclusive'


def ring_auslander(algebra, n, cutoff=DEFAULT_CUTOFF):
    """
    Check that the regular module is ``G_n(0)`` over the algebra and over
    its opposite.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param int n: the depth, at least 1.
    :param int cutoff: the cutoff for every dimension.
    :rtype: RingVerdict
    """
    check_consistency(algebra, BoundQuiverAlgebra)
    check_non_negative(n, 'n')
    if n < 1:
        raise HypothesisError('The depth of the Auslander condition must '
                              'be at least 1.')
    op = algebra.opposite()
    left = is_gnm(regular(algebra), n, 0, cutoff)
    right = is_gnm(regular(op), n, 0, cutoff)
    alarms = []
    decided = (left.holds or left.failure is not None,
               right.holds or right.failure is not None)
    if all(decided) and left.holds != right.holds:
        alarms.append(f'left ({left.holds}) and right ({right.holds}) '
                      f'Auslander conditions disagree at depth {n}')
    return RingVerdict(algebra, n, cutoff, left, right,
                       id(regular(algebra), cutoff), id(regular(op), cutoff),
                       gldim(algebra, cutoff), alarms)
