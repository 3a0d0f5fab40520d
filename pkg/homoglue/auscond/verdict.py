""" Module for the Gorenstein and regular verdicts. """
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .battery import combine
from .gnm import compare
from .ring import RingVerdict, gldim, ring_auslander
from .sample import Sample, default_sample, explicit_sample, profile_sample
from .structural import CheckResult, syzygy_bound
from ..quiver import BoundQuiverAlgebra, matlis_dual, regular
from ..resolve import DimensionReport, id
from ..utils import DEFAULT_CUTOFF, HypothesisError, check_consistency

GORENSTEIN = 'gorenstein'
REGULAR = 'regular'


@dataclass(frozen=True)
class InequalityRow:
    """
    One instance of ``d(T) <= d(X) <= d(T) + n - 1`` where ``T`` is the
    injective envelope (left modules, ``d = fd``) or the projective cover
    (right modules, ``d = id``) of ``X``.
    """
    module: str
    side: str
    term: Optional[int]
    value: Optional[int]
    ok: Optional[bool]

    def __str__(self):
        state = {True: 'ok', False: 'FAILS', None: 'undecided'}[self.ok]
        return (f'{self.side} {self.module}: term {_show(self.term)}, '
                f'module {_show(self.value)}: {state}')


def _show(value):
    return 'exceeds' if value is None else str(value)


def _at_most(value, bound, cutoff):
    """``value <= bound`` where ``None`` stands for a dimension beyond the
    cutoff, possibly infinite."""
    if bound is None:
        return True if value is not None else None
    return compare(value, bound, cutoff)


def _row(name, side, term, value, n, cutoff, finite_only):
    if finite_only and value is None:
        return None
    lower = _at_most(term, value, cutoff)
    upper = _at_most(value, None if term is None else term + n - 1, cutoff)
    return InequalityRow(name, side, term, value, combine([lower, upper]))


@dataclass(frozen=True)
class VerdictReport:
    """
    The ring-level condition against its module-level characterization.

    ``condition`` is the ring-level statement (the Auslander condition with
    ``id A <= n``, respectively ``gldim A <= n``); ``inequalities`` is the
    two-sided bound on the sample. The two are equivalent, so an exact
    ``condition`` contradicted by a failing row is an alarm.
    """
    kind: str
    algebra: BoundQuiverAlgebra
    n: int
    cutoff: int
    auslander: RingVerdict = field(repr=False)
    bound: DimensionReport
    condition: Optional[bool]
    rows: Tuple[InequalityRow, ...] = field(repr=False)
    checks: Tuple[CheckResult, ...] = field(repr=False)
    sample: Sample = field(repr=False)
    alarms: List[str] = field(default_factory=list)

    @property
    def inequalities(self):
        """The fold of the sample rows."""
        return combine(row.ok for row in self.rows)

    @property
    def holds(self):
        return self.condition

    def failures(self):
        return [row for row in self.rows if row.ok is False]

    def __str__(self):
        state = {True: 'yes', False: 'no', None: 'inconclusive'}
        label = 'id A' if self.kind == GORENSTEIN else 'gldim A'
        lines = [
            f'{self.kind} verdict, n = {self.n}: {state[self.condition]}',
            f'Auslander condition: {state[self.auslander.holds]}, '
            f'{label} = {self.bound}',
            f'two-sided inequality on {len(self.rows)} rows: '
            f'{state[self.inequalities]}'
        ]
        lines.extend(f'  {row}' for row in self.failures())
        lines.extend(str(c) for c in self.checks)
        lines.extend(f'ALARM: {a}' for a in self.alarms)
        return '\n'.join(lines)


def _verdict(kind, algebra, n, cutoff, sample, jobs):
    check_consistency(algebra, BoundQuiverAlgebra)
    if n < 1:
        raise HypothesisError(f'The {kind} verdict needs n >= 1, got {n}.')
    if sample is None:
        sample = default_sample(algebra)
    elif not isinstance(sample, Sample):
        sample = explicit_sample(algebra, sample)
    op = algebra.opposite()
    duals = explicit_sample(op, [matlis_dual(m) for m in sample],
                            f'duals of: {sample.description}')
    auslander = ring_auslander(algebra, n + 1, cutoff)
    if kind == GORENSTEIN:
        bound = id(regular(algebra), cutoff)
    else:
        bound = gldim(algebra, cutoff)
    condition = combine([auslander.holds, bound.at_most(n)])
    finite_only = kind == GORENSTEIN
    rows = []
    for p in profile_sample(sample, 1, cutoff, jobs):
        rows.append(_row(p.name, 'left', p.fd_cores[0], p.fd, n, cutoff,
                         finite_only))
    for p in profile_sample(duals, 1, cutoff, jobs):
        rows.append(_row(p.name, 'right', p.id_res[0], p.id, n, cutoff,
                         finite_only))
    rows = tuple(r for r in rows if r is not None)
    checks = ()
    if kind == GORENSTEIN:
        checks = (syzygy_bound(algebra, sample, cutoff),)

    alarms = []
    if condition and auslander.exact:
        alarms.extend(f'{kind} with n = {n} but the inequality fails on '
                      f'{row.side} module {row.module}'
                      for row in rows if row.ok is False)
    if kind == GORENSTEIN:
        opposite = auslander.opposite_id
        if (bound.is_finite and opposite.is_finite
                and bound.value != opposite.value):
            alarms.append(f'id A = {bound.value} but id of the opposite '
                          f'regular module = {opposite.value}')
    alarms.extend(f'{c.name} falsified: {c.witness}' for c in checks
                  if c.holds is False)
    return VerdictReport(kind, algebra, n, cutoff, auslander, bound,
                         condition, rows, checks, sample, alarms)


def gorenstein_verdict(algebra, n, cutoff=DEFAULT_CUTOFF, sample=None,
                       jobs=1):
    """
    Decide whether the algebra satisfies the Auslander condition with
    ``id A <= n``, and check on the sample the equivalent statement
    ``fd E^0(M) <= fd M <= fd E^0(M) + n - 1`` for left modules of finite
    flat dimension, together with its right-module mirror for the
    projective cover and injective dimension.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param int n: the bound, at least 1.
    :param int cutoff: the cutoff of every dimension.
    :param Sample sample: the left modules; the default sample if omitted.
    :param int jobs: worker processes for the sample profiles.
    :rtype: VerdictReport

    :Example:
        >>> from homoglue.fixtures import fixture
        >>> gorenstein_verdict(fixture('kA2').algebra, 1).holds
        True
    """
    return _verdict(GORENSTEIN, algebra, n, cutoff, sample, jobs)


def regular_verdict(algebra, n, cutoff=DEFAULT_CUTOFF, sample=None, jobs=1):
    """
    As :func:`gorenstein_verdict` with ``gldim A <= n`` in place of
    ``id A <= n``; the inequality is checked on every sample member, a
    dimension beyond the cutoff counting as unbounded.

    :rtype: VerdictReport
    """
    return _verdict(REGULAR, algebra, n, cutoff, sample, jobs)
