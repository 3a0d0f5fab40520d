""" Module for the battery of equivalent Auslander-type conditions. """
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .gnm import compare, is_gnm
from .sample import Sample, default_sample, explicit_sample, profile_sample
from ..quiver import (BoundQuiverAlgebra, matlis_dual, regular, projective,
                      injective)
from ..resolve import min_resolution, id
from ..utils import (DEFAULT_CUTOFF, HypothesisError, check_consistency,
                     check_non_negative)

# condition keys, each followed by '_op' for the opposite side
STATEMENTS = {
    'regular_module': 'the regular module is G(0)',
    'projectives': 'every projective module is G(0)',
    'envelope_shift': 'fd E^i(M) <= fd M + i',
    'envelope': 'fd E^0(M) <= fd M',
    'injective_resolutions': 'id P_i(E) <= i for injective right modules E',
    'cover_shift': 'id P_i(N) <= id N + i for right modules N',
    'cover': 'id P_0(N) <= id N for right modules N',
}


@dataclass(frozen=True)
class ConditionResult:
    """
    One condition evaluated on a sample.

    ``holds`` is True, False (a counterexample is in ``witness``) or
    ``None`` (undecided at the cutoff). ``exact`` marks a True verdict that
    holds for every module, not only the sampled ones.
    """
    key: str
    statement: str
    holds: Optional[bool]
    exact: bool = False
    checked: int = 0
    skipped: int = 0
    witness: str = ''

    def __str__(self):
        state = {True: 'true', False: 'false', None: 'inconclusive'}
        text = f'{self.key}: {state[self.holds]} ({self.statement})'
        if self.exact and self.holds:
            text += ' [exact]'
        if self.skipped:
            text += f' [{self.skipped} skipped]'
        if self.witness:
            text += f'; witness {self.witness}'
        return text


def combine(outcomes):
    """Fold row outcomes: any False wins, then any None, else True."""
    outcomes = list(outcomes)
    if any(o is False for o in outcomes):
        return False
    if any(o is None for o in outcomes):
        return None
    return True


def _gnm_condition(key, modules, depth, cutoff):
    exact, witness, outcomes = True, '', []
    for module in modules:
        report = is_gnm(module, depth, 0, cutoff)
        if report.failure is not None:
            outcomes.append(False)
            row = report.failure
            witness = witness or (f'{module.name}: fd E^{row.index} = '
                                  f'{row.value} > {row.bound}')
        else:
            outcomes.append(True if report.holds else None)
        exact = exact and report.exact
    return ConditionResult(key, STATEMENTS[key.replace('_op', '')],
                           combine(outcomes), exact, len(modules), 0,
                           witness)


def _injective_resolutions(key, algebra, depth, cutoff):
    """Projective resolutions of the injective modules of ``algebra``."""
    exact, witness, outcomes = True, '', []
    for v in algebra.vertices:
        module = injective(algebra, v)
        cx = min_resolution(module, depth)
        for i in range(depth):
            ok = compare(id(cx.terms[i], cutoff).value, i, cutoff)
            outcomes.append(ok)
            if ok is False and not witness:
                witness = f'{module.name}: id P_{i} > {i}'
        exact = exact and cx.terms[depth].is_zero()
    return ConditionResult(key, STATEMENTS[key.replace('_op', '')],
                           combine(outcomes), exact, algebra.vertex_count, 0,
                           witness)


def _profile_condition(key, profiles, first, rows, depth, cutoff):
    """
    ``rows(profile)[i] <= first(profile) + i`` over the profiles whose
    ``first`` dimension is finite, for ``i < depth``.
    """
    outcomes, skipped, witness = [], 0, ''
    for profile in profiles:
        base = first(profile)
        if base is None:
            skipped += 1
            continue
        for i in range(depth):
            ok = compare(rows(profile)[i], base + i, cutoff)
            outcomes.append(ok)
            if ok is False and not witness:
                witness = (f'{profile.name}: degree {i} has dimension '
                           f'{rows(profile)[i]} > {base + i}')
    checked = len(profiles) - skipped
    return ConditionResult(key, STATEMENTS[key.replace('_op', '')],
                           combine(outcomes), False, checked, skipped,
                           witness)


def _side(algebra, left, right, depth, cutoff, suffix):
    """The seven conditions of one side; ``left`` are modules of
    ``algebra`` and ``right`` of its opposite."""
    op = algebra.opposite()
    return [
        _gnm_condition('regular_module' + suffix, [regular(algebra)], depth,
                       cutoff),
        _gnm_condition('projectives' + suffix,
                       [projective(algebra, v) for v in algebra.vertices],
                       depth, cutoff),
        _profile_condition('envelope_shift' + suffix, left,
                           lambda p: p.fd, lambda p: p.fd_cores, depth,
                           cutoff),
        _profile_condition('envelope' + suffix, left, lambda p: p.fd,
                           lambda p: p.fd_cores, 1, cutoff),
        _injective_resolutions('injective_resolutions' + suffix, op, depth,
                               cutoff),
        _profile_condition('cover_shift' + suffix, right, lambda p: p.id,
                           lambda p: p.id_res, depth, cutoff),
        _profile_condition('cover' + suffix, right, lambda p: p.id,
                           lambda p: p.id_res, 1, cutoff),
    ]


@dataclass(frozen=True)
class BatteryReport:
    """The conditions on both sides and the consistency alarms."""
    algebra: BoundQuiverAlgebra
    n: int
    cutoff: int
    sample: Sample = field(repr=False)
    conditions: Tuple[ConditionResult, ...]
    alarms: List[str] = field(default_factory=list)

    def condition(self, key):
        """Look a condition up by key."""
        return next(c for c in self.conditions if c.key == key)

    def values(self):
        """Mapping from condition key to its truth value."""
        return {c.key: c.holds for c in self.conditions}

    def __str__(self):
        lines = [f'sample: {self.sample.description}']
        lines.extend(str(c) for c in self.conditions)
        lines.extend(f'ALARM: {a}' for a in self.alarms)
        return '\n'.join(lines)


def consistency_alarms(conditions):
    """
    Over an Artin algebra all the conditions are equivalent: one that holds
    for every module contradicts any counterexample to another.

    :rtype: list(str)
    """
    global_true = [c for c in conditions if c.holds and c.exact]
    false = [c for c in conditions if c.holds is False]
    return [
        f'{t.key} holds for every module but {f.key} fails ({f.witness})'
        for t in global_true[:1] for f in false
    ]


def auslander_battery(algebra,
                      n,
                      cutoff=DEFAULT_CUTOFF,
                      sample=None,
                      jobs=1):
    """
    Evaluate the Auslander-type conditions, and their opposite versions,
    on a sample: conditions on the regular module, on projectives and on
    injectives are checked exactly to depth ``n``; conditions quantified
    over all modules are checked on ``sample`` and on the duals of its
    members.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param int n: the depth.
    :param int cutoff: the cutoff of every dimension.
    :param Sample sample: the left modules; :func:`default_sample` if
        omitted.
    :param int jobs: worker processes for the sample profiles.
    :rtype: BatteryReport
    """
    check_consistency(algebra, BoundQuiverAlgebra)
    check_non_negative(n, 'n')
    if sample is None:
        sample = default_sample(algebra)
    elif not isinstance(sample, Sample):
        sample = explicit_sample(algebra, sample)
    if not len(sample):
        raise HypothesisError('The battery needs a non-empty sample.')
    op = algebra.opposite()
    duals = explicit_sample(op, [matlis_dual(m) for m in sample],
                            f'duals of: {sample.description}')
    left = profile_sample(sample, n, cutoff, jobs)
    right = profile_sample(duals, n, cutoff, jobs)
    conditions = (_side(algebra, left, right, n, cutoff, '') +
                  _side(op, right, left, n, cutoff, '_op'))
    return BatteryReport(algebra, n, cutoff, sample, tuple(conditions),
                         consistency_alarms(conditions))
