""" Module for falsifiable checks of the structural statements. """
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .battery import combine
from .gnm import compare, is_gnm, in_g_infinity
from .ring import ring_auslander
from .sample import Sample, default_sample, explicit_sample
from ..quiver import (BoundQuiverAlgebra, matlis_dual, regular, projective,
                      injective, kernel, random_morphism, zero_module,
                      Morphism)
from ..resolve import (min_coresolution, min_resolution, fd, id, syzygy,
                       findim_scan)
from ..utils import (DEFAULT_CUTOFF, DEFAULT_SEED, check_consistency,
                     default_rng)


@dataclass(frozen=True)
class CheckResult:
    """
    The outcome of one structural statement instantiated on a sample.
    ``holds is False`` contradicts a known implication and is therefore a
    defect; ``None`` means the hypotheses were never met or the cutoff
    left the check undecided.
    """
    name: str
    holds: Optional[bool]
    witness: str = ''
    detail: str = ''

    def __str__(self):
        state = {True: 'ok', False: 'FALSIFIED', None: 'undecided'}
        text = f'{self.name}: {state[self.holds]}'
        if self.detail:
            text += f' ({self.detail})'
        if self.witness:
            text += f'; witness {self.witness}'
        return text


def _finite(values):
    return [v for v in values if v is not None]


def _result(name, outcomes, witness, detail):
    if not outcomes:
        return CheckResult(name, None, '', detail or 'hypotheses never met')
    return CheckResult(name, combine(outcomes), witness, detail)


def _max_shift(values):
    """``max(value_i - i)`` clipped at 0; ``None`` if some value exceeds."""
    if any(v is None for v in values):
        return None
    return max([0] + [v - i for i, v in enumerate(values)])


def envelope_propagation(sample, depth, cutoff=DEFAULT_CUTOFF):
    """
    If ``fd E^0(K) <= fd K`` along the cosyzygies ``K`` of ``M``, then
    ``fd E^i(M) <= fd M + i``.

    :rtype: CheckResult
    """
    outcomes, witness = [], ''
    for module in sample:
        s = fd(module, cutoff).value
        if s is None:
            continue
        cores = min_coresolution(module, depth)
        stages = [module] + [cores.cokernel(j)[0] for j in range(depth - 1)]
        envelope = [fd(cores.terms[j], cutoff).value for j in range(depth)]
        hypothesis = []
        for j, stage in enumerate(stages):
            base = fd(stage, cutoff).value
            hypothesis.append(True if base is None else compare(
                envelope[j], base, cutoff))
        if combine(hypothesis) is not True:
            continue
        for i in range(depth):
            ok = compare(envelope[i], s + i, cutoff)
            outcomes.append(ok)
            if ok is False and not witness:
                witness = f'{module.name}: fd E^{i} = {envelope[i]}'
    return _result('envelope_propagation', outcomes, witness, '')


def injective_resolution_bound(algebra, depth, cutoff=DEFAULT_CUTOFF):
    """
    ``id P_i(E) <= fd E^i(A)`` over the opposite algebra for every
    indecomposable injective right module ``E``.

    :rtype: CheckResult
    """
    op = algebra.opposite()
    cores = min_coresolution(regular(algebra), depth)
    bounds = [fd(cores.terms[i], cutoff).value for i in range(depth)]
    outcomes, witness = [], ''
    for v in op.vertices:
        module = injective(op, v)
        res = min_resolution(module, depth)
        for i in range(depth):
            if bounds[i] is None:
                continue
            ok = compare(id(res.terms[i], cutoff).value, bounds[i], cutoff)
            outcomes.append(ok)
            if ok is False and not witness:
                witness = f'{module.name}: id P_{i} > fd E^{i}(A)'
    return _result('injective_resolution_bound', outcomes, witness,
                   f'bounds {bounds}')


def _cover_shift_check(name, right, m, depth, cutoff):
    outcomes, witness = [], ''
    for module in right:
        t = id(module, cutoff).value
        if t is None:
            continue
        res = min_resolution(module, depth)
        for i in range(depth):
            ok = compare(id(res.terms[i], cutoff).value, t + m + i, cutoff)
            outcomes.append(ok)
            if ok is False and not witness:
                witness = f'{module.name}: id P_{i} > {t + m + i}'
    return _result(name, outcomes, witness, f'shift m = {m}')


def regular_shift_bound(algebra, right, depth, cutoff=DEFAULT_CUTOFF):
    """
    With ``A`` in ``G(m)``: ``id P_i(N) <= id N + m + i`` for right
    modules ``N``. The shift ``m`` is read off the coresolution of ``A``
    far enough to cover every finite ``id N`` of the sample.

    :rtype: CheckResult
    """
    extra = max([0] + _finite(id(n, cutoff).value for n in right))
    cores = min_coresolution(regular(algebra), depth + extra)
    m = _max_shift(
        [fd(cores.terms[i], cutoff).value for i in range(depth + extra)])
    if m is None:
        return CheckResult('regular_shift_bound', None, '',
                           'the regular module has no finite shift')
    return _cover_shift_check('regular_shift_bound', right, m, depth, cutoff)


def injective_shift_bound(algebra, right, depth, cutoff=DEFAULT_CUTOFF):
    """
    If ``id P_i(E) <= m + i`` for the injective right modules, then
    ``id P_i(N) <= id N + m + i`` for every right module ``N``.

    :rtype: CheckResult
    """
    op = algebra.opposite()
    extra = max([0] + _finite(id(n, cutoff).value for n in right))
    shifts = []
    for v in op.vertices:
        res = min_resolution(injective(op, v), depth + extra)
        shifts.append(
            _max_shift([
                id(res.terms[i], cutoff).value
                for i in range(depth + extra)
            ]))
    if any(s is None for s in shifts):
        return CheckResult('injective_shift_bound', None, '',
                           'an injective has no finite shift')
    return _cover_shift_check('injective_shift_bound', right, max(shifts),
                              depth, cutoff)


def projective_shift(algebra, depth, cutoff=DEFAULT_CUTOFF):
    """
    The least ``m`` with every indecomposable projective in ``G_depth(m)``,
    or ``None`` when some flat dimension exceeds the cutoff.
    """
    shifts = []
    for v in algebra.vertices:
        cores = min_coresolution(projective(algebra, v), depth)
        shifts.append(
            _max_shift(
                [fd(cores.terms[i], cutoff).value for i in range(depth)]))
    return None if any(s is None for s in shifts) else max(shifts)


def projective_shift_bound(algebra, sample, depth, cutoff=DEFAULT_CUTOFF):
    """
    If every projective is ``G(m)``, then ``fd E^i(M) <= fd M + m + i``.

    :rtype: CheckResult
    """
    extra = max([0] + _finite(fd(m, cutoff).value for m in sample))
    m = projective_shift(algebra, depth + extra, cutoff)
    if m is None:
        return CheckResult('projective_shift_bound', None, '',
                           'a projective has no finite shift')
    outcomes, witness = [], ''
    for module in sample:
        s = fd(module, cutoff).value
        if s is None:
            continue
        cores = min_coresolution(module, depth)
        for i in range(depth):
            ok = compare(fd(cores.terms[i], cutoff).value, s + m + i, cutoff)
            outcomes.append(ok)
            if ok is False and not witness:
                witness = f'{module.name}: fd E^{i} > {s + m + i}'
    return _result('projective_shift_bound', outcomes, witness,
                   f'shift m = {m}')


def finite_fd_in_g(algebra, sample, depth, cutoff=DEFAULT_CUTOFF):
    """
    When the projectives are ``G(0)``, every ``M`` with ``fd M = s`` is
    ``G(s)``.

    :rtype: CheckResult
    """
    extra = max([0] + _finite(fd(m, cutoff).value for m in sample))
    if projective_shift(algebra, depth + extra, cutoff) != 0:
        return CheckResult('finite_fd_in_g', None, '',
                           'the Auslander condition fails or is undecided')
    outcomes, witness = [], ''
    for module in sample:
        s = fd(module, cutoff).value
        if s is None:
            continue
        report = is_gnm(module, depth, s, cutoff)
        outcomes.append(False if report.failure is not None else (
            True if report.holds else None))
        if report.failure is not None and not witness:
            witness = f'{module.name} not in G_{depth}({s})'
    return _result('finite_fd_in_g', outcomes, witness, '')


def kernel_closure(sample, depth, cutoff=DEFAULT_CUTOFF, trials=12,
                   seed=DEFAULT_SEED):
    """
    For ``0 -> X -> X0 -> X1`` with ``X0`` in ``G_n(s)`` and ``X1`` in
    ``G_{n-1}(s+1)``, ``X`` is in ``G_n(s)``. Instances are kernels of
    seeded random morphisms between sample members, plus ``X1 = 0``.

    :rtype: CheckResult
    """
    rng = default_rng(seed)
    modules = list(sample)
    instances = [(m, Morphism.zero(m, zero_module(m.algebra)))
                 for m in modules[:trials]]
    for _ in range(trials):
        a = modules[int(rng.integers(0, len(modules)))]
        b = modules[int(rng.integers(0, len(modules)))]
        instances.append((a, random_morphism(a, b, rng)))
    outcomes, witness = [], ''
    for x0, f in instances:
        x, _ = kernel(f)
        for s in (0, 1):
            if not (is_gnm(x0, depth, s, cutoff).holds and is_gnm(
                    f.target, depth - 1, s + 1, cutoff).holds):
                continue
            report = is_gnm(x, depth, s, cutoff)
            ok = False if report.failure is not None else (
                True if report.holds else None)
            outcomes.append(ok)
            if ok is False and not witness:
                witness = f'kernel of a map out of {x0.name}, s = {s}'
    return _result('kernel_closure', outcomes, witness,
                   f'{len(instances)} instances')


def _class_agreement(modules, s, cutoff):
    """``M in G_infinity(s)`` against ``pd M <= s``, decided members only."""
    outcomes, witness = [], ''
    for module in modules:
        member = in_g_infinity(module, s, cutoff)
        if member is None:
            continue
        small = fd(module, cutoff).at_most(s)
        if small is None:
            continue
        outcomes.append(member == small)
        if member != small and not witness:
            witness = f'{module.name} (s = {s})'
    return outcomes, witness


def class_equality(algebra, sample, cutoff=DEFAULT_CUTOFF, top=2):
    """
    Under the Auslander condition, ``G_infinity(0)`` equals the projectives
    (on the sample and its syzygies) only if ``G_infinity(s)`` equals the
    modules of flat dimension at most ``s`` for every ``s <= top``.

    :rtype: CheckResult
    """
    verdict = ring_auslander(algebra, cutoff + 1, cutoff)
    if not (verdict.holds and verdict.exact):
        return CheckResult('class_equality', None, '',
                           'requires the Auslander condition')
    closure = list(sample)
    for module in sample:
        for t in range(1, top + 1):
            omega, _ = syzygy(module, t)
            if not omega.is_zero():
                closure.append(omega.renamed(f'Omega^{t} {module.name}'))
    base, _ = _class_agreement(closure, 0, cutoff)
    if not all(base):
        return CheckResult('class_equality', None, '',
                           'G(0) differs from the projectives')
    outcomes, witness = [], ''
    for s in range(top + 1):
        found, w = _class_agreement(list(sample), s, cutoff)
        outcomes.extend(found)
        witness = witness or w
    return _result('class_equality', outcomes, witness, f's <= {top}')


def syzygy_bound(algebra, sample, cutoff=DEFAULT_CUTOFF, top=2):
    """
    If ``fd Omega^t M <= fd E^0(Omega^t M) + n`` then
    ``fd M <= fd E^0(A) + n + t``, with ``n`` the least value meeting the
    hypothesis.

    :rtype: CheckResult
    """
    hull = min_coresolution(regular(algebra), 0).terms[0]
    base = fd(hull, cutoff).value
    if base is None:
        return CheckResult('syzygy_bound', None, '',
                           'fd E^0(A) exceeds the cutoff')
    outcomes, witness = [], ''
    for module in sample:
        total = fd(module, cutoff).value
        if total is None:
            continue
        for t in range(1, top + 1):
            omega, _ = syzygy(module, t)
            omega_fd = fd(omega, cutoff).value
            envelope = fd(min_coresolution(omega, 0).terms[0], cutoff).value
            if omega_fd is None or envelope is None:
                continue
            n = max(0, omega_fd - envelope)
            ok = total <= base + n + t
            outcomes.append(ok)
            if not ok and not witness:
                witness = f'{module.name}, t = {t}'
    return _result('syzygy_bound', outcomes, witness, f'fd E^0(A) = {base}')


def findim_bound(algebra, sample, cutoff=DEFAULT_CUTOFF):
    """``id A`` bounds every finite projective dimension of the sample."""
    scan = findim_scan(algebra, list(sample), cutoff)
    return CheckResult('findim_bound', scan.consistent, '',
                       f'findim scan {scan.value}, id A = {scan.regular_id}')


def injective_dimension_bound(algebra, right, cutoff=DEFAULT_CUTOFF):
    """``id A`` bounds ``id N`` for right modules ``N`` of finite id."""
    ring = id(regular(algebra), cutoff).value
    if ring is None:
        return CheckResult('injective_dimension_bound', None, '',
                           'id A exceeds the cutoff')
    outcomes, witness = [], ''
    for module in right:
        value = id(module, cutoff).value
        if value is None:
            continue
        outcomes.append(value <= ring)
        if value > ring and not witness:
            witness = f'{module.name}: id {value} > {ring}'
    return _result('injective_dimension_bound', outcomes, witness,
                   f'id A = {ring}')


@dataclass(frozen=True)
class StructuralReport:
    """The bundle of structural checks; every falsification is an alarm."""
    algebra: BoundQuiverAlgebra
    checks: Tuple[CheckResult, ...]
    sample: Sample = field(repr=False)
    alarms: List[str] = field(default_factory=list)

    def check(self, name):
        """Look a check up by name."""
        return next(c for c in self.checks if c.name == name)

    def __str__(self):
        lines = [f'sample: {self.sample.description}']
        lines.extend(str(c) for c in self.checks)
        lines.extend(f'ALARM: {a}' for a in self.alarms)
        return '\n'.join(lines)


def structural_checks(algebra,
                      cutoff=DEFAULT_CUTOFF,
                      sample=None,
                      depth=3,
                      seed=DEFAULT_SEED):
    """
    Instantiate the structural statements about Auslander-type conditions
    on a sample of left modules and the duals of its members.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param int cutoff: the cutoff of every dimension.
    :param Sample sample: the left modules; the default sample if omitted.
    :param int depth: the number of degrees checked.
    :param int seed: the seed of the random instances.
    :rtype: StructuralReport
    """
    check_consistency(algebra, BoundQuiverAlgebra)
    if sample is None:
        sample = default_sample(algebra, seed=seed)
    elif not isinstance(sample, Sample):
        sample = explicit_sample(algebra, sample)
    right = [matlis_dual(m) for m in sample]
    checks = (
        envelope_propagation(sample, depth, cutoff),
        injective_resolution_bound(algebra, depth, cutoff),
        regular_shift_bound(algebra, right, depth, cutoff),
        injective_shift_bound(algebra, right, depth, cutoff),
        projective_shift_bound(algebra, sample, depth, cutoff),
        finite_fd_in_g(algebra, sample, depth, cutoff),
        kernel_closure(sample, depth, cutoff, seed=seed),
        class_equality(algebra, sample, cutoff),
        syzygy_bound(algebra, sample, cutoff),
        findim_bound(algebra, sample, cutoff),
        injective_dimension_bound(algebra, right, cutoff),
    )
    alarms = [f'{c.name} falsified: {c.witness}' for c in checks
              if c.holds is False]
    return StructuralReport(algebra, checks, sample, alarms)
