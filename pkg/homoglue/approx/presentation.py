""" Module for the injective-side and G-side approximation presentations. """
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple, Union

from ..auscond import (GnmReport, CoGnmReport, is_gnm, is_cognm,
                       ring_auslander, default_sample)
from ..glue import SubcatSpec, ProperResolution, iterate_glue
from ..quiver import (Morphism, Representation, ShortExactSequence,
                      LongExactSequence, Pushout, matlis_dual,
                      corestriction, factor_through_cokernel, regular,
                      zero_module, is_hom_epic)
from ..resolve import (AugmentedComplex, DimensionReport, horseshoe_tower,
                       min_coresolution, min_resolution, id, pd)
from ..resolve.complex import RESOLUTION
from ..utils import (DEFAULT_CUTOFF, HypothesisError, check_consistency,
                     check_non_negative)

LEFT = 'left_inj'
RIGHT = 'right_G'
COLEFT = 'left_coG'
KINDS = (LEFT, RIGHT, COLEFT)


@dataclass(frozen=True)
class FactorRow:
    """
    One test module of an :class:`ApproximationTest`. ``member`` says
    whether it lies in the approximating class (``None`` when the cutoff
    does not decide), ``factors`` whether every morphism factors through
    the presentation (``None`` for non-members).
    """
    module: str
    member: Optional[bool]
    factors: Optional[bool]


@dataclass(frozen=True)
class ApproximationTest:
    """The factorization test of a presentation against test modules."""
    kind: str
    rows: Tuple[FactorRow, ...]

    @property
    def members(self):
        return [row for row in self.rows if row.member]

    @property
    def holds(self):
        return all(row.factors for row in self.members)

    @property
    def failures(self):
        return [row.module for row in self.members if not row.factors]

    def __str__(self):
        state = 'ok' if self.holds else (
            f'FAILS for {", ".join(self.failures)}')
        return (f'approximation: {state} over {len(self.rows)} test modules '
                f'({len(self.members)} in the class)')


@dataclass(frozen=True)
class ApproxPresentation:
    """
    A short exact sequence presenting ``M`` by an approximation:

    * ``'left_inj'``: ``0 -> M -> I_i(M) -> G_i(M) -> 0``;
    * ``'right_G'``: ``0 -> I^i(M) -> G^i(M) -> M -> 0``;
    * ``'left_coG'``: ``0 -> M -> X -> Y -> 0``, the dual of a right
      presentation of ``D M`` over the opposite algebra.

    The certificates are recomputed from the sequence: ``bound`` is the
    injective dimension of the I-part (the projective dimension of ``Y``
    for ``'left_coG'``), which must be at most ``i + k``; ``classes``
    tests the G-part in ``G_i(k)`` (``X`` in the dual class).

    :ivar LadderMap ladder: the connecting maps to the presentation of
        index ``i - 1``, when attached.
    :ivar ApproximationTest approximation: the factorization test, run
        when ``k = 0`` and the algebra satisfies the Auslander condition.
    """
    kind: str
    module: Representation
    i: int
    k: int
    cutoff: int
    sequence: ShortExactSequence = field(repr=False)
    bound: DimensionReport = field(repr=False)
    classes: Union[GnmReport, CoGnmReport] = field(repr=False)
    ladder: Optional[object] = field(default=None, repr=False)
    approximation: Optional[ApproximationTest] = None
    alarms: List[str] = field(default_factory=list)

    @property
    def approximating(self):
        """The approximating object: ``I_i(M)``, ``G^i(M)`` or ``X``."""
        return self.sequence.middle

    @property
    def complement(self):
        """The outer term other than ``M``."""
        return self.sequence.left if self.kind == RIGHT else (
            self.sequence.right)

    @property
    def map(self):
        """The approximation ``M -> I_i(M)``, ``G^i(M) -> M`` or ``M -> X``."""
        return self.sequence.g if self.kind == RIGHT else self.sequence.f

    @property
    def bound_ok(self):
        return self.bound.at_most(self.i + self.k)

    @property
    def certified(self):
        """True if both certificates hold."""
        return self.bound_ok is True and self.classes.holds

    @property
    def holds(self):
        ladder_ok = self.ladder is None or self.ladder.valid
        approx_ok = self.approximation is None or self.approximation.holds
        return self.certified and ladder_ok and approx_ok

    def __str__(self):
        seq = self.sequence
        name = self.module.name or 'M'
        part = 'pd Y' if self.kind == COLEFT else 'id I-part'
        lines = [
            f'{self.kind} presentation of {name}, i={self.i}, k={self.k}',
            f'  0 -> {list(seq.left.dims)} -> {list(seq.middle.dims)} -> '
            f'{list(seq.right.dims)} -> 0',
            f'  {part}: {self.bound} <= {self.i + self.k}: '
            f'{_state(self.bound_ok)}',
            f'  class: {"holds" if self.classes.holds else "fails"}'
        ]
        if self.ladder is not None:
            lines.append(f'  {self.ladder}')
        if self.approximation is not None:
            lines.append(f'  {self.approximation}')
        lines.extend(f'ALARM: {a}' for a in self.alarms)
        return '\n'.join(lines)


def _state(value):
    return {True: 'ok', False: 'FAILS', None: 'undecided'}[value]


def ring_hypothesis(algebra, n, k, cutoff=DEFAULT_CUTOFF):
    """
    Check that the regular module is ``G_n(k)`` over the algebra and over
    its opposite.

    :return: the two reports.
    :rtype: tuple(GnmReport, GnmReport)
    :raises HypothesisError: naming the failing side when the hypothesis does
        not hold within the cutoff.
    """
    left = is_gnm(regular(algebra), n, k, cutoff)
    right = is_gnm(regular(algebra.opposite()), n, k, cutoff)
    for side, report in (('left', left), ('right', right)):
        if not report.holds:
            row = report.failure
            detail = ('undecided at the cutoff' if row is None else
                      f'fd E^{row.index} = {row.value} > {row.bound}')
            raise HypothesisError(f'The regular module is not G_{n}({k}) on '
                                  f'the {side}: {detail}; the presentation '
                                  f'is not guaranteed.')
    return left, right


def _check_indices(i, k):
    check_non_negative(i, 'i')
    check_non_negative(k, 'k')
    if i < 1:
        raise HypothesisError(f'The presentation index must be at least 1, '
                              f'got {i}.')


def _projective_resolution(module, length, spec):
    return ProperResolution.from_complex(min_resolution(module, length), spec)


def _left_sequence(module, i):
    """
    ``0 -> M -> I_i(M) -> G_i(M) -> 0``, the top row of the horseshoe tower
    over ``0 -> Omega^{-i} M -> E^i -> Omega^{-(i+1)} M -> 0``: the left
    column is ``E^0 -> ... -> E^{i-1}``, the right column is glued from
    the projective resolutions of ``E^1, ..., E^i`` along the coresolution.
    """
    algebra = module.algebra
    cores = min_coresolution(module, i)
    proj = SubcatSpec([regular(algebra)], 'proj')
    cosyzygies = [cores.cokernel(t) for t in range(i + 1)]
    first, first_projection = cosyzygies[0]
    into_first = factor_through_cokernel(cores.differentials[0],
                                         first_projection)
    _, onto_outer = cosyzygies[i]
    sequence = LongExactSequence([into_first] + cores.differentials[1:i] +
                                 [onto_outer])
    resolutions = [
        _projective_resolution(cores.terms[t], t - 1, proj)
        for t in range(i, 0, -1)
    ]
    resolutions.append(_projective_resolution(first, 0, proj))
    right = iterate_glue('last_res', sequence, resolutions).resolution
    inner, inner_projection = cosyzygies[i - 1]
    left = AugmentedComplex(
        RESOLUTION, inner, [cores.terms[i - 1 - l] for l in range(i)],
        [cores.differentials[i - l - 1] for l in range(1, i)],
        inner_projection)
    bottom = ShortExactSequence(
        factor_through_cokernel(cores.differentials[i - 1],
                                inner_projection), onto_outer)
    _, _, stages, inclusions = horseshoe_tower(bottom, left, right.complex)
    top, into_left = stages[-1], inclusions[-1][0]
    u = corestriction(cores.augmentation, into_left)
    return ShortExactSequence(top.f @ u, top.g)


def _right_sequence(module, i):
    """
    ``0 -> I^i(M) -> G^i(M) -> M -> 0`` with ``I^i(M) = I_i(Omega^1 M)``,
    by push-out of ``Omega^1 M -> P_0(M)`` along ``Omega^1 M -> I_i``.
    """
    res = min_resolution(module, 0)
    omega, inclusion = res.kernel(0)
    cover = res.augmentation
    if omega.is_zero():
        return ShortExactSequence(
            Morphism.zero(zero_module(module.algebra), cover.source), cover)
    inner = _left_sequence(omega, i)
    square = Pushout(inclusion, inner.f)
    onto = square.factor(cover, Morphism.zero(inner.middle, module))
    return ShortExactSequence(square.i2, onto)


def _certificates(kind, sequence, i, k, cutoff):
    if kind == LEFT:
        return id(sequence.middle, cutoff), is_gnm(sequence.right, i, k,
                                                   cutoff)
    if kind == RIGHT:
        return id(sequence.left, cutoff), is_gnm(sequence.middle, i, k,
                                                 cutoff)
    return pd(sequence.right, cutoff), is_cognm(sequence.middle, i, k,
                                                cutoff)


def _auslander_holds(algebra, cutoff):
    return ring_auslander(algebra, max(cutoff, 1), cutoff).holds is True


def _default_tests(algebra):
    return list(default_sample(algebra, size=0))


def _finish(kind, module, i, k, cutoff, sequence, test_modules):
    bound, classes = _certificates(kind, sequence, i, k, cutoff)
    presentation = ApproxPresentation(kind, module, i, k, cutoff, sequence,
                                      bound, classes)
    alarms = []
    if presentation.bound_ok is False:
        alarms.append(f'the {kind} presentation of index {i} violates its '
                      f'dimension bound {i + k}')
    if classes.failure is not None:
        alarms.append(f'the {kind} presentation of index {i} leaves its '
                      f'class at row {classes.failure.index}')
    approximation = None
    if k == 0 and _auslander_holds(module.algebra, cutoff):
        tests = (_default_tests(module.algebra)
                 if test_modules is None else list(test_modules))
        approximation = approximation_test(presentation, tests)
        if not approximation.holds:
            alarms.append(f'morphisms from/to '
                          f'{", ".join(approximation.failures)} do not '
                          f'factor through the {kind} presentation')
    return replace(presentation, approximation=approximation, alarms=alarms)


def left_presentation(module, i, k=0, cutoff=DEFAULT_CUTOFF,
                      test_modules=None):
    """
    The presentation ``0 -> M -> I_i(M) -> G_i(M) -> 0`` with
    ``id I_i(M) <= i + k`` and ``G_i(M)`` in ``G_i(k)``, for an algebra
    whose regular module is ``G_i(k)`` on both sides.

    The coresolution ``M -> E^0 -> ... -> E^i`` and the minimal projective
    resolutions of ``E^1, ..., E^i`` are glued along the cosyzygy
    sequences; the top row of the resulting horseshoe tower is the
    presentation. When ``k = 0`` and the algebra satisfies the Auslander
    condition, every morphism from ``M`` to a test module of injective
    dimension at most ``i`` is checked to extend along ``M -> I_i(M)``.

    :Example:
        >>> pres = left_presentation(simple(A, 1), 1)
        >>> pres.certified
        True

    :param Representation module: the module ``M``.
    :param int i: the index, at least 1.
    :param int k: the shift.
    :param int cutoff: the cutoff for every dimension.
    :param list test_modules: the test set; the structured part of the
        default sample when omitted.
    :rtype: ApproxPresentation
    :raises HypothesisError: if the ring hypothesis fails.
    """
    check_consistency(module, Representation)
    _check_indices(i, k)
    ring_hypothesis(module.algebra, i, k, cutoff)
    sequence = _left_sequence(module, i)
    return _finish(LEFT, module, i, k, cutoff, sequence, test_modules)


def right_presentation(module, i, k=0, cutoff=DEFAULT_CUTOFF,
                       test_modules=None):
    """
    The presentation ``0 -> I^i(M) -> G^i(M) -> M -> 0`` with
    ``id I^i(M) <= i + k`` and ``G^i(M)`` in ``G_i(k)``. A projective
    ``M`` gives ``I^i(M) = 0`` and ``G^i(M) = P_0(M)``.

    :rtype: ApproxPresentation
    :raises HypothesisError: if the ring hypothesis fails.
    """
    check_consistency(module, Representation)
    _check_indices(i, k)
    ring_hypothesis(module.algebra, i, k, cutoff)
    sequence = _right_sequence(module, i)
    return _finish(RIGHT, module, i, k, cutoff, sequence, test_modules)


def cognm_presentation(module, i, k=0, cutoff=DEFAULT_CUTOFF,
                       test_modules=None):
    """
    The sequence ``0 -> M -> X -> Y -> 0`` with ``X`` in the dual class
    (``id P_j(X) <= j + k`` for ``j < i``) and ``pd Y <= i + k``: the Matlis
    dual of the right presentation of ``D M`` over the opposite algebra.
    The dual class is recomputed on ``X`` directly and compared with
    ``G_i(k)`` of ``D X``; a disagreement is an alarm.

    :rtype: ApproxPresentation
    """
    check_consistency(module, Representation)
    _check_indices(i, k)
    ring_hypothesis(module.algebra, i, k, cutoff)
    dual = _right_sequence(matlis_dual(module), i).dual()
    first = Morphism(module, dual.f.target, dual.f.blocks, check=False)
    sequence = ShortExactSequence(first, dual.g, check=False)
    presentation = _finish(COLEFT, module, i, k, cutoff, sequence,
                           test_modules)
    oracle = is_gnm(matlis_dual(sequence.middle), i, k, cutoff)
    if oracle.holds != presentation.classes.holds:
        alarms = presentation.alarms + [
            'the dual class of X disagrees with G_i(k) of D X'
        ]
        presentation = replace(presentation, alarms=alarms)
    return presentation


def _member(presentation, module):
    i, cutoff = presentation.i, presentation.cutoff
    if presentation.kind == LEFT:
        return id(module, cutoff).at_most(i)
    if presentation.kind == RIGHT:
        report = is_gnm(module, i, 0, cutoff)
    else:
        report = is_cognm(module, i, 0, cutoff)
    if report.holds:
        return True
    return False if report.failure is not None else None


def approximation_test(presentation, test_modules):
    """
    Test the approximation property against ``test_modules``:

    * left presentations: ``Hom(I, T) -> Hom(M, T)`` is onto for every
      ``T`` with ``id T <= i`` (for ``'left_coG'``, ``T`` in the dual class
      with ``k = 0``);
    * right presentations: ``Hom(T, G) -> Hom(T, M)`` is onto for every
      ``T`` in ``G_i(0)``.

    :param ApproxPresentation presentation: the presentation.
    :param list(Representation) test_modules: the test set.
    :rtype: ApproximationTest
    """
    check_consistency(presentation, ApproxPresentation)
    check_consistency(list(test_modules), Representation)
    rows = []
    for j, module in enumerate(test_modules):
        member = _member(presentation, module)
        factors = None
        if member:
            if presentation.kind == RIGHT:
                factors = is_hom_epic(module, presentation.map)
            else:
                factors = is_hom_epic(module, presentation.map,
                                      contravariant=True)
        rows.append(FactorRow(module.name or f'T{j}', member, factors))
    return ApproximationTest(presentation.kind, tuple(rows))
