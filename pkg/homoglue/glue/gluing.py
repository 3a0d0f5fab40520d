""" Module for gluing proper resolutions along short exact sequences. """
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .proper import ProperResolution
from ..quiver import (Morphism, ShortExactSequence, LongExactSequence,
                      Pullback, kernel, corestriction, is_hom_epic)
from ..resolve import AugmentedComplex, horseshoe_tower, ext
from ..resolve.complex import RESOLUTION
from ..utils import HypothesisError, check_consistency

PROPER = 'proper'
STRONG = 'strong'


@dataclass(frozen=True)
class GlueResult:
    """
    The output of a gluing.

    :ivar ProperResolution resolution: the glued (co)resolution.
    :ivar ShortExactSequence bridge: the sequence relating the new first
        term to the inputs.
    :ivar tuple witnesses: the short exact sequences of stage kernels
        built on the way.
    :ivar bool predicted_strong: what the gluing statements predict for
        :attr:`ProperResolution.strong` given the inputs.
    :ivar bool predicted_proper: the same for
        :attr:`ProperResolution.proper`.
    :ivar dict preconditions: the checked hypotheses by name.
    :ivar tuple steps: the single gluings of an iterated gluing.
    """
    resolution: ProperResolution
    bridge: Optional[ShortExactSequence]
    witnesses: tuple
    predicted_strong: bool
    predicted_proper: bool
    preconditions: dict = field(default_factory=dict)
    steps: Tuple['GlueResult', ...] = ()

    def consistent(self):
        """
        False if a prediction is contradicted by the computed flags of the
        glued resolution.
        """
        res = self.resolution
        if self.predicted_strong and not res.strong:
            return False
        if self.predicted_proper and not res.proper:
            return False
        return True

    def dual(self, module):
        """The dual result, resolving ``module``; single gluings only."""
        return GlueResult(self.resolution.dual().rebased(module),
                          None if self.bridge is None else self.bridge.dual(),
                          tuple(w.dual() for w in self.witnesses),
                          self.predicted_strong, self.predicted_proper,
                          dict(self.preconditions))


class GluingInterface(metaclass=ABCMeta):
    """
    The abstract gluing. A gluing takes a short exact sequence
    ``0 -> A -> B -> C -> 0``, a (co)resolution of the middle term and one
    of an outer term, and produces a (co)resolution of the third term.

    :cvar str resolves: ``'left'`` or ``'right'``, the term of the
        sequence that is resolved.
    """
    resolves = None

    @abstractmethod
    def glue(self, ses, res0, res1, require=None):
        """
        Glue the two resolutions.

        :param ShortExactSequence ses: the sequence.
        :param ProperResolution res0: the (co)resolution of the middle term.
        :param ProperResolution res1: the (co)resolution of the outer term.
        :param str require: ``None``, ``'proper'`` or ``'strong'``; the
            hypotheses on ``ses`` that must hold.
        :rtype: GlueResult
        """
        pass

    def __call__(self, ses, res0, res1, require=None):
        return self.glue(ses, res0, res1, require)

    @staticmethod
    def _check_inputs(ses, res0, res1, outer, resolution=True):
        check_consistency(ses, ShortExactSequence)
        check_consistency([res0, res1], ProperResolution)
        for res in (res0, res1):
            if res.is_resolution != resolution:
                kind = 'resolutions' if resolution else 'coresolutions'
                raise ValueError(f'This gluing takes {kind}.')
        if res0.module != ses.middle:
            raise ValueError('The first resolution does not resolve the '
                             'middle term of the sequence.')
        if res1.module != outer:
            raise ValueError('The second resolution does not resolve the '
                             'outer term of the sequence.')


class FirstTermGluing(GluingInterface):
    """
    Resolve ``X`` in ``0 -> X -> X^0 -> X^1 -> 0``: pull the sequence back
    along the augmentation ``C^1_0 -> X^1`` to ``W``, resolve ``W`` by a
    horseshoe tower over ``0 -> Ker -> W -> X^0 -> 0`` and cut out the
    first term ``C = Ker(T_0 -> C^1_0)``. Term ``i >= 1`` is
    ``C^1_{i+1} + C^0_i``.
    """
    resolves = 'left'

    def glue(self, ses, res0, res1, require=None):
        self._check_inputs(ses, res0, res1, ses.right)
        if res1.length < 1:
            raise HypothesisError('The resolution of the right term needs '
                                  'length at least 1.')
        if not res1.proper:
            raise HypothesisError('The resolution of the right term is not '
                                  'Hom-exact for the subcategory.')
        eps1 = res1.complex.augmentation
        square = Pullback(ses.g, eps1)
        shifted, inclusion = res1.complex.shift()
        into_w = square.factor(Morphism.zero(shifted.module, ses.middle),
                               inclusion)
        upper = ShortExactSequence(into_w, square.p1)
        middle, _, stages, _ = horseshoe_tower(upper, shifted, res0.complex)

        onto = square.p2 @ middle.augmentation
        first, first_inclusion = kernel(onto)
        bridge = ShortExactSequence(first_inclusion, onto)
        x_into_w = square.factor(ses.f, Morphism.zero(ses.left, eps1.source))
        augmentation = corestriction(middle.augmentation @ first_inclusion,
                                     x_into_w)
        differentials = list(middle.differentials)
        if differentials:
            differentials[0] = corestriction(differentials[0],
                                             first_inclusion)
        cx = AugmentedComplex(RESOLUTION, ses.left,
                              [first] + middle.terms[1:], differentials,
                              augmentation)
        return GlueResult(
            ProperResolution(cx, res0.spec, [upper] + stages), bridge,
            tuple([upper] + stages), res0.strong and res1.strong,
            res0.proper and res1.proper, {'right_resolution_proper': True})


class LastTermGluing(GluingInterface):
    """
    Resolve ``X`` in ``0 -> X_1 -> X_0 -> X -> 0``: the first term is
    ``C^0_0`` with augmentation ``g e^0``; its kernel sits in
    ``0 -> K^1_0 -> K -> X_1 -> 0``, resolved by a horseshoe tower. Term
    ``i >= 1`` is ``C^0_i + C^1_{i-1}``.
    """
    resolves = 'right'

    @staticmethod
    def preconditions(ses, spec):
        """
        The Hom-exactness of ``ses`` for every generator and the vanishing
        of ``Ext^1(G, X_1)``, each with the first offending generator.

        :rtype: dict
        """
        found = {}
        hom = [g for g in spec.generators if not is_hom_epic(g, ses.g)]
        found['hom_exact'] = not hom
        found['hom_exact_offender'] = hom[0].name if hom else ''
        extension = [g for g in spec.generators if ext(g, ses.left, 1)]
        found['strongly_hom_exact'] = found['hom_exact'] and not extension
        found['strongly_hom_exact_offender'] = (extension[0].name
                                                if extension else '')
        return found

    def glue(self, ses, res0, res1, require=None):
        self._check_inputs(ses, res0, res1, ses.left)
        if require not in (None, PROPER, STRONG):
            raise ValueError(f'Unknown requirement {require!r}.')
        found = self.preconditions(ses, res0.spec)
        if require == PROPER and not found['hom_exact']:
            raise HypothesisError(f'The sequence is not Hom-exact for the '
                                  f'generator {found["hom_exact_offender"]}.')
        if require == STRONG and not found['strongly_hom_exact']:
            offender = (found['strongly_hom_exact_offender']
                        or found['hom_exact_offender'])
            raise HypothesisError(f'The sequence is not strongly Hom-exact '
                                  f'for the generator {offender}.')

        eps0 = res0.complex.augmentation
        augmentation = ses.g @ eps0
        strong = res0.strong and res1.strong and found['strongly_hom_exact']
        proper = res0.proper and res1.proper and found['hom_exact']
        if res0.length == 0:
            cx = AugmentedComplex(RESOLUTION, ses.right, res0.terms, [],
                                  augmentation)
            return GlueResult(ProperResolution(cx, res0.spec), None, (),
                              strong, proper, found)
        _, k_inclusion = kernel(augmentation)
        shifted, inclusion = res0.complex.shift()
        lower = ShortExactSequence(corestriction(inclusion, k_inclusion),
                                   corestriction(eps0 @ k_inclusion, ses.f))
        middle, _, stages, _ = horseshoe_tower(lower, shifted, res1.complex)
        cx = AugmentedComplex(RESOLUTION, ses.right,
                              [res0.terms[0]] + middle.terms,
                              [k_inclusion @ middle.augmentation] +
                              middle.differentials, augmentation)
        return GlueResult(
            ProperResolution(cx, res0.spec, [lower] + stages), lower,
            tuple([lower] + stages), strong, proper, found)


class DualGluing(GluingInterface):
    """
    The gluing of coresolutions obtained from ``inner`` through the duality
    ``D``, which exchanges the two ends of every sequence.
    """

    def __init__(self, inner):
        check_consistency(inner, GluingInterface)
        self.inner = inner
        self.resolves = 'right' if inner.resolves == 'left' else 'left'

    def glue(self, ses, res0, res1, require=None):
        outer = ses.left if self.resolves == 'right' else ses.right
        self._check_inputs(ses, res0, res1, outer, resolution=False)
        result = self.inner.glue(ses.dual(), res0.dual(), res1.dual(),
                                 require)
        target = ses.right if self.resolves == 'right' else ses.left
        return result.dual(target)


def glue_first(ses, res0, res1):
    """
    Glue proper resolutions of ``X^0`` and ``X^1`` into one of ``X`` for
    ``0 -> X -> X^0 -> X^1 -> 0``. The resolution of ``X^1`` must be
    Hom-exact for the subcategory; the bridge is
    ``0 -> C -> C^1_1 + C^0_0 -> C^1_0 -> 0``. The output has length
    ``min(len res0, len res1 - 1)``.

    :rtype: GlueResult
    """
    return FirstTermGluing().glue(ses, res0, res1)


def glue_last_res(ses, res0, res1, require=None):
    """
    Glue proper resolutions of ``X_0`` and ``X_1`` into one of ``X`` for
    ``0 -> X_1 -> X_0 -> X -> 0``, of length
    ``min(len res0, len res1 + 1)``. A resolution of ``X_0`` of length 0
    gives the one-term resolution ``C^0_0 -> X``.

    :param str require: ``'proper'`` or ``'strong'`` to demand that the
        sequence be (strongly) Hom-exact for the subcategory.
    :rtype: GlueResult
    :raises HypothesisError: naming the offending generator when a required
        hypothesis fails.
    """
    return LastTermGluing().glue(ses, res0, res1, require)


def glue_last_cores(ses, cores0, cores1):
    """
    Glue coproper coresolutions of ``Y_0`` and ``Y_1`` into one of ``Y`` for
    ``0 -> Y_1 -> Y_0 -> Y -> 0``; dual to :func:`glue_first`.

    :rtype: GlueResult
    """
    return DualGluing(FirstTermGluing()).glue(ses, cores0, cores1)


def glue_first_cores(ses, cores0, cores1, require=None):
    """
    Glue coproper coresolutions of ``Y^0`` and ``Y^1`` into one of ``Y`` for
    ``0 -> Y -> Y^0 -> Y^1 -> 0``; dual to :func:`glue_last_res`.

    :rtype: GlueResult
    """
    return DualGluing(LastTermGluing()).glue(ses, cores0, cores1, require)


GLUINGS = {
    'first': glue_first,
    'last_res': glue_last_res,
    'last_cores': glue_last_cores,
    'first_cores': glue_first_cores,
}


def _relabel(res, resolved, u):
    """
    Turn ``res`` into a (co)resolution of ``resolved`` along the
    isomorphism ``u`` from ``resolved`` to the module of ``res``.
    """
    cx = res.complex
    if cx.is_resolution:
        augmentation = u.inverse() @ cx.augmentation
    else:
        augmentation = cx.augmentation @ u
    relabelled = AugmentedComplex(cx.direction, resolved, cx.terms,
                                  cx.differentials, augmentation)
    return ProperResolution(relabelled, res.spec, res.witnesses)


def iterate_glue(kind, sequence, resolutions):
    """
    Fold a gluing over a long exact sequence cut into short ones.

    * ``'first'`` and ``'first_cores'``: ``0 -> X -> X^0 -> ... -> X^n -> 0``
      with ``resolutions[i]`` resolving ``X^i``; the result resolves ``X``.
    * ``'last_res'`` and ``'last_cores'``: ``0 -> X_n -> ... -> X_0 -> X ->
      0`` with ``resolutions[i]`` resolving ``X_i``; the result resolves
      ``X``.

    :param str kind: the gluing.
    :param LongExactSequence sequence: the sequence, exact at both ends.
    :param list(ProperResolution) resolutions: one per inner term.
    :rtype: GlueResult
    :raises ValueError: if the number of resolutions does not match.
    """
    if kind not in GLUINGS:
        raise ValueError(f'Unknown gluing {kind!r}; expected one of '
                         f'{sorted(GLUINGS)}.')
    check_consistency(sequence, LongExactSequence)
    resolutions = list(resolutions)
    n = len(sequence) - 1
    if len(resolutions) != n + 1:
        raise ValueError(f'A sequence with {n + 1} inner terms needs '
                         f'{n + 1} resolutions, got {len(resolutions)}.')
    if not (sequence.left_exact and sequence.right_exact):
        raise ValueError('The sequence must be exact at both ends.')
    forward = kind in ('first', 'first_cores')

    if n == 0:
        resolved, u = sequence.terms[0], sequence.maps[0]
        if not forward:
            resolved, u = sequence.terms[1], u.inverse()
        res = resolutions[0]
        relabelled = _relabel(res, resolved, u)
        return GlueResult(relabelled, None, (), res.strong, res.proper)

    glue = GLUINGS[kind]
    pieces = sequence.splice()
    steps = []
    if forward:
        current = resolutions[n]
        for i in range(n, 0, -1):
            steps.append(glue(pieces[i - 1], resolutions[i - 1], current))
            current = steps[-1].resolution
    else:
        current = resolutions[n]
        for j in range(1, n + 1):
            steps.append(glue(pieces[j - 1], resolutions[n - j], current))
            current = steps[-1].resolution
    preconditions = {
        f'step {k}: {name}': value
        for k, step in enumerate(steps)
        for name, value in step.preconditions.items()
    }
    return GlueResult(current, steps[-1].bridge,
                      tuple(w for s in steps for w in s.witnesses),
                      all(s.predicted_strong for s in steps),
                      all(s.predicted_proper for s in steps), preconditions,
                      tuple(steps))
