""" Module for the connecting maps between consecutive presentations. """
import warnings
from dataclasses import dataclass, field, replace

from .presentation import (LEFT, RIGHT, ApproxPresentation, left_presentation,
                           right_presentation)
from ..auscond import CheckResult
from ..quiver import Morphism, hom_basis, lift, extend, corestriction
from ..utils import (DEFAULT_CUTOFF, DEFAULT_SEED, DEFAULT_TRIALS,
                     check_consistency, default_rng)

BUILDERS = {LEFT: left_presentation, RIGHT: right_presentation}


@dataclass(frozen=True)
class LadderMap:
    """
    The vertical maps from the presentation of index ``upper.i`` to the one
    of index ``lower.i``: the identity on ``M`` and two epimorphisms
    ``I -> I'`` and ``G -> G'`` making both squares commute.

    The maps are not canonical; :func:`ladder_map` picks the first
    epimorphism its search meets.
    """
    upper: ApproxPresentation = field(repr=False)
    lower: ApproxPresentation = field(repr=False)
    i_map: Morphism = field(repr=False)
    g_map: Morphism = field(repr=False)

    @property
    def commutes(self):
        top, bottom = self.upper.sequence, self.lower.sequence
        if self.upper.kind == LEFT:
            return (self.i_map @ top.f == bottom.f
                    and self.g_map @ top.g == bottom.g @ self.i_map)
        return (bottom.g @ self.g_map == top.g
                and self.g_map @ top.f == bottom.f @ self.i_map)

    @property
    def epic(self):
        return self.i_map.is_surjective() and self.g_map.is_surjective()

    @property
    def valid(self):
        return self.commutes and self.epic

    def compose(self, other):
        """The ladder from ``self.upper`` to ``other.lower``."""
        if other.upper.sequence.middle != self.lower.sequence.middle:
            raise ValueError('The ladders are not consecutive.')
        return LadderMap(self.upper, other.lower, other.i_map @ self.i_map,
                         other.g_map @ self.g_map)

    def __str__(self):
        state = 'ok' if self.valid else 'FAILS'
        return (f'ladder {self.upper.i} -> {self.lower.i}: {state} '
                f'(commutes {self.commutes}, epic {self.epic})')


def _combinations(start, corrections, trials, rng):
    yield start
    for c in corrections:
        yield start + c
    if not corrections:
        return
    p = start.field.p
    for _ in range(trials):
        candidate = start
        for c in corrections:
            candidate = candidate + c * int(rng.integers(0, p))
        yield candidate


def ladder_map(upper, lower, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
    """
    Connect two presentations of the same kind and module with consecutive
    indices.

    For left presentations the map ``I_{i+1} -> I_i`` is an extension of
    ``M -> I_i`` along ``M -> I_{i+1}``; two extensions differ by a map
    factoring through ``G_{i+1}``, and the search runs over such
    corrections until the extension is onto. The map on the G-parts is
    induced. Right presentations are handled dually, through lifts of
    ``G^{i+1} -> M`` along ``G^i -> M``.

    :param ApproxPresentation upper: the presentation of index ``i + 1``.
    :param ApproxPresentation lower: the presentation of index ``i``.
    :rtype: LadderMap
    :raises ValueError: if the presentations do not match, or no
        commuting map exists at all.
    """
    check_consistency([upper, lower], ApproxPresentation)
    if upper.kind != lower.kind or upper.kind not in BUILDERS:
        raise ValueError('Ladders connect two left or two right '
                         'presentations.')
    if upper.module != lower.module or upper.i != lower.i + 1:
        raise ValueError('The presentations must present the same module '
                         'with consecutive indices.')
    rng = default_rng(seed)
    top, bottom = upper.sequence, lower.sequence
    if upper.kind == LEFT:
        start = extend(bottom.f, top.f)
        corrections = [c @ top.g for c in hom_basis(top.right, bottom.middle)]
    else:
        start = lift(top.g, bottom.g)
        corrections = [
            bottom.f @ c for c in hom_basis(top.middle, bottom.left)
        ]
    if start is None:
        raise ValueError(f'No map of {upper.kind} presentations from index '
                         f'{upper.i} to {lower.i} exists.')
    fallback = None
    for candidate in _combinations(start, corrections, trials, rng):
        ladder = _complete(upper, lower, candidate)
        fallback = fallback or ladder
        if ladder.epic:
            return ladder
    warnings.warn(f'No epimorphic ladder from index {upper.i} to {lower.i} '
                  f'found in {trials} trials.')
    return fallback


def _complete(upper, lower, candidate):
    top, bottom = upper.sequence, lower.sequence
    if upper.kind == LEFT:
        g_map = extend(bottom.g @ candidate, top.g)
        return LadderMap(upper, lower, candidate, g_map)
    i_map = corestriction(candidate @ top.f, bottom.f)
    return LadderMap(upper, lower, i_map, candidate)


def attach_ladder(presentation, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
    """
    The presentation with its ladder to the presentation of index
    ``i - 1`` attached; unchanged for ``i = 1``.

    :rtype: ApproxPresentation
    """
    check_consistency(presentation, ApproxPresentation)
    if presentation.i < 2:
        return presentation
    build = BUILDERS[presentation.kind]
    lower = build(presentation.module, presentation.i - 1, presentation.k,
                  presentation.cutoff, test_modules=[])
    ladder = ladder_map(presentation, lower, trials, seed)
    alarms = list(presentation.alarms)
    if not ladder.commutes:
        alarms.append(f'the ladder from index {presentation.i} does not '
                      f'commute')
    return replace(presentation, ladder=ladder, alarms=alarms)


def ladder_coherence(module, i, k=0, kind=LEFT, cutoff=DEFAULT_CUTOFF,
                     seed=DEFAULT_SEED):
    """
    Build the presentations of indices ``i + 2``, ``i + 1`` and ``i``,
    connect consecutive ones and check that the composite of the two
    ladders is again a commuting epimorphic ladder from ``i + 2`` to
    ``i``.

    :rtype: CheckResult
    """
    if kind not in BUILDERS:
        raise ValueError(f'Unknown presentation kind {kind!r}.')
    build = BUILDERS[kind]
    levels = [
        build(module, j, k, cutoff, test_modules=[])
        for j in (i + 2, i + 1, i)
    ]
    first = ladder_map(levels[0], levels[1], seed=seed)
    second = ladder_map(levels[1], levels[2], seed=seed)
    composite = first.compose(second)
    holds = first.valid and second.valid and composite.valid
    witness = '' if holds else module.name or 'M'
    return CheckResult('ladder coherence', holds, witness,
                       f'{kind}, indices {i + 2} -> {i + 1} -> {i}')
