""" Module for exact sequences and the horseshoe fillings. """
from .constructions import (DirectSum, image, kernel, cokernel,
                            row_morphism, column_morphism, corestriction)
from .duality import matlis_dual
from .hom import lift, extend
from .morphism import Morphism
from ..linalg import rank
from ..utils import check_consistency


def is_exact_at(f, g):
    """
    True if ``X --f--> Y --g--> Z`` is exact at ``Y``: ``g f = 0`` and, at
    every vertex, ``rank f_v = dim Y_v - rank g_v``.

    :param Morphism f: the incoming morphism.
    :param Morphism g: the outgoing morphism.
    :rtype: bool
    """
    check_consistency([f, g], Morphism)
    if f.target != g.source:
        raise ValueError('The morphisms are not composable.')
    if not (g @ f).is_zero():
        return False
    for v, d in enumerate(f.target.dims):
        if rank(f.blocks[v]) != d - rank(g.blocks[v]):
            return False
    return True


class ShortExactSequence:
    """
    A short exact sequence ``0 -> A --f--> B --g--> C -> 0``.

    :ivar Morphism f: the injection.
    :ivar Morphism g: the surjection.
    """

    def __init__(self, f, g, check=True):
        """
        :param Morphism f: the map ``A -> B``.
        :param Morphism g: the map ``B -> C``.
        :param bool check: verify exactness.
        :raises ValueError: if the sequence is not short exact.
        """
        check_consistency([f, g], Morphism)
        if f.target != g.source:
            raise ValueError('The morphisms of a sequence must compose.')
        if check:
            if not f.is_injective():
                raise ValueError('The first map of a short exact sequence '
                                 'must be injective.')
            if not g.is_surjective():
                raise ValueError('The second map of a short exact sequence '
                                 'must be surjective.')
            if not is_exact_at(f, g):
                raise ValueError('The sequence is not exact in the middle.')
        self.f = f
        self.g = g

    @classmethod
    def from_injection(cls, f):
        """The sequence ``0 -> A -> B -> Coker f -> 0`` of an injection."""
        _, projection = cokernel(f)
        return cls(f, projection)

    @classmethod
    def from_surjection(cls, g):
        """The sequence ``0 -> Ker g -> B -> C -> 0`` of a surjection."""
        _, inclusion = kernel(g)
        return cls(inclusion, g)

    @property
    def left(self):
        """The module ``A``."""
        return self.f.source

    @property
    def middle(self):
        """The module ``B``."""
        return self.f.target

    @property
    def right(self):
        """The module ``C``."""
        return self.g.target

    @property
    def algebra(self):
        """The algebra of the modules."""
        return self.f.algebra

    def section(self):
        """
        A morphism ``s: C -> B`` with ``g s = 1``.

        :return: the section, or ``None`` if the sequence does not split.
        """
        return lift(Morphism.identity(self.right), self.g)

    def retraction(self):
        """
        A morphism ``r: B -> A`` with ``r f = 1``.

        :return: the retraction, or ``None`` if the sequence does not split.
        """
        return extend(Morphism.identity(self.left), self.f)

    def is_split(self):
        """True if the sequence splits."""
        return self.section() is not None

    def dual(self):
        """The Matlis dual ``0 -> D C -> D B -> D A -> 0``."""
        return ShortExactSequence(matlis_dual(self.g),
                                  matlis_dual(self.f),
                                  check=False)

    def __repr__(self):
        return (f'ShortExactSequence(0 -> {self.left!r} -> {self.middle!r} '
                f'-> {self.right!r} -> 0)')


class LongExactSequence:
    """
    An exact sequence ``T_0 --d_0--> T_1 --d_1--> ... --> T_m``, exact at
    every interior term.

    Whether the sequence also starts with ``0 ->`` or ends with ``-> 0`` is
    recorded in :attr:`left_exact` (first map injective) and
    :attr:`right_exact` (last map surjective).
    """

    def __init__(self, maps, check=True):
        """
        :param list(Morphism) maps: the consecutive morphisms, at least one.
        :raises ValueError: if the maps do not compose or exactness fails.
        """
        maps = list(maps)
        if not maps:
            raise ValueError('A long exact sequence needs at least one map.')
        check_consistency(maps, Morphism)
        for i, (f, g) in enumerate(zip(maps, maps[1:])):
            if f.target != g.source:
                raise ValueError(f'Maps {i} and {i + 1} do not compose.')
            if check and not is_exact_at(f, g):
                raise ValueError(f'The sequence is not exact at term '
                                 f'{i + 1}.')
        self.maps = maps

    @property
    def terms(self):
        """The modules ``T_0, ..., T_m``."""
        return [self.maps[0].source] + [f.target for f in self.maps]

    @property
    def left_exact(self):
        """True if the first map is injective."""
        return self.maps[0].is_injective()

    @property
    def right_exact(self):
        """True if the last map is surjective."""
        return self.maps[-1].is_surjective()

    def splice(self):
        """
        Cut the sequence into short exact sequences, one per interior term:
        the ``i``-th piece is ``0 -> K_i -> T_i -> K_{i+1} -> 0`` with
        ``K_i = Im(d_{i-1})``. The outer images are the outer terms
        themselves when the sequence is left (resp. right) exact.

        :rtype: list(ShortExactSequence)
        """
        last = len(self.maps) - 1
        incoming = self.maps[0]
        if not self.left_exact:
            incoming = image(self.maps[0])[1]
        pieces = []
        for i, d in enumerate(self.maps[1:], start=1):
            if i == last and self.right_exact:
                onto, inclusion = d, None
            else:
                inclusion = image(d)[1]
                onto = corestriction(d, inclusion)
            pieces.append(ShortExactSequence(incoming, onto, check=True))
            incoming = inclusion
        return pieces

    def head(self):
        """
        The surjection ``T_0 -> K_1`` onto the first image; the identity
        of ``T_0`` when the first map is injective, since then ``K_1 = T_0``.

        :rtype: Morphism
        """
        d = self.maps[0]
        if self.left_exact:
            return Morphism.identity(d.source)
        return corestriction(d, image(d)[1])

    def dual(self):
        """The Matlis dual sequence, read in the opposite direction."""
        return LongExactSequence([matlis_dual(f) for f in reversed(self.maps)],
                                 check=False)

    def __len__(self):
        return len(self.maps)

    def __repr__(self):
        terms = ' -> '.join(repr(t) for t in self.terms)
        return f'LongExactSequence({terms})'


def horseshoe_fill(ses, alpha, alpha2, h, source=None):
    """
    Fill the middle column of a horseshoe diagram. Given the short exact
    sequence ``0 -> A --f--> B --g--> A'' -> 0`` and morphisms
    ``alpha: C -> A``, ``alpha2: C'' -> A''`` and ``h: C'' -> B`` with
    ``g h = alpha2``, return ``(f alpha, h): C + C'' -> B``. Both squares
    against ``0 -> C -> C + C'' -> C'' -> 0`` commute.

    :param ShortExactSequence ses: the bottom row.
    :param Morphism alpha: the left column.
    :param Morphism alpha2: the right column.
    :param Morphism h: a lift of ``alpha2`` through ``g``.
    :param DirectSum source: the sum ``C + C''`` to use; built if omitted.
    :rtype: Morphism
    :raises ValueError: if ``g h != alpha2``.
    """
    check_consistency(ses, ShortExactSequence)
    if ses.g @ h != alpha2:
        raise ValueError('The lift h does not satisfy g h = alpha2.')
    source = source or DirectSum([alpha.source, alpha2.source])
    filled = row_morphism([ses.f @ alpha, h], source)
    # both squares, asserted
    if filled @ source.injections[0] != ses.f @ alpha:
        raise ValueError('Left square of the horseshoe does not commute.')
    if ses.g @ filled != alpha2 @ source.projections[1]:
        raise ValueError('Right square of the horseshoe does not commute.')
    return filled


def cohorseshoe_fill(ses, beta, beta2, k, target=None):
    """
    The dual filling. Given ``0 -> A --f--> B --g--> A'' -> 0``,
    ``beta: A -> E``, ``beta2: A'' -> E''`` and ``k: B -> E`` with
    ``k f = beta``, return ``(k; beta2 g): B -> E + E''``.

    :param DirectSum target: the sum ``E + E''`` to use; built if omitted.
    :rtype: Morphism
    :raises ValueError: if ``k f != beta``.
    """
    check_consistency(ses, ShortExactSequence)
    if k @ ses.f != beta:
        raise ValueError('The extension k does not satisfy k f = beta.')
    target = target or DirectSum([beta.target, beta2.target])
    filled = column_morphism([k, beta2 @ ses.g], target)
    if filled @ ses.f != target.injections[0] @ beta:
        raise ValueError('Left square of the horseshoe does not commute.')
    if target.projections[1] @ filled != beta2 @ ses.g:
        raise ValueError('Right square of the horseshoe does not commute.')
    return filled
