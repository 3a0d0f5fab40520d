""" Module for augmented complexes and the horseshoe tower. """
from ..quiver import (Morphism, Representation, DirectSum, ShortExactSequence,
                      matlis_dual, kernel, cokernel, corestriction, lift,
                      is_exact_at, horseshoe_fill)
from .cover import top
from ..utils import check_consistency

RESOLUTION = 'resolution'
CORESOLUTION = 'coresolution'


class AugmentedComplex:
    """
    A finite augmented complex of representations.

    For ``direction='resolution'`` the complex is
    ``T_n --d_n--> ... --d_1--> T_0 --e--> M``; ``differentials[l - 1]`` is
    ``d_l: T_l -> T_{l-1}``. For ``direction='coresolution'`` it is
    ``M --e--> T_0 --d_1--> T_1 --> ... --> T_n`` with
    ``d_l: T_{l-1} -> T_l``.

    The terms need not be projective or injective; the complex only has
    to be a complex. Exactness is checked by :meth:`is_exact`.

    :Example:
        >>> cx = min_resolution(simple(A, 0), 2)
        >>> [t.dims for t in cx.terms]
        [(1, 1), (0, 1), (0, 0)]
    """

    def __init__(self, direction, module, terms, differentials, augmentation):
        """
        :param str direction: ``'resolution'`` or ``'coresolution'``.
        :param Representation module: the resolved module ``M``.
        :param list(Representation) terms: ``T_0, ..., T_n``.
        :param list(Morphism) differentials: ``d_1, ..., d_n``.
        :param Morphism augmentation: ``T_0 -> M`` or ``M -> T_0``.
        :raises ValueError: if the pieces do not fit together.
        """
        if direction not in (RESOLUTION, CORESOLUTION):
            raise ValueError(f'Unknown direction {direction!r}.')
        check_consistency(module, Representation)
        check_consistency(augmentation, Morphism)
        terms = list(terms)
        differentials = list(differentials)
        if not terms:
            raise ValueError('A complex needs at least the term T_0.')
        if len(differentials) != len(terms) - 1:
            raise ValueError(f'{len(terms)} terms need {len(terms) - 1} '
                             f'differentials, got {len(differentials)}.')
        resolution = direction == RESOLUTION
        ends = ((augmentation.source, augmentation.target) if resolution else
                (augmentation.target, augmentation.source))
        if ends != (terms[0], module):
            raise ValueError('The augmentation does not connect T_0 and the '
                             'module.')
        for l, d in enumerate(differentials, start=1):
            ends = (d.source, d.target) if resolution else (d.target,
                                                            d.source)
            if ends != (terms[l], terms[l - 1]):
                raise ValueError(f'Differential d_{l} has the wrong ends.')
        self.direction = direction
        self.module = module
        self.terms = terms
        self.differentials = differentials
        self.augmentation = augmentation

    @property
    def length(self):
        """Index of the last term."""
        return len(self.terms) - 1

    @property
    def algebra(self):
        """The algebra of the terms."""
        return self.module.algebra

    @property
    def is_resolution(self):
        """True for a resolution, False for a coresolution."""
        return self.direction == RESOLUTION

    def dims(self):
        """Dimension vectors of the terms."""
        return [t.dims for t in self.terms]

    def maps(self):
        """
        The augmentation followed by the differentials, in the order they
        are chased away from the module.
        """
        return [self.augmentation] + self.differentials

    def is_complex(self):
        """True if consecutive maps compose to zero."""
        chain = self.maps()
        for outer, inner in zip(chain, chain[1:]):
            composite = outer @ inner if self.is_resolution else inner @ outer
            if not composite.is_zero():
                return False
        return True

    def is_exact(self):
        """
        True if the augmentation is surjective (injective for a
        coresolution) and the complex is exact at ``T_0, ..., T_{n-1}``.
        The last term is truncated and carries no condition.
        """
        chain = self.maps()
        if self.is_resolution:
            if not self.augmentation.is_surjective():
                return False
            return all(
                is_exact_at(inner, outer)
                for outer, inner in zip(chain, chain[1:]))
        if not self.augmentation.is_injective():
            return False
        return all(
            is_exact_at(inner, outer)
            for inner, outer in zip(chain, chain[1:]))

    def kernel(self, level):
        """
        The kernel of the map leaving ``T_level`` towards the module, for a
        resolution: ``Ker e`` at level 0, ``Ker d_level`` above.

        :return: the kernel and its inclusion into ``T_level``.
        :rtype: tuple(Representation, Morphism)
        """
        if not self.is_resolution:
            raise ValueError('kernel() is defined on resolutions; use '
                             'cokernel() on coresolutions.')
        return kernel(self.maps()[level])

    def cokernel(self, level):
        """
        The cokernel of the map entering ``T_level``, for a coresolution.

        :return: the cokernel and the projection from ``T_level``.
        :rtype: tuple(Representation, Morphism)
        """
        if self.is_resolution:
            raise ValueError('cokernel() is defined on coresolutions.')
        return cokernel(self.maps()[level])

    def shift(self):
        """
        The resolution of ``Ker e`` formed by ``T_1, T_2, ...``, with the
        corestriction of ``d_1`` as augmentation.

        :return: the shifted complex and the inclusion ``Ker e -> T_0``.
        :rtype: tuple(AugmentedComplex, Morphism)
        :raises ValueError: on coresolutions or complexes of length 0.
        """
        if not self.is_resolution or self.length == 0:
            raise ValueError('Only resolutions of positive length shift.')
        module, inclusion = self.kernel(0)
        augmentation = corestriction(self.differentials[0], inclusion)
        return AugmentedComplex(RESOLUTION, module, self.terms[1:],
                                self.differentials[1:],
                                augmentation), inclusion

    def truncate(self, length):
        """The complex cut after ``T_length``."""
        if not 0 <= length <= self.length:
            raise ValueError(f'Cannot truncate a complex of length '
                             f'{self.length} to {length}.')
        return AugmentedComplex(self.direction, self.module,
                                self.terms[:length + 1],
                                self.differentials[:length],
                                self.augmentation)

    def dual(self):
        """
        The termwise Matlis dual, over the opposite algebra: a resolution
        becomes a coresolution of ``D M`` and vice versa.
        """
        direction = CORESOLUTION if self.is_resolution else RESOLUTION
        return AugmentedComplex(direction, matlis_dual(self.module),
                                [matlis_dual(t) for t in self.terms],
                                [matlis_dual(d) for d in self.differentials],
                                matlis_dual(self.augmentation))

    def rebased(self, module):
        """
        The same complex with ``module`` (equal to :attr:`module`) as the
        resolved object; used after a double dual.
        """
        if module != self.module:
            raise ValueError('rebased() needs an equal module.')
        aug = self.augmentation
        if self.is_resolution:
            aug = Morphism(aug.source, module, aug.blocks, check=False)
        else:
            aug = Morphism(module, aug.target, aug.blocks, check=False)
        return AugmentedComplex(self.direction, module, self.terms,
                                self.differentials, aug)

    def is_minimal(self):
        """
        True if every kernel of the resolution lies in the radical of its
        term; a coresolution is minimal when its dual is.
        """
        if not self.is_resolution:
            return self.dual().is_minimal()
        for level, term in enumerate(self.terms):
            _, inclusion = self.kernel(level)
            _, projection = top(term)
            if not (projection @ inclusion).is_zero():
                return False
        return True

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        dims = ', '.join(str(list(t.dims)) for t in self.terms)
        return (f'AugmentedComplex({self.direction}, {self.module!r}, '
                f'terms=[{dims}])')


def horseshoe_tower(ses, left, right):
    """
    Resolve the middle of ``0 -> A --f--> B --g--> C -> 0`` from a
    resolution of ``A`` and a resolution of ``C``, filling one horseshoe per
    level: the middle term at level ``l`` is ``left_l + right_l`` and the
    map onto the stage kernel is ``(f alpha, h)`` with ``h`` a lift of the
    right-hand map through ``g``.

    The terms of ``left`` may be arbitrary; the right-hand maps must lift,
    which holds when the terms of ``right`` are projective or when the
    sequences are Hom-exact for them.

    :param ShortExactSequence ses: the sequence.
    :param AugmentedComplex left: an exact resolution of ``A``.
    :param AugmentedComplex right: an exact resolution of ``C``.
    :return: the resolution of ``B`` of length
        ``min(left.length, right.length)``, the sums used at every level,
        the short exact sequences of stage kernels
        ``0 -> Ker_l(left) -> Ker_l(middle) -> Ker_l(right) -> 0`` one per
        level, and the inclusions of these three kernels into their terms.
    :rtype: tuple(AugmentedComplex, list(DirectSum),
        list(ShortExactSequence), list(tuple(Morphism)))
    :raises ValueError: if a lift does not exist.
    """
    check_consistency(ses, ShortExactSequence)
    if left.module != ses.left or right.module != ses.right:
        raise ValueError('The resolutions do not match the sequence.')
    length = min(left.length, right.length)
    sums, middle_maps, stages, inclusions = [], [], [], []
    current = ses
    alpha, alpha2 = left.augmentation, right.augmentation
    into_middle = None
    for level in range(length + 1):
        h = lift(alpha2, current.g)
        if h is None:
            raise ValueError(f'No lift of the right-hand map at level '
                             f'{level}; the sequence is not Hom-exact for '
                             f'{alpha2.source!r}.')
        total = DirectSum([left.terms[level], right.terms[level]])
        filled = horseshoe_fill(current, alpha, alpha2, h, total)
        sums.append(total)
        middle_maps.append(filled if into_middle is None else into_middle
                           @ filled)

        k_left, i_left = kernel(alpha)
        k_mid, i_mid = kernel(filled)
        k_right, i_right = kernel(alpha2)
        f_next = corestriction(total.injections[0] @ i_left, i_mid)
        g_next = corestriction(total.projections[1] @ i_mid, i_right)
        current = ShortExactSequence(f_next, g_next)
        stages.append(current)
        inclusions.append((i_left, i_mid, i_right))
        into_middle = i_mid
        if level < length:
            alpha = corestriction(left.differentials[level], i_left)
            alpha2 = corestriction(right.differentials[level], i_right)

    middle = AugmentedComplex(RESOLUTION, ses.middle,
                              [s.module for s in sums], middle_maps[1:],
                              middle_maps[0])
    return middle, sums, stages, inclusions
