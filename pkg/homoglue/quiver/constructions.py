""" Module for the basic categorical constructions on representations. """
from .morphism import Morphism
from .representation import Representation
from .hom import lift, extend
from ..linalg import (Matrix, kernel_basis, left_kernel_basis, column_space,
                      solve, hstack, vstack, block_diag)
from ..utils import check_consistency


def subrepresentation(module, bases, name=''):
    """
    The subrepresentation spanned vertexwise by the columns of ``bases``.

    :param Representation module: the ambient representation.
    :param list(Matrix) bases: per vertex, linearly independent columns.
    :return: the subrepresentation and its inclusion.
    :rtype: tuple(Representation, Morphism)
    :raises ValueError: if the spans are not closed under the arrows.
    """
    maps = {}
    for arrow in module.algebra.quiver.arrows:
        v, w = arrow.source, arrow.target
        image = module.maps[arrow.id] @ bases[v]
        induced = solve(bases[w], image)
        if induced is None:
            raise ValueError(f'The subspaces are not closed under arrow '
                             f'{arrow.id!r}.')
        maps[arrow.id] = induced
    sub = Representation(module.algebra, [b.cols for b in bases],
                         maps,
                         name=name,
                         check=False)
    return sub, Morphism(sub, module, bases, check=False)


def quotient_by(module, bases, name=''):
    """
    The quotient of ``module`` by the subrepresentation spanned by the
    columns of ``bases``.

    :return: the quotient and the projection onto it.
    :rtype: tuple(Representation, Morphism)
    """
    projections = [left_kernel_basis(b) for b in bases]
    maps = {}
    for arrow in module.algebra.quiver.arrows:
        v, w = arrow.source, arrow.target
        image = projections[w] @ module.maps[arrow.id]
        induced = solve(projections[v].T, image.T)
        if induced is None:
            raise ValueError(f'The subspaces are not closed under arrow '
                             f'{arrow.id!r}.')
        maps[arrow.id] = induced.T
    quo = Representation(module.algebra, [q.rows for q in projections],
                         maps,
                         name=name,
                         check=False)
    return quo, Morphism(module, quo, projections, check=False)


def kernel(f):
    """
    Kernel of a morphism.

    :param Morphism f: the morphism.
    :return: the kernel and its inclusion into ``f.source``.
    :rtype: tuple(Representation, Morphism)
    """
    check_consistency(f, Morphism)
    return subrepresentation(f.source, [kernel_basis(b) for b in f.blocks])


def image(f):
    """
    Image of a morphism.

    :return: the image and its inclusion into ``f.target``.
    :rtype: tuple(Representation, Morphism)
    """
    check_consistency(f, Morphism)
    return subrepresentation(f.target, [column_space(b) for b in f.blocks])


def cokernel(f):
    """
    Cokernel of a morphism.

    :return: the cokernel and the projection from ``f.target``.
    :rtype: tuple(Representation, Morphism)
    """
    check_consistency(f, Morphism)
    return quotient_by(f.target, [column_space(b) for b in f.blocks])


def corestriction(f, inclusion):
    """
    The factorization of ``f`` through an injective ``inclusion``.

    :raises ValueError: if ``f`` does not land in the image.
    """
    u = lift(f, inclusion)
    if u is None:
        raise ValueError('The morphism does not factor through the '
                         'inclusion.')
    return u


def factor_through_cokernel(f, projection):
    """The morphism induced by ``f`` on a quotient it vanishes on."""
    u = extend(f, projection)
    if u is None:
        raise ValueError('The morphism does not vanish on the kernel of the '
                         'projection.')
    return u


class DirectSum:
    """
    A finite direct sum with its canonical injections and projections.

    :param list(Representation) summands: the summands, possibly none.
    :param BoundQuiverAlgebra algebra: required for the empty sum.
    """

    def __init__(self, summands, algebra=None):
        summands = list(summands)
        if not summands and algebra is None:
            raise ValueError('The empty direct sum needs an algebra.')
        algebra = summands[0].algebra if summands else algebra
        for s in summands:
            if s.algebra is not algebra:
                raise ValueError('Summands live over different algebras.')
        field = algebra.field
        n = algebra.vertex_count
        dims = [sum(s.dims[v] for s in summands) for v in range(n)]
        maps = {}
        for arrow in algebra.quiver.arrows:
            if summands:
                maps[arrow.id] = block_diag(
                    [s.maps[arrow.id] for s in summands])
        self.summands = summands
        self.module = Representation(algebra, dims, maps, check=False)
        self.injections = []
        self.projections = []
        offsets = [0] * n
        for s in summands:
            inj, proj = [], []
            for v in range(n):
                eye = Matrix.identity(field, dims[v])
                rows = eye[offsets[v]:offsets[v] + s.dims[v], :]
                inj.append(rows.T)
                proj.append(rows)
                offsets[v] += s.dims[v]
            self.injections.append(
                Morphism(s, self.module, inj, check=False))
            self.projections.append(
                Morphism(self.module, s, proj, check=False))


def direct_sum(summands, algebra=None):
    """
    Direct sum of representations.

    :rtype: Representation
    """
    return DirectSum(summands, algebra).module


def row_morphism(morphisms, source=None):
    """
    The morphism ``(f_1, ..., f_k)`` from the direct sum of the sources to
    the common target.

    :param list(Morphism) morphisms: morphisms with a common target.
    :param DirectSum source: the sum to use as domain; built if omitted.
    :rtype: Morphism
    """
    target = morphisms[0].target
    source = source or DirectSum([f.source for f in morphisms])
    blocks = []
    for v in range(len(target.dims)):
        blocks.append(hstack([f.blocks[v] for f in morphisms]))
    return Morphism(source.module, target, blocks, check=False)


def column_morphism(morphisms, target=None):
    """
    The morphism ``(f_1; ...; f_k)`` from the common source to the direct
    sum of the targets.

    :rtype: Morphism
    """
    source = morphisms[0].source
    target = target or DirectSum([f.target for f in morphisms])
    blocks = []
    for v in range(len(source.dims)):
        blocks.append(vstack([f.blocks[v] for f in morphisms]))
    return Morphism(source, target.module, blocks, check=False)


def diagonal_morphism(morphisms, source=None, target=None):
    """The direct sum ``f_1 + ... + f_k`` of morphisms, block diagonal."""
    source = source or DirectSum([f.source for f in morphisms])
    target = target or DirectSum([f.target for f in morphisms])
    blocks = []
    for v in range(len(source.module.dims)):
        blocks.append(block_diag([f.blocks[v] for f in morphisms]))
    return Morphism(source.module, target.module, blocks, check=False)


class Pullback:
    """
    Pull-back of ``f: X -> Z`` and ``g: Y -> Z``, computed vertexwise as the
    kernel of ``(f, -g): X + Y -> Z``.

    :ivar Representation module: the pull-back ``P``.
    :ivar Morphism p1: the projection ``P -> X``.
    :ivar Morphism p2: the projection ``P -> Y``.
    """

    def __init__(self, f, g):
        check_consistency([f, g], Morphism)
        if f.target != g.target:
            raise ValueError('A pull-back needs a common target.')
        self.f, self.g = f, g
        self._sum = DirectSum([f.source, g.source])
        self.module, self._inclusion = kernel(
            row_morphism([f, -g], self._sum))
        self.p1 = self._sum.projections[0] @ self._inclusion
        self.p2 = self._sum.projections[1] @ self._inclusion

    def factor(self, q1, q2):
        """
        The unique ``u: T -> P`` with ``p1 u = q1`` and ``p2 u = q2``.

        :raises ValueError: if ``f q1 != g q2``.
        """
        if self.f @ q1 != self.g @ q2:
            raise ValueError('The pair does not form a commutative square.')
        pair = column_morphism([q1, q2], self._sum)
        return corestriction(pair, self._inclusion)


class Pushout:
    """
    Push-out of ``f: Z -> X`` and ``g: Z -> Y``, computed as the cokernel
    of ``(f; -g): Z -> X + Y``.

    :ivar Representation module: the push-out ``Q``.
    :ivar Morphism i1: the map ``X -> Q``.
    :ivar Morphism i2: the map ``Y -> Q``.
    """

    def __init__(self, f, g):
        check_consistency([f, g], Morphism)
        if f.source != g.source:
            raise ValueError('A push-out needs a common source.')
        self.f, self.g = f, g
        self._sum = DirectSum([f.target, g.target])
        self.module, self._projection = cokernel(
            column_morphism([f, -g], self._sum))
        self.i1 = self._projection @ self._sum.injections[0]
        self.i2 = self._projection @ self._sum.injections[1]

    def factor(self, r1, r2):
        """
        The unique ``u: Q -> T`` with ``u i1 = r1`` and ``u i2 = r2``.

        :raises ValueError: if ``r1 f != r2 g``.
        """
        if r1 @ self.f != r2 @ self.g:
            raise ValueError('The pair does not form a commutative square.')
        pair = row_morphism([r1, r2], self._sum)
        return factor_through_cokernel(pair, self._projection)


def pullback(f, g):
    """Pull-back of ``f`` and ``g``; see :class:`Pullback`."""
    return Pullback(f, g)


def pushout(f, g):
    """Push-out of ``f`` and ``g``; see :class:`Pushout`."""
    return Pushout(f, g)
