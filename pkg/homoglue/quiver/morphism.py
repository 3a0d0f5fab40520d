""" Module for morphisms of representations. """
import numpy as np

from .representation import Representation
from ..linalg import Matrix, rank, inverse
from ..utils import check_consistency


class Morphism:
    """
    A homomorphism of representations: one matrix per vertex, of shape
    ``target.dims[v] x source.dims[v]``, commuting with every arrow.

    ``g @ f`` is the composite ``g`` after ``f``.
    """

    __slots__ = ('_source', '_target', '_blocks')

    def __init__(self, source, target, blocks, check=True):
        """
        :param Representation source: the domain.
        :param Representation target: the codomain.
        :param list blocks: one :class:`Matrix` (or nested list) per vertex.
        :param bool check: verify the commuting squares.
        :raises ValueError: on algebra mismatch, wrong shapes or
            non-commuting squares.
        """
        check_consistency([source, target], Representation)
        if source.algebra is not target.algebra:
            raise ValueError('Source and target live over different '
                             'algebras.')
        blocks = list(blocks)
        if len(blocks) != len(source.dims):
            raise ValueError(f'Expected {len(source.dims)} blocks, got '
                             f'{len(blocks)}.')
        field = source.field
        checked = []
        for v, block in enumerate(blocks):
            shape = (target.dims[v], source.dims[v])
            if not isinstance(block, Matrix):
                block = Matrix(field, block, shape=shape)
            if block.shape != shape:
                raise ValueError(f'Block at vertex {v}: expected shape '
                                 f'{shape}, got {block.shape}.')
            checked.append(block)
        self._source = source
        self._target = target
        self._blocks = tuple(checked)
        if check:
            self._check_squares()

    def _check_squares(self):
        for arrow in self._source.algebra.quiver.arrows:
            v, w = arrow.source, arrow.target
            left = self._target.maps[arrow.id] @ self._blocks[v]
            right = self._blocks[w] @ self._source.maps[arrow.id]
            if left != right:
                raise ValueError(f'The square of arrow {arrow.id!r} does not '
                                 f'commute.')

    @classmethod
    def identity(cls, module):
        """The identity of ``module``."""
        return cls(module,
                   module,
                   [Matrix.identity(module.field, d) for d in module.dims],
                   check=False)

    @classmethod
    def zero(cls, source, target):
        """The zero morphism ``source -> target``."""
        return cls(source,
                   target, [
                       Matrix.zeros(source.field, t, s)
                       for s, t in zip(source.dims, target.dims)
                   ],
                   check=False)

    @property
    def source(self):
        """The domain."""
        return self._source

    @property
    def target(self):
        """The codomain."""
        return self._target

    @property
    def blocks(self):
        """The matrices, one per vertex."""
        return self._blocks

    @property
    def algebra(self):
        """The algebra of source and target."""
        return self._source.algebra

    @property
    def field(self):
        """The ground field."""
        return self._source.field

    def __matmul__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        if other._target != self._source:
            raise ValueError('Cannot compose: the inner target differs from '
                             'the outer source.')
        return Morphism(other._source,
                        self._target,
                        [a @ b for a, b in zip(self._blocks, other._blocks)],
                        check=False)

    def _check_parallel(self, other):
        if not isinstance(other, Morphism):
            raise TypeError(f'Expected a Morphism, got '
                            f'{type(other).__name__}.')
        if other._source != self._source or other._target != self._target:
            raise ValueError('Morphisms are not parallel.')

    def __add__(self, other):
        self._check_parallel(other)
        return Morphism(self._source,
                        self._target,
                        [a + b for a, b in zip(self._blocks, other._blocks)],
                        check=False)

    def __sub__(self, other):
        self._check_parallel(other)
        return Morphism(self._source,
                        self._target,
                        [a - b for a, b in zip(self._blocks, other._blocks)],
                        check=False)

    def __neg__(self):
        return Morphism(self._source,
                        self._target, [-a for a in self._blocks],
                        check=False)

    def __mul__(self, scalar):
        return Morphism(self._source,
                        self._target, [a * scalar for a in self._blocks],
                        check=False)

    __rmul__ = __mul__

    def is_zero(self):
        """True if every block vanishes."""
        return all(b.is_zero() for b in self._blocks)

    def rank_vector(self):
        """Rank of the block at every vertex."""
        return tuple(rank(b) for b in self._blocks)

    def is_injective(self):
        """True if every block has full column rank."""
        return self.rank_vector() == self._source.dims

    def is_surjective(self):
        """True if every block has full row rank."""
        return self.rank_vector() == self._target.dims

    def is_isomorphism(self):
        """True if every block is invertible."""
        return (self._source.dims == self._target.dims
                and self.is_injective())

    def inverse(self):
        """
        The inverse morphism.

        :raises ValueError: if the morphism is not an isomorphism.
        """
        if not self.is_isomorphism():
            raise ValueError('Only isomorphisms can be inverted.')
        return Morphism(self._target,
                        self._source, [inverse(b) for b in self._blocks],
                        check=False)

    def vector(self):
        """
        All blocks flattened row-major into one column, vertex by vertex;
        the coordinates used by the Hom-space solvers.

        :rtype: Matrix
        """
        parts = [b.array.reshape(-1) for b in self._blocks]
        flat = np.concatenate(parts) if parts else np.zeros(0)
        return Matrix(self.field, flat.reshape(-1, 1), shape=(flat.size, 1))

    def key(self):
        """A hashable key identifying the morphism exactly."""
        return (self._source.key(), self._target.key(),
                tuple(b.key() for b in self._blocks))

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (other._source == self._source
                and other._target == self._target
                and all(a == b for a, b in zip(self._blocks, other._blocks)))

    __hash__ = None

    def __repr__(self):
        return (f'Morphism({self._source!r} -> {self._target!r}, '
                f'ranks={list(self.rank_vector())})')
