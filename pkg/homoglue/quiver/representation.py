""" Module for representations of bound quivers. """
from types import MappingProxyType

from .algebra import BoundQuiverAlgebra
from ..linalg import Matrix
from ..utils import check_consistency, check_non_negative


class Representation:
    """
    A finite-dimensional module over a :class:`BoundQuiverAlgebra`: a space
    of dimension ``dims[v]`` at every vertex and, for every arrow
    ``a: v -> w``, a matrix of shape ``dims[w] x dims[v]``.

    The relations of the algebra are verified at construction, so every
    instance is a genuine module. Instances are immutable; two
    representations are equal when they share the algebra and have equal
    dimension vectors and matrices.

    :Example:
        >>> S = Representation(A, [1, 0])
        >>> S.dims
        (1, 0)
    """

    __slots__ = ('_algebra', '_dims', '_maps', '_name')

    def __init__(self, algebra, dims, maps=None, name='', check=True):
        """
        :param BoundQuiverAlgebra algebra: the algebra.
        :param list(int) dims: the dimension vector.
        :param dict maps: arrow id to :class:`Matrix` (or nested lists).
            Missing arrows act by zero.
        :param str name: optional display name.
        :param bool check: verify the relations.
        :raises ValueError: on shape mismatches or violated relations.
        """
        check_consistency(algebra, BoundQuiverAlgebra)
        dims = tuple(int(d) for d in dims)
        if len(dims) != algebra.vertex_count:
            raise ValueError(f'Expected {algebra.vertex_count} dimensions, '
                             f'got {len(dims)}.')
        for d in dims:
            check_non_negative(d, 'dimension')
        maps = dict(maps or {})
        unknown = set(maps) - {a.id for a in algebra.quiver.arrows}
        if unknown:
            raise ValueError(f'Unknown arrows {sorted(unknown)}.')
        field = algebra.field
        checked = {}
        for arrow in algebra.quiver.arrows:
            shape = (dims[arrow.target], dims[arrow.source])
            matrix = maps.get(arrow.id)
            if matrix is None:
                matrix = Matrix.zeros(field, *shape)
            elif not isinstance(matrix, Matrix):
                matrix = Matrix(field, matrix, shape=shape)
            if matrix.field != field:
                raise ValueError(f'Arrow {arrow.id!r}: matrix over '
                                 f'{matrix.field}, algebra over {field}.')
            if matrix.shape != shape:
                raise ValueError(f'Arrow {arrow.id!r}: expected shape '
                                 f'{shape}, got {matrix.shape}.')
            checked[arrow.id] = matrix
        self._algebra = algebra
        self._dims = dims
        self._maps = MappingProxyType(checked)
        self._name = name
        if check:
            self._check_relations()

    def _check_relations(self):
        for relation in self._algebra.relations:
            source, target = relation[0][1].source, relation[0][1].target
            total = Matrix.zeros(self.field, self._dims[target],
                                 self._dims[source])
            for coeff, path in relation:
                total = total + coeff * self.path_matrix(path)
            if not total.is_zero():
                terms = ' + '.join(f'{c}*{p}' for c, p in relation)
                raise ValueError(f'Relation {terms} does not vanish on the '
                                 f'representation.')
        bound = self._algebra.path_length_bound
        for path in self._algebra.quiver.paths(bound + 1):
            if not self.path_matrix(path).is_zero():
                raise ValueError(f'Path {path} of length {bound + 1} acts '
                                 f'non-trivially.')

    @property
    def algebra(self):
        """The algebra acting on the representation."""
        return self._algebra

    @property
    def field(self):
        """The ground field."""
        return self._algebra.field

    @property
    def dims(self):
        """The dimension vector."""
        return self._dims

    @property
    def maps(self):
        """Read-only mapping from arrow id to matrix."""
        return self._maps

    @property
    def name(self):
        """Display name, possibly empty."""
        return self._name

    @property
    def total_dim(self):
        """Total dimension."""
        return sum(self._dims)

    def is_zero(self):
        """True for the zero representation."""
        return self.total_dim == 0

    def path_matrix(self, path):
        """
        The action of a path: ``a`` then ``b`` acts as ``maps[b] @ maps[a]``.

        :param Path path: a path of the quiver.
        :rtype: Matrix
        """
        result = Matrix.identity(self.field, self._dims[path.source])
        for arrow_id in path.arrows:
            result = self._maps[arrow_id] @ result
        return result

    def renamed(self, name):
        """The same representation with another display name."""
        return Representation(self._algebra,
                              self._dims,
                              dict(self._maps),
                              name=name,
                              check=False)

    def key(self):
        """A hashable key identifying the representation exactly."""
        return (id(self._algebra), self._dims,
                tuple(self._maps[a.id].key()
                      for a in self._algebra.quiver.arrows))

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        if other is self:
            return True
        return (other._algebra is self._algebra and other._dims == self._dims
                and all(other._maps[a] == self._maps[a] for a in self._maps))

    __hash__ = None

    def __repr__(self):
        label = self._name or 'Representation'
        return f'{label}(dims={list(self._dims)})'


class ModuleKey:
    """
    A hashable handle on a representation, for ``functools.lru_cache``.
    Two handles are equal when their representations are equal; the name
    is ignored.
    """

    __slots__ = ('module', '_key')

    def __init__(self, module):
        check_consistency(module, Representation)
        self.module = module
        self._key = module.key()

    def __hash__(self):
        return hash(self._key)

    def __eq__(self, other):
        if not isinstance(other, ModuleKey):
            return NotImplemented
        return other._key == self._key

    def __repr__(self):
        return f'ModuleKey({self.module!r})'
