""" Module for bound quiver algebras. """
from collections import defaultdict

import numpy as np

from .quiver import Quiver, Path
from ..linalg import PrimeField, Matrix, rref
from ..utils import check_consistency, check_non_negative


class _PathSpace:
    """
    Normal forms for the paths ``v -> w`` of length at most ``L``, modulo
    the relations. Columns are ordered longest path first, so that row
    reduction eliminates long paths in favour of short ones.
    """

    def __init__(self, field, columns, rows):
        self.field = field
        self.columns = columns
        self.index = {path: i for i, path in enumerate(columns)}
        if rows:
            matrix = Matrix(field, rows)
        else:
            matrix = Matrix.zeros(field, 0, len(columns))
        reduced, pivots, rank = rref(matrix)
        self.reduced = reduced.array[:rank]
        self.pivots = pivots
        pivot_set = set(pivots)
        free = [c for c in range(len(columns)) if c not in pivot_set]
        free.sort(key=lambda c: (columns[c].length, columns[c].arrows))
        self.basis_columns = free
        self.basis = [columns[c] for c in free]

    def reduce(self, vector):
        """Coordinates in ``self.basis`` of a vector over ``columns``."""
        p = self.field.p
        x = np.array(vector, dtype=self.field.dtype) % p
        for row, pc in zip(self.reduced, self.pivots):
            if x[pc]:
                x = (x - x[pc] * row) % p
        return x[self.basis_columns]

    def contains(self, vector):
        """True if the vector lies in the span of the relations."""
        p = self.field.p
        x = np.array(vector, dtype=self.field.dtype) % p
        for row, pc in zip(self.reduced, self.pivots):
            if x[pc]:
                x = (x - x[pc] * row) % p
        return not np.any(x)


class BoundQuiverAlgebra:
    """
    The algebra ``kQ/I`` of a quiver ``Q`` over a prime field modulo the
    ideal ``I`` generated by admissible relations.

    A relation is a list of pairs ``(coefficient, word)``; every word has
    length at least two and all words of a relation are parallel paths.
    Words are read left to right: ``'ab'`` applies ``a`` and then ``b``.

    Finite dimensionality is certified by checking that every path of
    length ``path_length_bound + 1`` lies in the ideal (modulo longer
    paths). When no bound is given the smallest one up to ``max_bound`` is
    searched for.

    :Example:
        >>> Q = Quiver(1, [('x', 0, 0)])
        >>> A = BoundQuiverAlgebra(Q, PrimeField(5), [[(1, 'xx')]])
        >>> A.dimension
        2
    """

    def __init__(self,
                 quiver,
                 field,
                 relations=(),
                 path_length_bound=None,
                 name='',
                 max_bound=16):
        """
        :param Quiver quiver: the quiver.
        :param PrimeField field: the ground field.
        :param list relations: the relations.
        :param int path_length_bound: length beyond which every path is zero.
        :param str name: a display name.
        :param int max_bound: search limit when no bound is given.
        :raises ValueError: if a relation is not admissible or the arrow
            ideal is not nilpotent modulo the relations within the bound.
        """
        check_consistency(quiver, Quiver)
        check_consistency(field, PrimeField)
        self._quiver = quiver
        self._field = field
        self._name = name
        self._relations = tuple(
            rel for rel in (self._normalize(r) for r in relations) if rel)

        if path_length_bound is None:
            for bound in range(max_bound + 1):
                spaces = self._path_spaces(bound)
                if self._is_nilpotent(spaces, bound):
                    break
            else:
                raise ValueError(f'The arrow ideal is not nilpotent modulo '
                                 f'the relations up to path length '
                                 f'{max_bound}.')
        else:
            check_non_negative(path_length_bound, 'path_length_bound')
            bound = int(path_length_bound)
            spaces = self._path_spaces(bound)
            if not self._is_nilpotent(spaces, bound):
                raise ValueError(f'Paths of length {bound + 1} do not vanish '
                                 f'modulo the relations.')
        self._bound = bound
        self._spaces = self._finalize(spaces, bound)
        self._opposite = None
        self._cache = {}

    def _normalize(self, relation):
        terms = defaultdict(int)
        for coeff, word in relation:
            path = self._quiver.path(word)
            if path.length < 2:
                raise ValueError(f'Relation term {path} has length '
                                 f'{path.length}; admissible relations use '
                                 f'paths of length at least 2.')
            terms[path] = (terms[path] + int(coeff)) % self._field.p
        terms = {p: c for p, c in terms.items() if c}
        ends = {(p.source, p.target) for p in terms}
        if len(ends) > 1:
            raise ValueError(f'Relation paths must be parallel, got '
                             f'endpoints {sorted(ends)}.')
        return tuple(sorted(((c, p) for p, c in terms.items()),
                            key=lambda t: (t[1].length, t[1].arrows)))

    def _path_spaces(self, bound):
        """Columns and ideal rows per pair of vertices, lengths <= bound+1."""
        top = bound + 1
        by_length = [self._quiver.paths(length) for length in range(top + 1)]
        columns = defaultdict(list)
        for paths in by_length:
            for path in paths:
                columns[(path.source, path.target)].append(path)
        for key in columns:
            columns[key].sort(key=lambda p: (-p.length, p.arrows))
        index = {
            key: {p: i
                  for i, p in enumerate(cols)}
            for key, cols in columns.items()
        }
        rows = defaultdict(list)
        for relation in self._relations:
            source, target = relation[0][1].source, relation[0][1].target
            shortest = min(p.length for _, p in relation)
            for lu in range(top - shortest + 1):
                lefts = [u for u in by_length[lu] if u.target == source]
                for lw in range(top - shortest - lu + 1):
                    rights = [w for w in by_length[lw] if w.source == target]
                    for u in lefts:
                        for w in rights:
                            key = (u.source, w.target)
                            row = [0] * len(columns[key])
                            for coeff, path in relation:
                                word = u.arrows + path.arrows + w.arrows
                                if len(word) <= top:
                                    q = Path(u.source, w.target, word)
                                    row[index[key][q]] += coeff
                            if any(row):
                                rows[key].append(row)
        return {
            key: (cols, rows.get(key, []))
            for key, cols in columns.items()
        }

    def _is_nilpotent(self, spaces, bound):
        for key, (cols, rows) in spaces.items():
            longest = [i for i, p in enumerate(cols) if p.length == bound + 1]
            if not longest:
                continue
            space = _PathSpace(self._field, cols, rows)
            for i in longest:
                unit = [0] * len(cols)
                unit[i] = 1
                if not space.contains(unit):
                    return False
        return True

    def _finalize(self, spaces, bound):
        result = {}
        for key, (cols, rows) in spaces.items():
            rows = list(rows)
            for i, p in enumerate(cols):
                if p.length == bound + 1:
                    unit = [0] * len(cols)
                    unit[i] = 1
                    rows.append(unit)
            result[key] = _PathSpace(self._field, cols, rows)
        return result

    @property
    def quiver(self):
        """The quiver."""
        return self._quiver

    @property
    def field(self):
        """The ground field."""
        return self._field

    @property
    def name(self):
        """The display name."""
        return self._name

    @property
    def relations(self):
        """Normalized relations as tuples of ``(coefficient, Path)``."""
        return self._relations

    @property
    def path_length_bound(self):
        """Every path longer than this is zero in the algebra."""
        return self._bound

    @property
    def vertex_count(self):
        """Number of vertices of the quiver."""
        return self._quiver.vertex_count

    @property
    def vertices(self):
        """The vertex range."""
        return self._quiver.vertices

    @property
    def cache(self):
        """
        Memo of the indecomposable projectives and injectives, at most two
        entries per vertex. Derived objects such as resolutions live in
        bounded ``functools.lru_cache`` memos instead.
        """
        return self._cache

    def _space(self, v, w):
        return self._spaces.get((v, w))

    def path_basis(self, v, w):
        """
        Normal-form basis of the paths ``v -> w`` modulo the relations,
        shortest first (so the trivial path comes first when ``v == w``).

        :rtype: list(Path)
        """
        space = self._space(v, w)
        return [] if space is None else list(space.basis)

    def dim(self, v, w):
        """Dimension of the space of paths ``v -> w``."""
        return len(self.path_basis(v, w))

    @property
    def dimension(self):
        """The dimension of the algebra over its field."""
        return sum(len(s.basis) for s in self._spaces.values())

    def coordinates(self, path):
        """
        Coordinates of a path in ``path_basis(path.source, path.target)``.

        :rtype: numpy.ndarray
        """
        space = self._space(path.source, path.target)
        if space is None:
            return np.zeros(0, dtype=self._field.dtype)
        if path.length > self._bound + 1:
            return np.zeros(len(space.basis), dtype=self._field.dtype)
        unit = np.zeros(len(space.columns), dtype=self._field.dtype)
        unit[space.index[path]] = 1
        return space.reduce(unit)

    def extend(self, path, arrow_id):
        """Coordinates of ``path`` followed by ``arrow_id``."""
        arrow = self._quiver.arrow(arrow_id)
        if arrow.source != path.target:
            raise ValueError(f'Arrow {arrow_id!r} does not start at the end '
                             f'of {path}.')
        return self.coordinates(
            Path(path.source, arrow.target, path.arrows + (arrow.id, )))

    def opposite(self):
        """
        The opposite algebra: arrows reversed and relation words read
        backwards. The result is cached and ``A.opposite().opposite() is A``.
        """
        if self._opposite is None:
            relations = [[(c, p.reversed().arrows) for c, p in rel]
                         for rel in self._relations]
            name = self._name[:-3] if self._name.endswith('^op') else (
                f'{self._name}^op' if self._name else '')
            op = BoundQuiverAlgebra(self._quiver.opposite(), self._field,
                                    relations, self._bound, name)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def reversal_matrix(self, v, w):
        """
        Matrix sending coordinates of paths ``v -> w`` of this algebra to
        coordinates of the reversed paths ``w -> v`` of the opposite.
        """
        op = self.opposite()
        basis = self.path_basis(v, w)
        cols = [op.coordinates(q.reversed()) for q in basis]
        if not cols:
            return Matrix.zeros(self._field, op.dim(w, v), 0)
        return Matrix(self._field, np.array(cols).T)

    def __repr__(self):
        label = self._name or 'BoundQuiverAlgebra'
        return (f'{label}({self._quiver!r}, {self._field}, '
                f'{len(self._relations)} relation(s))')
