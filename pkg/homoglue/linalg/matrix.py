""" Module for dense matrices over prime fields. """
import numpy as np

from .field import PrimeField
from ..utils import check_consistency, default_rng


class Matrix:
    """
    An immutable dense matrix with entries in ``[0, p)``.

    Empty shapes such as ``(0, 3)`` or ``(2, 0)`` are legal and are handled
    by every operation of this module; they model maps out of or into the
    zero space.

    :Example:
        >>> F = PrimeField(5)
        >>> m = Matrix(F, [[1, 2], [2, 4]])
        >>> m.rank()
        1
    """

    __slots__ = ('_field', '_array')

    def __init__(self, field, entries, shape=None):
        """
        :param PrimeField field: the field of the entries.
        :param entries: nested lists or a numpy array of integers. Entries
            are reduced modulo ``p``.
        :param tuple shape: required when ``entries`` is flat or empty.
        :raises ValueError: if the entries do not describe a 2D array.
        """
        check_consistency(field, PrimeField)
        array = field.reduce(entries)
        if shape is not None:
            array = array.reshape(shape)
        if array.ndim != 2:
            raise ValueError('A Matrix needs a 2D array of entries, got '
                             f'{array.ndim} dimension(s); pass shape=.')
        array.flags.writeable = False
        self._field = field
        self._array = array

    @classmethod
    def _wrap(cls, field, array):
        # trusted fast path: array already reduced and owned
        obj = cls.__new__(cls)
        array.flags.writeable = False
        obj._field = field
        obj._array = array
        return obj

    @classmethod
    def zeros(cls, field, rows, cols):
        """The ``rows x cols`` zero matrix."""
        return cls._wrap(field, np.zeros((rows, cols), dtype=field.dtype))

    @classmethod
    def identity(cls, field, n):
        """The ``n x n`` identity matrix."""
        return cls._wrap(field, np.eye(n, dtype=np.int64).astype(field.dtype))

    @classmethod
    def random(cls, field, rows, cols, rng=None):
        """
        A uniformly random matrix.

        :param numpy.random.Generator rng: generator or seed.
        """
        rng = default_rng(rng)
        array = rng.integers(0, field.p, size=(rows, cols), dtype=np.int64)
        return cls._wrap(field, array.astype(field.dtype))

    @property
    def field(self):
        """The field of the entries."""
        return self._field

    @property
    def rows(self):
        """Number of rows."""
        return self._array.shape[0]

    @property
    def cols(self):
        """Number of columns."""
        return self._array.shape[1]

    @property
    def shape(self):
        """The pair ``(rows, cols)``."""
        return self._array.shape

    @property
    def array(self):
        """A read-only numpy view of the entries."""
        return self._array

    @property
    def entries(self):
        """The entries in row-major order, as python integers."""
        return [int(x) for x in self._array.ravel()]

    @property
    def T(self):
        """The transpose."""
        return Matrix._wrap(self._field, self._array.T.copy())

    def key(self):
        """A hashable key identifying the matrix exactly."""
        return (self._field.p, self.shape, tuple(self.entries))

    def is_zero(self):
        """True if every entry vanishes."""
        return not np.any(self._array)

    def _check_field(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f'Expected a Matrix, got {type(other).__name__}.')
        if other._field != self._field:
            raise ValueError(f'Field mismatch: {self._field} and '
                             f'{other._field}.')

    def __matmul__(self, other):
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError(f'Cannot multiply a {self.shape} matrix by a '
                             f'{other.shape} matrix.')
        if self.cols == 0:
            return Matrix.zeros(self._field, self.rows, other.cols)
        product = np.dot(self._array, other._array) % self._field.p
        return Matrix._wrap(self._field, product)

    def __add__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError(f'Shape mismatch: {self.shape} and '
                             f'{other.shape}.')
        return Matrix._wrap(self._field,
                            (self._array + other._array) % self._field.p)

    def __sub__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError(f'Shape mismatch: {self.shape} and '
                             f'{other.shape}.')
        return Matrix._wrap(self._field,
                            (self._array - other._array) % self._field.p)

    def __neg__(self):
        return Matrix._wrap(self._field, (-self._array) % self._field.p)

    def __mul__(self, scalar):
        if isinstance(scalar, Matrix):
            raise TypeError('Use @ for matrix products.')
        scalar = int(scalar) % self._field.p
        return Matrix._wrap(self._field, (self._array * scalar) %
                            self._field.p)

    __rmul__ = __mul__

    def __getitem__(self, index):
        sub = self._array[index]
        if sub.ndim != 2:
            raise IndexError('Matrix indexing must keep two dimensions.')
        return Matrix._wrap(self._field, sub.copy())

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self._field == other._field and self.shape == other.shape
                and np.array_equal(self._array, other._array))

    __hash__ = None

    def __repr__(self):
        return f'Matrix({self._field}, {self._array.tolist()})'

    def rref(self):
        """See :func:`rref`."""
        return rref(self)

    def rank(self):
        """See :func:`rank`."""
        return rank(self)

    def kernel_basis(self):
        """See :func:`kernel_basis`."""
        return kernel_basis(self)

    def solve(self, b):
        """See :func:`solve`."""
        return solve(self, b)

    def inverse(self):
        """See :func:`inverse`."""
        return inverse(self)

    def to_galois(self):
        """
        The same matrix as a ``galois`` field array, handy to cross-check
        ranks with an independent implementation.
        """
        GF = self._field.galois_field()
        return GF(self._array.astype(np.int64))


def rref(m):
    """
    Reduced row-echelon form by Gaussian elimination with first-nonzero
    pivoting. The result is deterministic and, being the reduced form,
    unique.

    :param Matrix m: the matrix to reduce.
    :return: the reduced matrix, the pivot columns and the rank.
    :rtype: tuple(Matrix, list(int), int)
    """
    field = m.field
    p = field.p
    a = np.array(m.array, dtype=field.dtype)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * field.inv(a[r, c])) % p
        col = a[:, c].copy()
        col[r] = 0
        if np.any(col):
            a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return Matrix._wrap(field, a), pivots, len(pivots)


def rank(m):
    """Rank of ``m``."""
    return rref(m)[2]


def kernel_basis(m):
    """
    Basis of the right null space, as the columns of the returned matrix.
    There is one column per non-pivot column of ``rref(m)``.

    :param Matrix m: a ``r x c`` matrix.
    :return: a ``c x (c - rank)`` matrix ``K`` with ``m @ K == 0``.
    :rtype: Matrix
    """
    field = m.field
    reduced, pivots, _ = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = np.zeros((m.cols, len(free)), dtype=field.dtype)
    red = reduced.array
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-red[i, f]) % field.p
    return Matrix._wrap(field, basis)


def left_kernel_basis(m):
    """Basis of the left null space, as the rows of the returned matrix."""
    return kernel_basis(m.T).T


def column_space(m):
    """The pivot columns of ``m``: a basis of its column space."""
    _, pivots, _ = rref(m)
    return m[:, pivots]


def complement_columns(m, n=None):
    """
    Unit vectors completing the column space of ``m`` to the whole space.
    The first unit vectors (in index order) that are not already spanned
    are chosen.

    :param Matrix m: a ``n x k`` matrix.
    :return: a ``n x (n - rank m)`` matrix of unit columns.
    :rtype: Matrix
    """
    n = m.rows if n is None else n
    aug = hstack([m, Matrix.identity(m.field, n)])
    _, pivots, _ = rref(aug)
    chosen = [c - m.cols for c in pivots if c >= m.cols]
    return Matrix.identity(m.field, n)[:, chosen]


def solve(a, b):
    """
    Solve ``a @ x == b``.

    :param Matrix a: the coefficient matrix.
    :param Matrix b: the right-hand side, with as many rows as ``a``.
    :return: a solution, or ``None`` when some column of ``b`` lies outside
        the column space of ``a``.
    :rtype: Matrix or None
    :raises ValueError: if the row counts differ.
    """
    if a.rows != b.rows:
        raise ValueError(f'solve needs matching row counts, got {a.shape} '
                         f'and {b.shape}.')
    field = a.field
    reduced, pivots, _ = rref(hstack([a, b]))
    if pivots and pivots[-1] >= a.cols:
        return None
    x = np.zeros((a.cols, b.cols), dtype=field.dtype)
    red = reduced.array
    for i, pc in enumerate(pivots):
        x[pc] = red[i, a.cols:]
    return Matrix._wrap(field, x)


def inverse(m):
    """
    Inverse of a square matrix.

    :raises ValueError: if ``m`` is not square or is singular.
    """
    if m.rows != m.cols:
        raise ValueError(f'Only square matrices are invertible, got '
                         f'{m.shape}.')
    if rank(m) < m.rows:
        raise ValueError('Singular matrix.')
    return solve(m, Matrix.identity(m.field, m.rows))


def hstack(matrices):
    """Horizontal concatenation of a non-empty list of matrices."""
    if not matrices:
        raise ValueError('hstack needs at least one matrix.')
    field = matrices[0].field
    rows = {m.rows for m in matrices}
    if len(rows) > 1:
        raise ValueError(f'hstack needs equal row counts, got {rows}.')
    array = np.hstack([m.array for m in matrices]).astype(field.dtype)
    return Matrix._wrap(field, array)


def vstack(matrices):
    """Vertical concatenation of a non-empty list of matrices."""
    if not matrices:
        raise ValueError('vstack needs at least one matrix.')
    field = matrices[0].field
    cols = {m.cols for m in matrices}
    if len(cols) > 1:
        raise ValueError(f'vstack needs equal column counts, got {cols}.')
    array = np.vstack([m.array for m in matrices]).astype(field.dtype)
    return Matrix._wrap(field, array)


def block_diag(matrices):
    """Block diagonal matrix of a non-empty list of matrices."""
    if not matrices:
        raise ValueError('block_diag needs at least one matrix.')
    field = matrices[0].field
    rows = sum(m.rows for m in matrices)
    cols = sum(m.cols for m in matrices)
    array = np.zeros((rows, cols), dtype=field.dtype)
    r = c = 0
    for m in matrices:
        array[r:r + m.rows, c:c + m.cols] = m.array
        r += m.rows
        c += m.cols
    return Matrix._wrap(field, array)
