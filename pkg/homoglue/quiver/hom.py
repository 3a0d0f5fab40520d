""" Module for Hom spaces and linear diagram solving. """
import numpy as np

from .morphism import Morphism
from ..linalg import Matrix, kernel_basis, solve, rank, hstack
from ..utils import check_same_algebra


def _offsets(source, target):
    offsets, total = [], 0
    for s, t in zip(source.dims, target.dims):
        offsets.append(total)
        total += s * t
    return offsets, total


def _commutation_rows(source, target):
    """
    Linear system on the row-major entries of the blocks ``X_v`` whose
    solutions are the morphisms ``source -> target``: for every arrow
    ``a: v -> w`` the equation ``target_a X_v - X_w source_a = 0``.
    """
    field = source.field
    offsets, total = _offsets(source, target)
    blocks = []
    for arrow in source.algebra.quiver.arrows:
        v, w = arrow.source, arrow.target
        s_map = source.maps[arrow.id].array
        t_map = target.maps[arrow.id].array
        rows = np.zeros((target.dims[w] * source.dims[v], total),
                        dtype=field.dtype)
        left = np.kron(t_map, np.eye(source.dims[v], dtype=np.int64))
        right = np.kron(np.eye(target.dims[w], dtype=np.int64), s_map.T)
        rows[:, offsets[v]:offsets[v] + left.shape[1]] += left
        rows[:, offsets[w]:offsets[w] + right.shape[1]] -= right
        blocks.append(rows % field.p)
    if not blocks:
        return np.zeros((0, total), dtype=field.dtype), offsets, total
    return np.vstack(blocks).astype(field.dtype), offsets, total


def _unvec(source, target, column, offsets):
    blocks = []
    for v, (s, t) in enumerate(zip(source.dims, target.dims)):
        chunk = column[offsets[v]:offsets[v] + s * t]
        blocks.append(Matrix(source.field, chunk.reshape(t, s),
                             shape=(t, s)))
    return Morphism(source, target, blocks, check=False)


def hom_basis(source, target):
    """
    A basis of the space of morphisms ``source -> target``, obtained as the
    null space of the commuting-square system.

    :param Representation source: the domain.
    :param Representation target: the codomain.
    :rtype: list(Morphism)
    :raises ValueError: if the representations live over different algebras.

    :Example:
        >>> len(hom_basis(projective(A, 0), simple(A, 0)))
        1
    """
    check_same_algebra(source, target)
    system, offsets, total = _commutation_rows(source, target)
    if total == 0:
        return []
    basis = kernel_basis(Matrix(source.field, system, shape=system.shape))
    return [
        _unvec(source, target, basis.array[:, j], offsets)
        for j in range(basis.cols)
    ]


def _solve_morphism(source, target, extra_rows, extra_rhs):
    """Find a morphism satisfying extra linear constraints, or None."""
    field = source.field
    system, offsets, total = _commutation_rows(source, target)
    rows = np.vstack([system] + extra_rows) if extra_rows else system
    rhs_parts = [np.zeros(system.shape[0], dtype=field.dtype)] + extra_rhs
    rhs = np.concatenate(rhs_parts).reshape(-1, 1)
    a = Matrix(field, rows, shape=(rows.shape[0], total))
    b = Matrix(field, rhs, shape=(rhs.shape[0], 1))
    x = solve(a, b)
    if x is None:
        return None
    return _unvec(source, target, x.array[:, 0], offsets)


def lift(f, g):
    """
    Find ``u`` with ``g @ u == f``, i.e. factor ``f: T -> M`` through
    ``g: X -> M``. The first solution of the linear system is returned.

    :param Morphism f: the morphism to lift.
    :param Morphism g: the morphism to lift through.
    :return: the lift, or ``None`` when ``f`` does not factor.
    :rtype: Morphism or None
    """
    check_same_algebra(f, g)
    if f.target != g.target:
        raise ValueError('lift needs morphisms with a common target.')
    source, target = f.source, g.source
    offsets, total = _offsets(source, target)
    rows, rhs = [], []
    for v in range(len(source.dims)):
        block = np.zeros((g.target.dims[v] * source.dims[v], total),
                         dtype=source.field.dtype)
        coeff = np.kron(g.blocks[v].array,
                        np.eye(source.dims[v], dtype=np.int64))
        block[:, offsets[v]:offsets[v] + coeff.shape[1]] = coeff
        rows.append(block)
        rhs.append(f.blocks[v].array.reshape(-1))
    return _solve_morphism(source, target, rows, rhs)


def extend(f, g):
    """
    Find ``u`` with ``u @ g == f``, i.e. extend ``f: M -> T`` along
    ``g: M -> X``.

    :return: the extension, or ``None`` when it does not exist.
    :rtype: Morphism or None
    """
    check_same_algebra(f, g)
    if f.source != g.source:
        raise ValueError('extend needs morphisms with a common source.')
    source, target = g.target, f.target
    offsets, total = _offsets(source, target)
    rows, rhs = [], []
    for v in range(len(source.dims)):
        block = np.zeros((target.dims[v] * g.source.dims[v], total),
                         dtype=source.field.dtype)
        coeff = np.kron(np.eye(target.dims[v], dtype=np.int64),
                        g.blocks[v].array.T)
        block[:, offsets[v]:offsets[v] + coeff.shape[1]] = coeff
        rows.append(block)
        rhs.append(f.blocks[v].array.reshape(-1))
    return _solve_morphism(source, target, rows, rhs)


def coordinates(morphisms, basis):
    """
    Coordinates of morphisms in a basis of their Hom space, as the columns
    of a matrix.

    :raises ValueError: if a morphism is outside the span of ``basis``.
    """
    field = basis[0].field if basis else morphisms[0].field
    size = morphisms[0].vector().rows if morphisms else 0
    if not basis:
        for m in morphisms:
            if not m.is_zero():
                raise ValueError('Nonzero morphism in a zero Hom space.')
        return Matrix.zeros(field, 0, len(morphisms))
    if not morphisms:
        return Matrix.zeros(field, len(basis), 0)
    span = hstack([b.vector() for b in basis])
    values = hstack([m.vector() for m in morphisms])
    x = solve(span, values)
    if x is None:
        raise ValueError('Morphism outside the span of the given basis.')
    return x


def hom_map(module, g, contravariant=False):
    """
    The linear map ``Hom(C, g)`` (or ``Hom(g, C)`` when ``contravariant``)
    in the bases returned by :func:`hom_basis`.

    :param Representation module: the fixed argument ``C``.
    :param Morphism g: the morphism ``X -> Y``.
    :return: a ``dim Hom(C, Y) x dim Hom(C, X)`` matrix (transposed roles
        in the contravariant case).
    :rtype: Matrix
    """
    if contravariant:
        domain = hom_basis(g.target, module)
        codomain = hom_basis(g.source, module)
        images = [phi @ g for phi in domain]
    else:
        domain = hom_basis(module, g.source)
        codomain = hom_basis(module, g.target)
        images = [g @ phi for phi in domain]
    if not images:
        return Matrix.zeros(module.field, len(codomain), 0)
    return coordinates(images, codomain)


def is_hom_epic(module, g, contravariant=False):
    """True if ``Hom(C, g)`` (or ``Hom(g, C)``) is surjective."""
    matrix = hom_map(module, g, contravariant)
    return rank(matrix) == matrix.rows
