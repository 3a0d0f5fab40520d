""" Module for Ext groups and torsionfree modules. """
from .resolution import min_resolution, min_coresolution
from .transpose import transpose
from ..linalg import rank, kernel_basis, rref, hstack
from ..quiver import Representation, hom_basis, hom_map, regular
from ..utils import check_consistency, check_non_negative, check_same_algebra


def _cochain_maps(module, other, i, contravariant):
    """
    The two coboundaries around degree ``i``: ``Hom(P_i, N) -> Hom(P_{i+1},
    N)`` and the one entering degree ``i``, in hom_basis coordinates.
    """
    if contravariant:
        cx = min_resolution(module, i + 1)
        out = hom_map(other, cx.differentials[i], contravariant=True)
        into = (hom_map(other, cx.differentials[i - 1], contravariant=True)
                if i > 0 else None)
        return cx, out, into
    cx = min_coresolution(other, i + 1)
    out = hom_map(module, cx.differentials[i])
    into = hom_map(module, cx.differentials[i - 1]) if i > 0 else None
    return cx, out, into


def ext(module, other, i):
    """
    ``dim Ext^i(M, N)``, the cohomology in degree ``i`` of
    ``Hom(P_., N)`` for the minimal projective resolution ``P_.`` of
    ``M``. For ``i = 0`` it is ``dim Hom(M, N)``.

    :param Representation module: the first argument ``M``.
    :param Representation other: the second argument ``N``.
    :param int i: the degree.
    :rtype: int
    """
    check_consistency([module, other], Representation)
    check_same_algebra(module, other)
    check_non_negative(i, 'i')
    if i == 0:
        return len(hom_basis(module, other))
    _, out, into = _cochain_maps(module, other, i, contravariant=True)
    return out.cols - rank(out) - rank(into)


def ext_via_coresolution(module, other, i):
    """
    ``dim Ext^i(M, N)`` computed on the other side, from ``Hom(M, E^.)``
    for the minimal injective coresolution ``E^.`` of ``N``. Agrees with
    :func:`ext`.

    :rtype: int
    """
    check_consistency([module, other], Representation)
    check_same_algebra(module, other)
    check_non_negative(i, 'i')
    if i == 0:
        return len(hom_basis(module, other))
    _, out, into = _cochain_maps(module, other, i, contravariant=False)
    return out.cols - rank(out) - rank(into)


def ext_cocycles(module, other, i):
    """
    Cocycles ``P_i -> N`` whose classes form a basis of ``Ext^i(M, N)``.
    For ``i = 0`` this is a basis of ``Hom(M, N)``.

    :rtype: list(Morphism)
    """
    check_consistency([module, other], Representation)
    check_same_algebra(module, other)
    check_non_negative(i, 'i')
    if i == 0:
        return hom_basis(module, other)
    cx, out, into = _cochain_maps(module, other, i, contravariant=True)
    basis = hom_basis(cx.terms[i], other)
    cycles = kernel_basis(out)
    if not cycles.cols:
        return []
    boundaries = into
    _, pivots, _ = rref(hstack([boundaries, cycles]))
    chosen = [c - boundaries.cols for c in pivots if c >= boundaries.cols]
    result = []
    for c in chosen:
        column = cycles[:, [c]].array[:, 0]
        phi = None
        for coeff, b in zip(column, basis):
            if coeff:
                term = b * int(coeff)
                phi = term if phi is None else phi + term
        result.append(phi)
    return result


def n_torsionfree(module, n):
    """
    True if ``Ext^i(Tr M, A) = 0`` over the opposite algebra for
    ``1 <= i <= n``.

    :rtype: bool
    """
    check_consistency(module, Representation)
    check_non_negative(n, 'n')
    tr = transpose(module)
    ring = regular(tr.algebra)
    return all(ext(tr, ring, i) == 0 for i in range(1, n + 1))
