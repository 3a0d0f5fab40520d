""" Module for radicals, socles, tops and minimal covers and envelopes. """
from ..linalg import Matrix, column_space, kernel_basis, complement_columns, \
    hstack, vstack
from ..quiver import (Representation, Morphism, DirectSum, subrepresentation,
                      quotient_by, matlis_dual, projective,
                      projective_morphism, row_morphism)
from ..utils import check_consistency


def _radical_bases(module):
    bases = []
    for w in module.algebra.vertices:
        incoming = [
            module.maps[a.id]
            for a in module.algebra.quiver.arrows
            if a.target == w
        ]
        if incoming:
            bases.append(column_space(hstack(incoming)))
        else:
            bases.append(Matrix.zeros(module.field, module.dims[w], 0))
    return bases


def _socle_bases(module):
    bases = []
    for v in module.algebra.vertices:
        outgoing = [
            module.maps[a.id]
            for a in module.algebra.quiver.arrows
            if a.source == v
        ]
        if outgoing:
            bases.append(kernel_basis(vstack(outgoing)))
        else:
            bases.append(Matrix.identity(module.field, module.dims[v]))
    return bases


def radical(module):
    """
    The radical: at every vertex the span of the images of the incoming
    arrows.

    :return: the radical and its inclusion.
    :rtype: tuple(Representation, Morphism)
    """
    check_consistency(module, Representation)
    return subrepresentation(module, _radical_bases(module))


def socle(module):
    """
    The socle: at every vertex the common kernel of the outgoing arrows.

    :return: the socle and its inclusion.
    :rtype: tuple(Representation, Morphism)
    """
    check_consistency(module, Representation)
    return subrepresentation(module, _socle_bases(module))


def top(module):
    """
    The top ``M / rad M``, a semisimple module.

    :return: the top and the projection onto it.
    :rtype: tuple(Representation, Morphism)
    """
    check_consistency(module, Representation)
    return quotient_by(module, _radical_bases(module))


def top_vertices(module):
    """
    The vertices of the indecomposable projectives in the projective cover,
    with multiplicity, in vertex order.

    :rtype: list(int)
    """
    return [
        v for v, b in enumerate(_radical_bases(module))
        for _ in range(module.dims[v] - b.cols)
    ]


def cover_data(module):
    """
    The projective cover together with its decomposition.

    :return: the cover ``P -> M``, the direct sum ``P`` and the vertices of
        its summands.
    :rtype: tuple(Morphism, DirectSum, list(int))
    """
    check_consistency(module, Representation)
    algebra = module.algebra
    parts, vertices = [], []
    for v, rad in enumerate(_radical_bases(module)):
        generators = complement_columns(rad, module.dims[v])
        for j in range(generators.cols):
            parts.append(
                projective_morphism(algebra, v, module, generators[:, [j]]))
            vertices.append(v)
    total = DirectSum([projective(algebra, v) for v in vertices], algebra)
    if not parts:
        return Morphism.zero(total.module, module), total, vertices
    return row_morphism(parts, total), total, vertices


def projective_cover(module):
    """
    The projective cover ``P -> M``: one ``P(v)`` per basis vector of the
    top at ``v``, each sent to a generator lifting that vector. The kernel
    lies in the radical of ``P``.

    :Example:
        >>> projective_cover(simple(A, 0)).source.dims
        (1, 1)

    :rtype: Morphism
    """
    return cover_data(module)[0]


def injective_envelope(module):
    """
    The injective envelope ``M -> I``, the dual of the projective cover of
    ``D M`` over the opposite algebra.

    :rtype: Morphism
    """
    check_consistency(module, Representation)
    dual = matlis_dual(projective_cover(matlis_dual(module)))
    return Morphism(module, dual.target, dual.blocks, check=False)


def is_projective(module):
    """True if the projective cover is an isomorphism."""
    return projective_cover(module).is_injective()


def is_injective(module):
    """True if the injective envelope is an isomorphism."""
    return is_projective(matlis_dual(module))


def summand_label(vertices, letter):
    """
    A compact label of a sum of indecomposables, ``'I(0)^2+I(1)'``;
    ``'0'`` for the empty sum.
    """
    counts = {}
    for v in vertices:
        counts[v] = counts.get(v, 0) + 1
    if not counts:
        return '0'
    return '+'.join(f'{letter}({v})' + (f'^{k}' if k > 1 else '')
                    for v, k in sorted(counts.items()))


def projective_label(module):
    """Label of a projective module by the vertices of its top."""
    return summand_label(top_vertices(module), 'P')


def injective_label(module):
    """Label of an injective module by the vertices of its socle."""
    return summand_label(top_vertices(matlis_dual(module)), 'I')
