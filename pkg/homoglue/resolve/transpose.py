""" Module for the Auslander transpose. """
from .cover import cover_data
from ..quiver import (Morphism, Representation, DirectSum, kernel, cokernel,
                      projective, projective_morphism, zero_module)
from ..utils import check_consistency


def _dual_component(algebra, x, w, v):
    """
    ``(-)^*`` of the map ``P(v) -> P(w)`` sending ``e_v`` to the path
    combination ``x`` (coordinates in ``path_basis(w, v)``): left
    multiplication ``P_op(w) -> P_op(v)`` sending ``e_w`` to the reversed
    combination.
    """
    op = algebra.opposite()
    element = algebra.reversal_matrix(w, v) @ x
    return projective_morphism(op, w, projective(op, v), element)


def presentation_dual(module):
    """
    The map ``P_0^* -> P_1^*`` obtained by applying ``Hom(-, A)`` to the
    minimal projective presentation ``P_1 -> P_0 -> M -> 0``.

    :rtype: Morphism
    """
    check_consistency(module, Representation)
    algebra = module.algebra
    op = algebra.opposite()
    cover, top_sum, top_vs = cover_data(module)
    _, inclusion = kernel(cover)
    syz_cover, next_sum, next_vs = cover_data(inclusion.source)
    d1 = inclusion @ syz_cover
    source = DirectSum([projective(op, w) for w in top_vs], op)
    target = DirectSum([projective(op, v) for v in next_vs], op)
    total = Morphism.zero(source.module, target.module)
    for i, w in enumerate(top_vs):
        for j, v in enumerate(next_vs):
            block = top_sum.projections[i] @ d1 @ next_sum.injections[j]
            x = block.blocks[v][:, [0]]
            if x.is_zero():
                continue
            component = _dual_component(algebra, x, w, v)
            total = total + (target.injections[j] @ component @
                             source.projections[i])
    return total


def transpose(module):
    """
    The transpose ``Tr M = Coker(P_0^* -> P_1^*)``, a module over the
    opposite algebra. Projective modules have transpose zero.

    :Example:
        >>> transpose(projective(A, 0)).is_zero()
        True

    :rtype: Representation
    """
    check_consistency(module, Representation)
    if module.is_zero():
        return zero_module(module.algebra.opposite())
    tr, _ = cokernel(presentation_dual(module))
    return tr.renamed(f'Tr({module.name})' if module.name else '')
