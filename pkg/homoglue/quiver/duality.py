""" Module for the Matlis duality D = Hom_k(-, k). """
from .morphism import Morphism
from .representation import Representation


def matlis_dual(obj):
    """
    The vector-space dual. A representation of ``A`` becomes a
    representation of ``A.opposite()`` with the same dimension vector and
    transposed matrices; a morphism ``f: M -> N`` becomes
    ``D f: D N -> D M`` with transposed blocks.

    Since ``A.opposite().opposite() is A``, applying the duality twice gives
    back an equal object.

    :param obj: a :class:`Representation` or a :class:`Morphism`.
    :raises TypeError: for any other input.
    """
    if isinstance(obj, Representation):
        op = obj.algebra.opposite()
        maps = {a: m.T for a, m in obj.maps.items()}
        name = f'D({obj.name})' if obj.name else ''
        return Representation(op, obj.dims, maps, name=name, check=False)
    if isinstance(obj, Morphism):
        return Morphism(matlis_dual(obj.target),
                        matlis_dual(obj.source), [b.T for b in obj.blocks],
                        check=False)
    raise TypeError(f'Cannot dualize a {type(obj).__name__}.')


def evaluation(module):
    """
    The canonical evaluation ``M -> D(D(M))``. With the transposition model
    of the duality it has identity blocks; it is returned as a morphism so
    callers can verify it is an isomorphism.

    :rtype: Morphism
    """
    double = matlis_dual(matlis_dual(module))
    return Morphism(module, double,
                    Morphism.identity(module).blocks,
                    check=True)
