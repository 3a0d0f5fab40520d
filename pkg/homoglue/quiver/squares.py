""" Module for Hom-exactness of pull-back and push-out squares. """
from .constructions import Pullback, Pushout
from .hom import is_hom_epic


def pullback_preserves_hom_epi(f, g, module):
    """
    For the pull-back ``P`` of ``f: X -> Z`` and ``g: Y -> Z``, with
    ``p1: P -> X`` the pull-back of ``g`` along ``f``: whenever
    ``Hom(C, g)`` is epic so is ``Hom(C, p1)``.

    :param Morphism f: the bottom map.
    :param Morphism g: the right-hand map.
    :param Representation module: the test module ``C``.
    :return: ``(hypothesis, conclusion)``; ``hypothesis`` and not
        ``conclusion`` is a counterexample.
    :rtype: tuple(bool, bool)
    """
    square = Pullback(f, g)
    return is_hom_epic(module, g), is_hom_epic(module, square.p1)


def pushout_preserves_hom_epi(f, g, module):
    """
    For the push-out ``Q`` of ``f: Z -> X`` and ``g: Z -> Y``, with
    ``i1: X -> Q`` the push-out of ``g`` along ``f``: whenever
    ``Hom(g, C)`` is epic so is ``Hom(i1, C)``.

    :rtype: tuple(bool, bool)
    """
    square = Pushout(f, g)
    return (is_hom_epic(module, g, contravariant=True),
            is_hom_epic(module, square.i1, contravariant=True))
