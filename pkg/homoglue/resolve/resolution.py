""" Module for minimal projective resolutions and injective coresolutions. """
from functools import lru_cache

from .complex import AugmentedComplex, RESOLUTION
from .cover import projective_cover
from ..quiver import ModuleKey, Representation, matlis_dual, kernel
from ..utils import DEFAULT_CACHE_SIZE, check_consistency, check_non_negative


def min_resolution(module, length):
    """
    The minimal projective resolution ``P_length -> ... -> P_0 -> M``.

    Once a syzygy vanishes all further terms are the zero module, so the
    complex always has ``length + 1`` terms.

    :param Representation module: the module ``M``.
    :param int length: the index of the last term.
    :rtype: AugmentedComplex
    """
    check_consistency(module, Representation)
    check_non_negative(length, 'length')
    cx = _min_resolution(ModuleKey(module), length)
    return cx if cx.module is module else cx.rebased(module)


@lru_cache(maxsize=DEFAULT_CACHE_SIZE)
def _min_resolution(handle, length):
    module = handle.module
    augmentation = projective_cover(module)
    terms = [augmentation.source]
    differentials = []
    _, inclusion = kernel(augmentation)
    for _ in range(length):
        cover = projective_cover(inclusion.source)
        differentials.append(inclusion @ cover)
        terms.append(cover.source)
        _, inclusion = kernel(cover)
    return AugmentedComplex(RESOLUTION, module, terms, differentials,
                            augmentation)


def min_coresolution(module, length):
    """
    The minimal injective coresolution ``M -> I^0 -> ... -> I^length``,
    the dual of the minimal projective resolution of ``D M``.

    :rtype: AugmentedComplex
    """
    check_consistency(module, Representation)
    dual = min_resolution(matlis_dual(module), length).dual()
    return dual.rebased(module)


def syzygy(module, t=1):
    """
    The ``t``-th syzygy ``Omega^t M``, the kernel of ``P_{t-1} -> P_{t-2}``
    (of the augmentation for ``t = 1``); ``Omega^0 M = M``.

    :return: the syzygy and its inclusion into ``P_{t-1}`` (``None`` for
        ``t = 0``).
    :rtype: tuple(Representation, Morphism)
    """
    check_non_negative(t, 't')
    if t == 0:
        return module, None
    return min_resolution(module, t - 1).kernel(t - 1)


def cosyzygy(module, t=1):
    """
    The ``t``-th cosyzygy ``Omega^{-t} M``, the cokernel of
    ``I^{t-2} -> I^{t-1}`` (of the coaugmentation for ``t = 1``).

    :return: the cosyzygy and the projection from ``I^{t-1}`` (``None`` for
        ``t = 0``).
    :rtype: tuple(Representation, Morphism)
    """
    check_non_negative(t, 't')
    if t == 0:
        return module, None
    return min_coresolution(module, t - 1).cokernel(t - 1)
