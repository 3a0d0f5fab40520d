""" Module for seeded random modules, morphisms and exact sequences. """
from .constructions import (DirectSum, cokernel, image, kernel, row_morphism,
                            corestriction)
from .duality import matlis_dual
from .hom import hom_basis
from .morphism import Morphism
from .sequence import ShortExactSequence
from .standard import projective, projective_morphism, simple
from ..linalg import Matrix
from ..utils import DEFAULT_MAX_DIM, default_rng, check_non_negative

_ATTEMPTS = 32


def random_element(module, v, rng=None):
    """A uniformly random vector of ``module`` at vertex ``v``."""
    rng = default_rng(rng)
    return Matrix.random(module.field, module.dims[v], 1, rng)


def random_morphism(source, target, rng=None):
    """
    A random morphism, a uniformly random combination of
    :func:`hom_basis`.

    :rtype: Morphism
    """
    rng = default_rng(rng)
    result = Morphism.zero(source, target)
    for phi in hom_basis(source, target):
        result = result + phi * int(rng.integers(0, source.field.p))
    return result


def _random_projective(algebra, count, rng):
    vertices = [int(v) for v in rng.integers(0, algebra.vertex_count, count)]
    summands = [projective(algebra, v) for v in vertices]
    return DirectSum(summands, algebra), vertices


def _random_map_into(algebra, source, vertices, target, rng):
    """A random morphism from ``source = P(v_1) + ... + P(v_k)``."""
    if not vertices:
        return Morphism.zero(source.module, target)
    parts = [
        projective_morphism(algebra, v, target,
                            random_element(target, v, rng)) for v in vertices
    ]
    return row_morphism(parts, source)


def random_module(algebra, max_dim=DEFAULT_MAX_DIM, rng=None):
    """
    A random nonzero module of total dimension at most ``max_dim``: the
    cokernel of a random morphism between sums of indecomposable
    projectives, dualized from the opposite algebra half of the time so
    that modules with large socle are drawn as well.

    When no attempt fits in ``max_dim`` a random simple module is returned.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param int max_dim: bound on the total dimension.
    :param rng: a seed or a ``numpy.random.Generator``.
    :rtype: Representation
    """
    check_non_negative(max_dim, 'max_dim')
    rng = default_rng(rng)
    for _ in range(_ATTEMPTS):
        dualize = bool(rng.integers(0, 2))
        base = algebra.opposite() if dualize else algebra
        target, _ = _random_projective(base, int(rng.integers(1, 3)), rng)
        source, vertices = _random_projective(base, int(rng.integers(0, 3)),
                                              rng)
        f = _random_map_into(base, source, vertices, target.module, rng)
        module, _ = cokernel(f)
        if dualize:
            module = matlis_dual(module)
        if 0 < module.total_dim <= max_dim:
            return module.renamed('M')
    return simple(algebra, int(rng.integers(0, algebra.vertex_count)))


def random_ses(algebra, max_dim=DEFAULT_MAX_DIM, rng=None):
    """
    A random short exact sequence. Two shapes are drawn with equal
    probability: ``0 -> <m> -> M -> M/<m> -> 0`` for the submodule
    generated by a random element ``m`` of a random module, and
    ``0 -> Ker f -> P -> Im f -> 0`` for a random morphism ``f`` out of a
    sum of projectives.

    :rtype: ShortExactSequence
    """
    rng = default_rng(rng)
    if rng.integers(0, 2):
        module = random_module(algebra, max_dim, rng)
        support = [v for v, d in enumerate(module.dims) if d]
        v = support[int(rng.integers(0, len(support)))]
        generator = projective_morphism(algebra, v, module,
                                        random_element(module, v, rng))
        _, inclusion = image(generator)
        return ShortExactSequence.from_injection(inclusion)
    source, vertices = _random_projective(algebra, int(rng.integers(1, 3)),
                                          rng)
    target = random_module(algebra, max_dim, rng)
    f = _random_map_into(algebra, source, vertices, target, rng)
    _, inclusion = image(f)
    onto = corestriction(f, inclusion)
    return ShortExactSequence(kernel(onto)[1], onto)
