""" Module for subcategories add(X) and their approximations. """
import warnings

from ..quiver import (Representation, Morphism, DirectSum, matlis_dual,
                      hom_basis, lift, kernel, row_morphism, random_morphism,
                      zero_module)
from ..utils import (DEFAULT_SEED, DEFAULT_TRIALS, check_consistency,
                     check_same_algebra, default_rng)


class SubcatSpec:
    """
    The full subcategory ``add(G_1 + ... + G_k)`` of direct summands of
    finite sums of the generators.

    Closure of the subcategory under kernels of epimorphisms, needed by
    some gluing statements, cannot be decided here: the caller asserts it
    and :meth:`spot_check_kernels` samples it.

    :param list(Representation) generators: the generators, at least one.
    :param str name: a display name.

    :Example:
        >>> spec = SubcatSpec([regular(A)], 'proj')
        >>> spec.contains(projective(A, 0))
        True
    """

    def __init__(self, generators, name=''):
        generators = list(generators)
        if not generators:
            raise ValueError('A subcategory needs at least one generator.')
        check_consistency(generators, Representation)
        check_same_algebra(*generators)
        self._generators = tuple(generators)
        self._name = name

    @property
    def generators(self):
        """The generators."""
        return self._generators

    @property
    def algebra(self):
        """The algebra of the generators."""
        return self._generators[0].algebra

    @property
    def name(self):
        return self._name or ' + '.join(g.name or '?'
                                        for g in self._generators)

    @property
    def module(self):
        """The direct sum of the generators."""
        return DirectSum(self._generators).module

    def contains(self, module):
        """
        True if ``module`` lies in ``add(X)``: the universal map from a
        sum of generators onto it splits.

        :param Representation module: the module to test.
        :rtype: bool
        """
        if module.is_zero():
            return True
        cover = precover(self, module)
        if not cover.is_surjective():
            return False
        return lift(Morphism.identity(module), cover) is not None

    def dual(self):
        """``add(D X)`` over the opposite algebra."""
        return SubcatSpec([matlis_dual(g) for g in self._generators],
                          f'D({self.name})')

    def spot_check_kernels(self, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
        """
        Sample epimorphisms between sums of at most two generators and
        test whether their kernels stay in the subcategory. A kernel
        outside is reported with a warning; it disproves the closure
        assertion.

        :return: the closure record.
        :rtype: str
        """
        rng = default_rng(seed)
        pool = list(self._generators)
        count = len(pool)
        failed = 0
        for _ in range(trials):
            picks = rng.integers(0, count, size=3)
            source = DirectSum([pool[picks[0]], pool[picks[1]]]).module
            target = pool[picks[2]]
            f = random_morphism(source, target, rng)
            if not f.is_surjective():
                continue
            ker, _ = kernel(f)
            if not self.contains(ker):
                failed += 1
        record = f'closure: asserted + spot-checked ({trials} trials)'
        if failed:
            warnings.warn(f'{failed} sampled kernels of epimorphisms fall '
                          f'outside add({self.name}).')
            record += f', {failed} counterexamples'
        return record

    def __repr__(self):
        return f'SubcatSpec({self.name})'


def precover(spec, module):
    """
    The universal ``add(X)``-precover: the sum, over every generator
    ``G`` and every basis morphism ``b: G -> M``, of ``b``. Every morphism
    from a module of ``add(X)`` to ``M`` factors through it.

    :param SubcatSpec spec: the subcategory.
    :param Representation module: the module ``M``.
    :return: the precover; the zero map from the zero module when no
        generator maps to ``M``.
    :rtype: Morphism
    """
    check_consistency(spec, SubcatSpec)
    check_consistency(module, Representation)
    check_same_algebra(spec.generators[0], module)
    basis = [b for g in spec.generators for b in hom_basis(g, module)]
    if not basis:
        return Morphism.zero(zero_module(module.algebra), module)
    return row_morphism(basis)


def preenvelope(spec, module):
    """
    The universal ``add(X)``-preenvelope ``M -> X^n``, dual to
    :func:`precover`.

    :rtype: Morphism
    """
    check_consistency(spec, SubcatSpec)
    dual = matlis_dual(precover(spec.dual(), matlis_dual(module)))
    return Morphism(module, dual.target, dual.blocks, check=False)
