""" Module for proper resolutions relative to a subcategory. """
import warnings
from functools import cached_property

from .subcat import SubcatSpec, precover
from ..linalg import kernel_basis
from ..quiver import (Morphism, Representation, matlis_dual, kernel, image,
                      corestriction, hom_basis, hom_map, is_hom_epic)
from ..resolve import AugmentedComplex, ext
from ..resolve.complex import RESOLUTION
from ..utils import (DEFAULT_SEED, DEFAULT_TRIALS, check_consistency,
                     check_non_negative, default_rng)


class ProperResolution:
    """
    An augmented complex whose terms are meant to lie in a subcategory,
    together with the checks that make it a proper (``Hom(C, -)``-exact)
    resolution, or a coproper (``Hom(-, C)``-exact) coresolution.

    The flags are computed on first access:

    * :attr:`in_subcategory`: every term lies in ``add(X)``;
    * :attr:`proper`: the complex is exact and stays exact under
      ``Hom(G, -)`` for every generator ``G``;
    * :attr:`strong`: moreover ``Ext^1(G, K_i) = 0`` for the images
      ``K_i = Im(T_i -> T_{i-1})``, ``i >= 1``.

    Coresolutions are checked through their dual resolution.

    :param AugmentedComplex complex: the complex.
    :param SubcatSpec spec: the subcategory.
    :param list witnesses: short exact sequences produced while the
        complex was built, kept as evidence.
    """

    def __init__(self, complex, spec, witnesses=()):
        check_consistency(complex, AugmentedComplex)
        check_consistency(spec, SubcatSpec)
        if complex.algebra is not spec.algebra:
            raise ValueError('The complex and the subcategory live over '
                             'different algebras.')
        self.complex = complex
        self.spec = spec
        self.witnesses = list(witnesses)

    @classmethod
    def from_complex(cls, complex, spec):
        """Wrap an existing complex, e.g. a minimal projective resolution."""
        return cls(complex, spec)

    @property
    def module(self):
        return self.complex.module

    @property
    def terms(self):
        return self.complex.terms

    @property
    def length(self):
        return self.complex.length

    @property
    def is_resolution(self):
        return self.complex.is_resolution

    @cached_property
    def exact(self):
        return self.complex.is_exact()

    @cached_property
    def in_subcategory(self):
        return all(self.spec.contains(t) for t in self.terms)

    @cached_property
    def proper(self):
        return self.check_proper()

    @cached_property
    def strong(self):
        return self.check_strong()

    def _onto_images(self):
        """Each map of the complex corestricted onto its image."""
        maps = self.complex.maps()
        return [corestriction(f, image(f)[1]) for f in maps]

    def check_proper(self):
        """
        True if the complex is exact and every generator sees every map
        ``T_i -> K_i`` onto its image as a surjection on ``Hom``.

        :rtype: bool
        """
        if not self.is_resolution:
            return self.dual().check_proper()
        if not self.exact:
            return False
        return all(
            is_hom_epic(g, f) for f in self._onto_images()
            for g in self.spec.generators)

    def check_strong(self):
        """
        True if the complex is proper and ``Ext^1(G, K_i)`` vanishes for
        every generator ``G`` and every image ``K_i`` with ``i >= 1`` up to
        the last computed term.

        :rtype: bool
        """
        if not self.is_resolution:
            return self.dual().check_strong()
        if not self.proper:
            return False
        for level in range(self.length):
            k, _ = self.complex.kernel(level)
            if any(ext(g, k, 1) for g in self.spec.generators):
                return False
        return True

    def dual(self):
        """The termwise dual, relative to ``add(D X)``."""
        return ProperResolution(self.complex.dual(), self.spec.dual(),
                                [w.dual() for w in self.witnesses])

    def rebased(self, module):
        """The same resolution with an equal module as resolved object."""
        return ProperResolution(self.complex.rebased(module), self.spec,
                                self.witnesses)

    def __len__(self):
        return len(self.complex)

    def __repr__(self):
        return (f'ProperResolution({self.complex!r}, {self.spec!r})')


def _iterate(approximate, module, length):
    """Resolve by repeated approximation of the stage kernels."""
    augmentation = approximate(module)
    terms, differentials = [augmentation.source], []
    _, inclusion = kernel(augmentation)
    for _ in range(length):
        cover = approximate(inclusion.source)
        differentials.append(inclusion @ cover)
        terms.append(cover.source)
        _, inclusion = kernel(cover)
    return AugmentedComplex(RESOLUTION, module, terms, differentials,
                            augmentation)


def proper_resolution(spec, module, length, minimal=True, seed=DEFAULT_SEED):
    """
    The ``add(X)``-resolution obtained by iterating :func:`precover` on
    the stage kernels. It is proper whenever the precovers are onto,
    i.e. when ``X`` generates the modules involved.

    Unless ``minimal`` is false every precover is cut down by
    :func:`right_minimal_reduce`; the terms of the unreduced resolution
    grow geometrically with the length.

    :param SubcatSpec spec: the subcategory.
    :param Representation module: the module to resolve.
    :param int length: the index of the last term.
    :param bool minimal: reduce every precover to a right minimal one.
    :param int seed: the seed of the reduction search.
    :rtype: ProperResolution
    """
    check_consistency(spec, SubcatSpec)
    check_consistency(module, Representation)
    check_non_negative(length, 'length')

    def approximate(m):
        cover = precover(spec, m)
        return right_minimal_reduce(cover, seed=seed) if minimal else cover

    return ProperResolution(_iterate(approximate, module, length), spec)


def proper_coresolution(spec, module, length, minimal=True,
                        seed=DEFAULT_SEED):
    """
    The ``add(X)``-coresolution obtained by iterating
    :func:`preenvelope`, computed as the dual of the precover resolution of
    ``D M`` relative to ``add(D X)``. ``minimal`` is as in
    :func:`proper_resolution`.

    :rtype: ProperResolution
    """
    check_consistency(spec, SubcatSpec)
    res = proper_resolution(spec.dual(), matlis_dual(module), length,
                            minimal, seed)
    return res.dual().rebased(module)


def _fitting_power(z):
    """``z^N`` with ``N`` the largest dimension of the source, the power at
    which ``Im`` and ``Ker`` stabilize."""
    power = z
    for _ in range(max(z.source.dims, default=1) - 1):
        power = power @ z
    return power


def _nilpotent(z):
    return _fitting_power(z).is_zero()


def _kernel_endomorphisms(f):
    """A basis of the endomorphisms ``z`` of the source with ``f z = 0``."""
    basis = hom_basis(f.source, f.source)
    if not basis:
        return []
    coefficients = kernel_basis(hom_map(f.source, f))
    found = []
    for j in range(coefficients.cols):
        z = Morphism.zero(f.source, f.source)
        for c, phi in zip(coefficients.array[:, j], basis):
            if int(c):
                z = z + phi * int(c)
        found.append(z)
    return found


def _candidates(ideal, trials, rng):
    yield from ideal
    for a in ideal:
        for b in ideal:
            yield a + b
            yield a @ b
    p = ideal[0].field.p
    for _ in range(trials):
        z = ideal[0] * 0
        for phi in ideal:
            z = z + phi * int(rng.integers(0, p))
        yield z


def right_minimal_reduce(f, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
    """
    Restrict ``f: C -> M`` to a direct summand ``C'`` of ``C`` on which it
    is right minimal, with the same image.

    The endomorphisms ``z`` of ``C`` with ``f z = 0`` form a right ideal;
    ``f`` is right minimal exactly when it is nil. A non-nilpotent ``z``
    splits ``C = Im z^N + Ker z^N`` (Fitting) with the first summand inside
    ``Ker f``, so ``f`` is replaced by its restriction to ``Ker z^N``. The
    search runs through a basis of the ideal, pair sums and products, then
    seeded random combinations.

    :param Morphism f: the morphism.
    :return: the restriction of ``f`` to the reduced source.
    :rtype: Morphism
    """
    check_consistency(f, Morphism)
    rng = default_rng(seed)
    while not f.source.is_zero():
        ideal = _kernel_endomorphisms(f)
        if not ideal:
            return f
        found = next(
            (z for z in _candidates(ideal, trials, rng) if not _nilpotent(z)),
            None)
        if found is None:
            if any(not (a @ b).is_zero() for a in ideal for b in ideal):
                warnings.warn('No splitting endomorphism found; the '
                              'reduction may not be right minimal.')
            return f
        _, inclusion = kernel(_fitting_power(found))
        f = f @ inclusion
    return f


def left_minimal_reduce(f, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
    """
    The dual reduction: ``f: M -> C`` followed by the projection onto a
    summand ``C'`` on which it is left minimal.

    :rtype: Morphism
    """
    check_consistency(f, Morphism)
    reduced = matlis_dual(right_minimal_reduce(matlis_dual(f), trials, seed))
    return Morphism(f.source, reduced.target, reduced.blocks, check=False)


def minimal_proper_resolution(spec, module, length, seed=DEFAULT_SEED):
    """
    The minimal proper resolution: :func:`proper_resolution` with every
    precover reduced by :func:`right_minimal_reduce`.

    :rtype: ProperResolution
    """
    return proper_resolution(spec, module, length, True, seed)
