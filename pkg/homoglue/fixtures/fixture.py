""" Module for the built-in test algebras and their expected invariants. """
import itertools
from dataclasses import dataclass, field, fields
from functools import lru_cache
from typing import List, Optional, Tuple

from ..approx import cosyzygy_index, gorenstein_experiment
from ..auscond import default_sample, gldim, is_gnm, ring_auslander
from ..formats import algebra_to_text
from ..linalg import PrimeField
from ..quiver import (BoundQuiverAlgebra, Morphism, Quiver, Representation,
                      hom_basis, injective, projective, regular, simple)
from ..resolve import id, is_isomorphic, pd
from ..utils import DEFAULT_CUTOFF, DEFAULT_PRIME, DEFAULT_SEED

FIXTURES = ('kA2', 'kA3', 'A3rad2', 'kxx2', 'kron2')

# Quivers with 0-indexed vertices and one-letter arrows.
_QUIVERS = {
    'kA2': (2, [('a', 0, 1)], []),
    'kA3': (3, [('a', 0, 1), ('b', 1, 2)], []),
    'A3rad2': (3, [('a', 0, 1), ('b', 1, 2)], [[(1, 'ab')]]),
    'kxx2': (1, [('x', 0, 0)], [[(1, 'xx')]]),
    'kron2': (2, [('a', 0, 1), ('b', 0, 1)], []),
}

# Indecomposables of the finite-type fixtures, as intervals of the linear
# quiver or, over k[x]/(x^2), as the Jordan blocks of size 1 and 2.
_INTERVALS = {
    'kA2': [(0, 0), (1, 1), (0, 1)],
    'kA3': [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)],
    'A3rad2': [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)],
}


@dataclass(frozen=True)
class FixtureTruth:
    """
    The expected invariants of a fixture. Dimensions are ``None`` when
    they exceed the cutoff; per-vertex tuples are in vertex order.
    """
    gldim: Optional[int]
    regular_id: Optional[int]
    simple_pd: Tuple[Optional[int], ...]
    simple_id: Tuple[Optional[int], ...]
    auslander: bool
    simple_in_g0: Tuple[bool, ...]
    cosyzygy_indices: Tuple[Optional[int], ...]
    auslander_gorenstein: bool
    auslander_regular: bool
    indecomposables: Optional[int]

    def rows(self):
        """``(name, value)`` pairs in field order."""
        return [(f.name, getattr(self, f.name)) for f in fields(self)]

    def __str__(self):
        width = max(len(f.name) for f in fields(self))
        return '\n'.join(f'{name:<{width}}  {value}'
                         for name, value in self.rows())


_TRUTH = {
    'kA2':
        FixtureTruth(1, 1, (1, 0), (0, 1), True, (False, True), (1, 0),
                     True, True, 3),
    'kA3':
        FixtureTruth(1, 1, (1, 1, 0), (0, 1, 1), True, (False, False, True),
                     (1, 1, 0), True, True, 6),
    'A3rad2':
        FixtureTruth(2, 2, (2, 1, 0), (0, 1, 2), True, (False, False, True),
                     (1, 2, 0), True, True, 5),
    'kxx2':
        FixtureTruth(None, 0, (None,), (None,), True, (True,), (0,), True,
                     False, 2),
    'kron2':
        FixtureTruth(1, 1, (1, 0), (0, 1), False, (False, False), (1, 1),
                     False, False, None),
}


@dataclass(frozen=True)
class SelftestReport:
    """The recomputed truth table of a fixture and its mismatches."""
    name: str
    cutoff: int
    expected: FixtureTruth
    computed: FixtureTruth
    mismatches: List[str] = field(default_factory=list)

    @property
    def holds(self):
        return not self.mismatches

    def __str__(self):
        lines = [f'{self.name} (cutoff {self.cutoff})', str(self.computed)]
        lines.extend(f'MISMATCH: {m}' for m in self.mismatches)
        return '\n'.join(lines)


def _is_local(module):
    """
    Every endomorphism is nilpotent or invertible, decided by enumerating
    ``End(M)`` over the prime field.
    """
    basis = hom_basis(module, module)
    p = module.field.p
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        phi = Morphism.zero(module, module)
        for c, b in zip(coeffs, basis):
            phi = phi + b * c
        if phi.is_isomorphism():
            continue
        power = Morphism.identity(module)
        for _ in range(module.total_dim):
            power = power @ phi
        if not power.is_zero():
            return False
    return True


@dataclass(frozen=True)
class FixtureAlgebra:
    """
    A built-in test algebra with its expected invariants.

    :Example:
        >>> kA2 = fixture('kA2')
        >>> kA2.truth.gldim
        1
        >>> kA2.selftest().holds
        True
    """
    name: str
    algebra: BoundQuiverAlgebra = field(repr=False)
    truth: FixtureTruth = field(repr=False)

    def indecomposables(self):
        """
        The indecomposable modules up to isomorphism.

        :raises ValueError: for the Kronecker algebra, of infinite type.
        :rtype: list(Representation)
        """
        A = self.algebra
        if self.name == 'kxx2':
            return [
                simple(A, 0),
                Representation(A, [2], {'x': [[0, 0], [1, 0]]}, name='A')
            ]
        if self.name not in _INTERVALS:
            raise ValueError(f'{self.name} has infinitely many '
                             f'indecomposables.')
        modules = []
        for start, end in _INTERVALS[self.name]:
            dims = [int(start <= v <= end) for v in A.vertices]
            maps = {
                a.id: [[1]]
                for a in A.quiver.arrows
                if start <= a.source and a.target <= end
            }
            modules.append(
                Representation(A, dims, maps, name=f'M[{start},{end}]'))
        return modules

    def _count_indecomposables(self, mismatches):
        if self.name not in _INTERVALS and self.name != 'kxx2':
            return None
        modules = self.indecomposables()
        for m in modules:
            if not _is_local(m):
                mismatches.append(f'{m.name} is decomposable')
        for m, other in itertools.combinations(modules, 2):
            if is_isomorphic(m, other):
                mismatches.append(f'{m.name} and {other.name} are '
                                  f'isomorphic')
        A = self.algebra
        standard = [
            family(A, v)
            for family in (simple, projective, injective)
            for v in A.vertices
        ]
        for m in standard:
            twins = [n for n in modules if n.dims == m.dims]
            if not any(is_isomorphic(m, n) for n in twins):
                mismatches.append(f'{m.name} is missing from the list')
        return len(modules)

    def compute(self, cutoff=DEFAULT_CUTOFF, sample_size=5,
                seed=DEFAULT_SEED, mismatches=None):
        """
        Recompute every invariant of the truth table.

        :param int cutoff: the cutoff of every dimension.
        :param int sample_size: random modules in the regularity sample.
        :rtype: FixtureTruth
        """
        mismatches = [] if mismatches is None else mismatches
        A = self.algebra
        simples = [simple(A, v) for v in A.vertices]
        auslander = ring_auslander(A, max(cutoff, 1), cutoff).holds is True
        gorenstein = regular_ = False
        if auslander:
            sample = default_sample(A, size=sample_size, seed=seed)
            experiment = gorenstein_experiment(A, cutoff, sample, seed)
            mismatches.extend(f'alarm: {a}' for a in experiment.alarms)
            gorenstein = (experiment.gorenstein
                          and experiment.uniform is not None)
            regular_ = experiment.regular
        return FixtureTruth(
            gldim(A, cutoff).value,
            id(regular(A), cutoff).value,
            tuple(pd(s, cutoff).value for s in simples),
            tuple(id(s, cutoff).value for s in simples),
            auslander,
            tuple(is_gnm(s, cutoff, 0, cutoff).holds for s in simples),
            tuple(cosyzygy_index(s, cutoff) for s in simples),
            gorenstein,
            regular_,
            self._count_indecomposables(mismatches),
        )

    def selftest(self, cutoff=DEFAULT_CUTOFF, sample_size=5,
                 seed=DEFAULT_SEED):
        """
        Regenerate the truth table and list every entry that differs from
        the expected one.

        :rtype: SelftestReport
        """
        mismatches = []
        computed = self.compute(cutoff, sample_size, seed, mismatches)
        for (name, expected), (_, found) in zip(self.truth.rows(),
                                                computed.rows()):
            if expected != found:
                mismatches.append(f'{name}: expected {expected}, '
                                  f'computed {found}')
        return SelftestReport(self.name, cutoff, self.truth, computed,
                              mismatches)

    def to_text(self):
        """The algebra file of the fixture."""
        return algebra_to_text(self.algebra)


@lru_cache(maxsize=None)
def fixture(name, p=DEFAULT_PRIME):
    """
    The fixture ``name`` over ``GF(p)``. Calls with the same arguments
    return the same object.

    :param str name: one of :data:`FIXTURES`.
    :param int p: the characteristic.
    :rtype: FixtureAlgebra
    :raises ValueError: for an unknown name.
    """
    if name not in _QUIVERS:
        raise ValueError(f'Unknown fixture {name!r}; expected one of '
                         f'{", ".join(FIXTURES)}.')
    count, arrows, relations = _QUIVERS[name]
    algebra = BoundQuiverAlgebra(Quiver(count, arrows), PrimeField(p),
                                 relations, name=name)
    return FixtureAlgebra(name, algebra, _TRUTH[name])
