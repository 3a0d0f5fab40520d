""" Module for module samples and their dimension profiles. """
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Optional, Tuple

from ..formats import algebra_to_text, module_to_text, parse_algebra, \
    parse_module
from ..quiver import (BoundQuiverAlgebra, projective, injective, simple,
                      random_module)
from ..resolve import (radical, socle, min_coresolution, min_resolution, fd,
                       id)
from ..utils import (DEFAULT_CUTOFF, DEFAULT_MAX_DIM, DEFAULT_SAMPLE_SIZE,
                     DEFAULT_SEED, check_consistency, check_non_negative,
                     default_rng)


@dataclass(frozen=True)
class Sample:
    """
    A finite family of modules standing in for "every module" in the
    checks, with a printable description of how it was drawn.
    """
    algebra: BoundQuiverAlgebra
    modules: tuple
    description: str

    def __iter__(self):
        return iter(self.modules)

    def __len__(self):
        return len(self.modules)

    def names(self):
        """The display names, in sample order."""
        return [m.name or f'M{j}' for j, m in enumerate(self.modules)]


def _add(modules, seen, module):
    if module.is_zero():
        return
    key = module.key()
    if key not in seen:
        seen.add(key)
        modules.append(module)


def default_sample(algebra,
                   size=DEFAULT_SAMPLE_SIZE,
                   max_dim=DEFAULT_MAX_DIM,
                   seed=DEFAULT_SEED):
    """
    The default sample: the indecomposable projectives, the simples, the
    indecomposable injectives, the radicals and socles of the projectives
    and ``size`` seeded random modules of total dimension at most
    ``max_dim``. Equal representations are kept once, under the first name
    met, so the summands of the regular module come first.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param int size: the number of random modules drawn.
    :param int max_dim: the dimension bound of the random modules.
    :param int seed: the seed.
    :rtype: Sample
    """
    check_consistency(algebra, BoundQuiverAlgebra)
    check_non_negative(size, 'size')
    modules, seen = [], set()
    for family in (projective, simple, injective):
        for v in algebra.vertices:
            _add(modules, seen, family(algebra, v))
    for v in algebra.vertices:
        p = projective(algebra, v)
        _add(modules, seen, radical(p)[0].renamed(f'rad P({v})'))
        _add(modules, seen, socle(p)[0].renamed(f'soc P({v})'))
    structured = len(modules)
    rng = default_rng(seed)
    for j in range(size):
        _add(modules, seen,
             random_module(algebra, max_dim, rng).renamed(f'R{j}'))
    description = (f'{structured} structured modules (indecomposable '
                   f'projectives, simples, indecomposable injectives, '
                   f'radicals and socles of projectives) and '
                   f'{len(modules) - structured} distinct random modules '
                   f'(seed {seed}, total dimension <= {max_dim})')
    return Sample(algebra, tuple(modules), description)


def explicit_sample(algebra, modules, description='explicit sample'):
    """A :class:`Sample` of the given modules."""
    return Sample(algebra, tuple(modules), description)


@dataclass(frozen=True)
class ModuleProfile:
    """
    The dimensions of one module needed by the condition checks, as plain
    integers (``None`` when a dimension exceeds the cutoff):
    ``fd_cores[i] = fd E^i(M)`` and ``id_res[i] = id P_i(M)`` for
    ``i < depth``.
    """
    name: str
    dims: Tuple[int, ...]
    fd: Optional[int]
    id: Optional[int]
    fd_cores: Tuple[Optional[int], ...]
    id_res: Tuple[Optional[int], ...]


def profile_module(module, depth, cutoff=DEFAULT_CUTOFF):
    """
    Compute the :class:`ModuleProfile` of ``module``.

    :rtype: ModuleProfile
    """
    cores = min_coresolution(module, depth)
    res = min_resolution(module, depth)
    return ModuleProfile(
        module.name, tuple(module.dims),
        fd(module, cutoff).value,
        id(module, cutoff).value,
        tuple(fd(cores.terms[i], cutoff).value for i in range(depth)),
        tuple(id(res.terms[i], cutoff).value for i in range(depth)))


def _profile_from_text(payload):
    algebra_text, module_text, name, depth, cutoff = payload
    algebra = parse_algebra(algebra_text)
    module = parse_module(module_text, algebra, name=name)
    return profile_module(module, depth, cutoff)


def profile_sample(sample, depth, cutoff=DEFAULT_CUTOFF, jobs=1):
    """
    Profiles of every sample member, in sample order. With ``jobs > 1``
    the members are evaluated by a ``multiprocessing.Pool``; the modules
    travel to the workers in the text file format.

    :rtype: list(ModuleProfile)
    """
    if jobs <= 1 or len(sample) < 2:
        return [profile_module(m, depth, cutoff) for m in sample]
    algebra_text = algebra_to_text(sample.algebra)
    payloads = [(algebra_text, module_to_text(m), m.name, depth, cutoff)
                for m in sample]
    with Pool(jobs) as pool:
        return pool.map(_profile_from_text, payloads)
