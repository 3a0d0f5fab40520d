""" Module for the cosyzygy scans and the Gorenstein experiment. """
import warnings
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..auscond import (GnmReport, RingVerdict, Sample, default_sample,
                       explicit_sample, gldim, is_gnm, ring_auslander)
from ..quiver import (BoundQuiverAlgebra, Morphism, Representation,
                      ShortExactSequence, hom_basis, kernel, lift,
                      corestriction, random_module, regular, simple,
                      zero_module)
from ..resolve import (DimensionReport, min_coresolution, projective_cover,
                       is_projective, cosyzygy, syzygy, n_torsionfree, id)
from ..utils import (DEFAULT_CUTOFF, DEFAULT_MAX_DIM, DEFAULT_SEED,
                     DEFAULT_TRIALS, HypothesisError, check_consistency,
                     check_non_negative, default_rng)


def require_auslander(algebra, cutoff=DEFAULT_CUTOFF):
    """
    The Auslander condition to depth ``cutoff``, on both sides.

    :rtype: RingVerdict
    :raises HypothesisError: if it fails or is undecided; the experiments are
        not meaningful then.
    """
    check_consistency(algebra, BoundQuiverAlgebra)
    verdict = ring_auslander(algebra, max(cutoff, 1), cutoff)
    if verdict.holds is not True:
        raise HypothesisError(f'{algebra.name or "The algebra"} does not '
                              f'satisfy the Auslander condition at depth '
                              f'{cutoff}:\n{verdict}')
    return verdict


def _cosyzygy_class(module, n, cutoff):
    """``Omega^{-n} M`` tested in ``G_cutoff(n)``."""
    return is_gnm(cosyzygy(module, n)[0], cutoff, n, cutoff)


def cosyzygy_index(module, cutoff=DEFAULT_CUTOFF, start=0):
    """
    The least ``n >= start``, up to the cutoff, with ``Omega^{-n} M`` in
    ``G_cutoff(n)``.

    :rtype: int or None
    """
    check_consistency(module, Representation)
    for n in range(start, cutoff + 1):
        if _cosyzygy_class(module, n, cutoff).holds:
            return n
    return None


def _surjective_lift(f, g, trials, rng):
    """A lift ``u`` of ``f`` through ``g`` that is onto, if one is met."""
    start = lift(f, g)
    if start is None:
        return None
    _, inclusion = kernel(g)
    corrections = [
        inclusion @ b for b in hom_basis(f.source, inclusion.source)
    ]
    candidates = [start] + [start + c for c in corrections]
    for candidate in candidates:
        if candidate.is_surjective():
            return candidate
    p = f.field.p
    for _ in range(trials if corrections else 0):
        candidate = start
        for c in corrections:
            candidate = candidate + c * int(rng.integers(0, p))
        if candidate.is_surjective():
            return candidate
    return None


def _cosyzygy_sequence(module, n, trials, rng):
    """
    ``0 -> I -> G -> M -> 0`` from the column
    ``G -> P_0(E^0) -> ... -> P_0(E^{n-1}) -> Omega^{-n} M`` lying over the
    injective coresolution; its maps are lifts chosen onto the next
    kernel, so the column is exact. ``None`` if no such lift is met.
    """
    if n == 0:
        return ShortExactSequence(
            Morphism.zero(zero_module(module.algebra), module),
            Morphism.identity(module))
    cores = min_coresolution(module, n)
    covers = [projective_cover(cores.terms[t]) for t in range(n)]
    _, onto_outer = cores.cokernel(n - 1)
    _, inclusion = kernel(onto_outer @ covers[n - 1])
    for t in range(n - 2, -1, -1):
        psi = _surjective_lift(cores.differentials[t] @ covers[t],
                               covers[t + 1] @ inclusion, trials, rng)
        if psi is None:
            return None
        _, inclusion = kernel(psi)
    onto = corestriction(covers[0] @ inclusion, cores.augmentation)
    if not onto.is_surjective():
        return None
    return ShortExactSequence.from_surjection(onto)


@dataclass(frozen=True)
class CosyzygyReport:
    """
    The test ``Omega^{-n} M`` in ``G_cutoff(n)`` and, when it holds, the
    right approximation ``0 -> I -> G -> M -> 0`` with ``id I <= n`` and
    ``G`` in ``G_cutoff(0)``, built at the index ``index <= n``.
    """
    module: Representation
    n: Optional[int]
    cutoff: int
    member: Optional[bool]
    index: Optional[int] = None
    sequence: Optional[ShortExactSequence] = field(default=None, repr=False)
    bound: Optional[DimensionReport] = field(default=None, repr=False)
    classes: Optional[GnmReport] = field(default=None, repr=False)
    alarms: List[str] = field(default_factory=list)

    @property
    def certified(self):
        if self.sequence is None:
            return False
        return self.bound.at_most(self.n) is True and self.classes.holds

    def __str__(self):
        name = self.module.name or 'M'
        if not self.member:
            state = 'undecided' if self.member is None else 'no'
            return (f'{name}: Omega^-n in G_{self.cutoff}(n) for n = '
                    f'{self.n}: {state}')
        lines = [f'{name}: Omega^-{self.n} in G_{self.cutoff}({self.n})']
        if self.sequence is None:
            lines.append('  approximation: not constructed')
        else:
            seq = self.sequence
            lines.append(f'  0 -> I {list(seq.left.dims)} -> G '
                         f'{list(seq.middle.dims)} -> M -> 0 (built at '
                         f'index {self.index})')
            lines.append(f'  id I = {self.bound} <= {self.n}, G in '
                         f'G_{self.cutoff}(0): '
                         f'{"holds" if self.classes.holds else "fails"}')
        lines.extend(f'ALARM: {a}' for a in self.alarms)
        return '\n'.join(lines)


def cosyzygy_membership(module, n=None, cutoff=DEFAULT_CUTOFF,
                        trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
    """
    Test ``Omega^{-n} M`` in ``G_cutoff(n)`` (``n`` found by
    :func:`cosyzygy_index` when omitted) and build the right
    approximation ``0 -> I -> G -> M -> 0``.

    The approximation lies over the coresolution: the rows are
    ``0 -> K_t -> P_0(E^t) -> E^t -> 0`` and the middle column is made
    exact by choosing its maps; ``G`` is the kernel at the top, ``I`` the
    kernel of ``G -> M``. The construction starts at the least index for
    which the test holds and moves up to ``n`` when a column cannot be
    completed. Under the Auslander condition every ``P_0(E^t)`` is
    injective, so ``id I <= n``; ``G`` is in ``G(0)``. Both are
    recomputed.

    :param Representation module: the module ``M``.
    :param int n: the index, or ``None`` to scan.
    :rtype: CosyzygyReport
    :raises HypothesisError: if the algebra fails the Auslander condition.
    """
    check_consistency(module, Representation)
    require_auslander(module.algebra, cutoff)
    if n is None:
        n = cosyzygy_index(module, cutoff)
        if n is None:
            return CosyzygyReport(module, None, cutoff, None)
    check_non_negative(n, 'n')
    report = _cosyzygy_class(module, n, cutoff)
    if not report.holds:
        member = False if report.failure is not None else None
        return CosyzygyReport(module, n, cutoff, member)
    rng = default_rng(seed)
    start = cosyzygy_index(module, cutoff) or 0
    for index in range(min(start, n), n + 1):
        sequence = _cosyzygy_sequence(module, index, trials, rng)
        if sequence is not None:
            break
    else:
        warnings.warn(f'No exact column over the coresolution of '
                      f'{module.name or "M"} was completed up to index {n}.')
        return CosyzygyReport(module, n, cutoff, True)
    bound = id(sequence.left, cutoff)
    classes = is_gnm(sequence.middle, cutoff, 0, cutoff)
    alarms = []
    if bound.at_most(n) is False:
        alarms.append(f'id I = {bound} exceeds {n}')
    if classes.failure is not None:
        alarms.append(f'G leaves G_{cutoff}(0) at row '
                      f'{classes.failure.index}')
    return CosyzygyReport(module, n, cutoff, True, index, sequence, bound,
                          classes, alarms)


@dataclass(frozen=True)
class GorensteinExperiment:
    """
    The Gorenstein and regularity evidence for an algebra satisfying the
    Auslander condition.

    * ``indices``: for each simple, the least ``n`` with ``Omega^{-n} S``
      in ``G_cutoff(n)``; ``uniform`` is their maximum when all exist.
    * ``regular_id``, ``opposite_id``: the direct injective dimensions of
      the regular module on both sides.
    * ``g_class`` and ``projectives``: the sample members in
      ``G_cutoff(0)`` and the projective ones; their equality is the
      module-level form of regularity, cross-checked against ``gldim``.

    Contravariant finiteness of ``G(0)`` is never claimed beyond the
    sample.
    """
    algebra: BoundQuiverAlgebra
    cutoff: int
    auslander: RingVerdict = field(repr=False)
    indices: Tuple[Tuple[str, Optional[int]], ...]
    uniform: Optional[int]
    regular_id: DimensionReport = field(repr=False)
    opposite_id: DimensionReport = field(repr=False)
    global_dimension: DimensionReport = field(repr=False)
    g_class: Tuple[str, ...]
    projectives: Tuple[str, ...]
    sample: Sample = field(repr=False)
    alarms: List[str] = field(default_factory=list)

    @property
    def gorenstein(self):
        """True when both injective dimensions are found within the
        cutoff and agree."""
        return (self.regular_id.is_finite and self.opposite_id.is_finite
                and self.regular_id.value == self.opposite_id.value)

    @property
    def regular(self):
        """True when ``G_cutoff(0)`` meets the sample in its projectives."""
        return set(self.g_class) == set(self.projectives)

    @property
    def statements(self):
        lines = []
        if self.uniform is not None:
            lines.append(f'Gorenstein-consistent with id <= {self.uniform}')
            lines.append('consistent with contravariant finiteness of '
                         'G(0) over the declared sample')
        else:
            lines.append(f'not Gorenstein-consistent within cutoff '
                         f'{self.cutoff}')
        if self.regular:
            lines.append('Auslander-regular-consistent')
        else:
            extra = sorted(set(self.g_class) - set(self.projectives))
            lines.append(f'not regular: G(0) contains the non-projective '
                         f'{", ".join(extra)}')
        return lines

    def __str__(self):
        name = self.algebra.name or 'A'
        lines = [f'Gorenstein experiment for {name} (cutoff {self.cutoff})']
        lines.extend(f'  n({s}) = {"exceeds" if n is None else n}'
                     for s, n in self.indices)
        lines.append(f'  id A = {self.regular_id}, id A_op = '
                     f'{self.opposite_id}, gldim = {self.global_dimension}')
        lines.append(f'  G(0) in sample: {", ".join(self.g_class) or "-"}')
        lines.append(f'  projectives in sample: '
                     f'{", ".join(self.projectives) or "-"}')
        lines.extend(f'  {s}' for s in self.statements)
        lines.extend(f'ALARM: {a}' for a in self.alarms)
        return '\n'.join(lines)


def gorenstein_experiment(algebra, cutoff=DEFAULT_CUTOFF, sample=None,
                          seed=DEFAULT_SEED):
    """
    Run the Gorenstein experiment: scan the simples for the least ``n``
    with ``Omega^{-n} S`` in ``G_cutoff(n)``, compute the injective
    dimension of the regular module on both sides, and compare the
    ``G_cutoff(0)`` members of the sample with its projectives.

    Under the Auslander condition the algebra is Gorenstein exactly when
    a uniform ``n`` exists, and then ``id A <= n``; it is regular exactly
    when ``G(0)`` consists of the projectives. Contradictions decided
    within the cutoff are alarms.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param int cutoff: the cutoff.
    :param Sample sample: the sample; :func:`default_sample` if omitted.
    :rtype: GorensteinExperiment
    :raises HypothesisError: if the algebra fails the Auslander condition.
    """
    verdict = require_auslander(algebra, cutoff)
    if sample is None:
        sample = default_sample(algebra, seed=seed)
    elif not isinstance(sample, Sample):
        sample = explicit_sample(algebra, sample)
    indices = []
    for v in algebra.vertices:
        s = simple(algebra, v)
        indices.append((s.name or f'S({v})', cosyzygy_index(s, cutoff)))
    found = [n for _, n in indices]
    uniform = max(found) if None not in found else None
    regular_id = id(regular(algebra), cutoff)
    opposite_id = id(regular(algebra.opposite()), cutoff)
    global_dimension = gldim(algebra, cutoff)
    names = sample.names()
    g_class = tuple(
        name for name, m in zip(names, sample)
        if is_gnm(m, cutoff, 0, cutoff).holds)
    projectives = tuple(
        name for name, m in zip(names, sample) if is_projective(m))

    alarms = []
    if uniform is not None:
        for side, report in (('left', regular_id), ('right', opposite_id)):
            if report.at_most(uniform) is False:
                alarms.append(f'uniform index {uniform} found but the {side} '
                              f'injective dimension of A is {report}')
    for side, report in (('left', regular_id), ('right', opposite_id)):
        if report.is_finite:
            late = [s for s, n in indices if n is None or n > report.value]
            if late:
                alarms.append(f'{side} id A = {report.value} but the scan '
                              f'exceeds it for {", ".join(late)}')
    if global_dimension.is_finite and set(g_class) != set(projectives):
        alarms.append(f'gldim = {global_dimension.value} but G(0) contains '
                      f'non-projective sample members')
    return GorensteinExperiment(algebra, cutoff, verdict, tuple(indices),
                                uniform, regular_id, opposite_id,
                                global_dimension, g_class, projectives,
                                sample, alarms)


@dataclass(frozen=True)
class TorsionfreeRow:
    """
    One module of a :class:`TorsionfreeReport`: membership in ``G_n(0)``
    (``None`` when undecided) and ``n``-torsionfreeness.
    """
    module: str
    in_class: Optional[bool]
    torsionfree: bool
    constructed: bool = False

    @property
    def agrees(self):
        if self.in_class is None:
            return True
        if self.constructed:
            return self.in_class and self.torsionfree
        return self.in_class == self.torsionfree


@dataclass(frozen=True)
class TorsionfreeReport:
    """
    ``G_n(0)``, the ``n``-th syzygies and the ``n``-torsionfree modules
    compared over a sample, for an algebra whose regular module is
    ``G_n(0)``. Sample rows must agree on the two predicates; constructed
    ``n``-th syzygies must satisfy both.
    """
    algebra: BoundQuiverAlgebra
    n: int
    rows: Tuple[TorsionfreeRow, ...]
    syzygies: Tuple[TorsionfreeRow, ...]
    alarms: List[str] = field(default_factory=list)

    @property
    def holds(self):
        return not self.alarms

    def __str__(self):
        lines = [f'G_{self.n}(0) = n-syzygies = {self.n}-torsionfree on '
                 f'{len(self.rows)} modules and {len(self.syzygies)} '
                 f'constructed syzygies: {"ok" if self.holds else "FAILS"}']
        lines.extend(f'ALARM: {a}' for a in self.alarms)
        return '\n'.join(lines)


def _torsionfree_row(name, module, n, cutoff, constructed=False):
    report = is_gnm(module, n, 0, cutoff)
    in_class = True if report.holds else (
        False if report.failure is not None else None)
    return TorsionfreeRow(name, in_class, n_torsionfree(module, n),
                          constructed)


def syzygy_torsionfree_check(algebra, n, sample=None, cutoff=DEFAULT_CUTOFF,
                             trials=10, max_dim=DEFAULT_MAX_DIM,
                             seed=DEFAULT_SEED):
    """
    Compare ``G_n(0)`` with the ``n``-torsionfree modules over the sample,
    and check both predicates on the ``n``-th syzygies of ``trials``
    seeded random modules. Every disagreement is an alarm.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param int n: the index.
    :param sample: a :class:`Sample` or a list of modules.
    :rtype: TorsionfreeReport
    :raises HypothesisError: if the regular module is not ``G_n(0)``.
    """
    check_consistency(algebra, BoundQuiverAlgebra)
    check_non_negative(n, 'n')
    ring = is_gnm(regular(algebra), n, 0, cutoff)
    if not ring.holds:
        raise HypothesisError(f'The regular module is not G_{n}(0):\n{ring}')
    if sample is None:
        sample = default_sample(algebra, seed=seed)
    modules = list(sample)
    names = [m.name or f'M{j}' for j, m in enumerate(modules)]
    rows = tuple(
        _torsionfree_row(name, m, n, cutoff)
        for name, m in zip(names, modules))
    rng = default_rng(seed)
    syzygies = []
    for j in range(trials):
        source = random_module(algebra, max_dim, rng)
        omega, _ = syzygy(source, n)
        if not omega.is_zero():
            syzygies.append(
                _torsionfree_row(f'syz{n}(R{j})', omega, n, cutoff, True))
    alarms = [
        f'{row.module}: G_{n}(0) {row.in_class}, {n}-torsionfree '
        f'{row.torsionfree}' for row in rows + tuple(syzygies)
        if not row.agrees
    ]
    return TorsionfreeReport(algebra, n, rows, tuple(syzygies), alarms)
