""" Module for the command handlers of the command-line interface. """
from .inputs import (load_algebra, load_module, load_ses, subcategory)
from .. import resolve
from ..approx import (LEFT, RIGHT, COLEFT, attach_ladder, cognm_presentation,
                      cosyzygy_membership, gorenstein_experiment,
                      left_presentation, right_presentation,
                      syzygy_torsionfree_check)
from ..auscond import (auslander_battery, default_sample, gorenstein_verdict,
                       is_gnm, regular_verdict, ring_auslander,
                       structural_checks)
from ..fixtures import fixture
from ..formats import ParseError, complex_to_text
from ..glue import GLUINGS, proper_coresolution, proper_resolution
from ..plotter import Plotter
from ..quiver import simple
from ..utils import DEFAULT_SAMPLE_SIZE

OK, ALARM, USAGE, INCONCLUSIVE = 0, 1, 2, 3

# CLI name -> (gluing, outer term resolved, coresolutions)
GLUE_KINDS = {
    'first': ('first', 'right', False),
    'last': ('last_res', 'left', False),
    'first-cores': ('first_cores', 'right', True),
    'last-cores': ('last_cores', 'left', True),
}
REQUIRE = ('last_res', 'first_cores')


def status(alarms, decided=True):
    """Exit status of a report: alarms first, then undecided verdicts."""
    if alarms:
        return ALARM
    return OK if decided else INCONCLUSIVE


def sample_for(args, algebra, size=DEFAULT_SAMPLE_SIZE):
    """The default sample sized by ``--sample``."""
    size = size if args.sample is None else args.sample
    return default_sample(algebra, size=size, seed=args.seed)


def _dims(complex):
    return [list(t.dims) for t in complex.terms]


def _complex_command(args, direction):
    algebra = load_algebra(args.algebra)
    module = load_module(args, algebra)
    length = args.cutoff if args.length is None else args.length
    if direction == 'resolve':
        cx = resolve.min_resolution(module, length)
        report, label = resolve.pd(module, args.cutoff), 'pd'
    else:
        cx = resolve.min_coresolution(module, length)
        report, label = resolve.id(module, args.cutoff), 'id'
    text = complex_to_text(cx)
    record = {
        'command': direction,
        'module': module.name,
        'dims': _dims(cx),
        label: report.value,
        'cutoff': args.cutoff,
        'note': report.note,
        'complex': text,
        'text': f'# {label} = {report}\n{text.rstrip()}',
    }
    return [record], OK


def resolve_command(args):
    """Minimal projective resolution and projective dimension."""
    return _complex_command(args, 'resolve')


def coresolve_command(args):
    """Minimal injective coresolution and injective dimension."""
    return _complex_command(args, 'coresolve')


def glue_command(args):
    """Resolve the outer terms of a sequence and glue the resolutions."""
    kind, outer, cores = GLUE_KINDS[args.kind]
    algebra = load_algebra(args.algebra)
    ses = load_ses(args.ses, algebra)
    spec = subcategory(args.spec, algebra)
    if args.require and kind not in REQUIRE:
        raise ParseError(f'applies to "last" and "first-cores" only, not '
                         f'{args.kind!r}', '--require')
    build = proper_coresolution if cores else proper_resolution
    res0 = build(spec, ses.middle, args.length)
    res1 = build(spec, getattr(ses, outer), args.length)
    if args.require:
        result = GLUINGS[kind](ses, res0, res1, args.require)
    else:
        result = GLUINGS[kind](ses, res0, res1)
    glued = result.resolution
    alarms = []
    if not glued.exact:
        alarms.append('the glued complex is not exact')
    if not result.consistent():
        alarms.append('a predicted proper/strong flag is contradicted')
    text = complex_to_text(glued.complex)
    summary = [
        f'# glue {args.kind} over {spec.name}: exact {glued.exact}, '
        f'proper {glued.proper} (predicted {result.predicted_proper}), '
        f'strong {glued.strong} (predicted {result.predicted_strong})'
    ]
    summary.extend(f'# {name}: {value}'
                   for name, value in sorted(result.preconditions.items()))
    summary.extend(f'# ALARM: {a}' for a in alarms)
    record = {
        'command': 'glue',
        'kind': args.kind,
        'spec': spec.name,
        'dims': _dims(glued.complex),
        'exact': glued.exact,
        'proper': glued.proper,
        'strong': glued.strong,
        'predicted_proper': result.predicted_proper,
        'predicted_strong': result.predicted_strong,
        'preconditions': dict(result.preconditions),
        'alarms': alarms,
        'complex': text,
        'text': '\n'.join(summary) + '\n' + text.rstrip(),
    }
    return [record], status(alarms)


def auslander_command(args):
    """The ring-level Auslander condition and the condition battery."""
    algebra = load_algebra(args.algebra)
    ring = ring_auslander(algebra, max(args.cutoff, 1), args.cutoff)
    sample = sample_for(args, algebra)
    battery = auslander_battery(algebra, args.depth, args.cutoff, sample,
                                args.jobs)
    alarms = ring.alarms + battery.alarms
    text = [str(ring), str(battery)]
    checks = {}
    if args.structural:
        structural = structural_checks(algebra, args.cutoff, sample,
                                       args.depth, args.seed)
        alarms = alarms + structural.alarms
        checks = {c.name: c.holds for c in structural.checks}
        text.append(str(structural))
    record = {
        'command': 'auslander',
        'algebra': algebra.name,
        'holds': ring.holds,
        'classification': ring.classification,
        'conditions': battery.values(),
        'structural': checks,
        'alarms': alarms,
        'text': '\n'.join(text),
    }
    return [record], status(alarms, ring.holds is not None)


def verdict_command(args):
    """The Gorenstein or regular verdict."""
    algebra = load_algebra(args.algebra)
    build = gorenstein_verdict if args.kind == 'gorenstein' else (
        regular_verdict)
    report = build(algebra, args.n, args.cutoff, sample_for(args, algebra),
                   args.jobs)
    record = {
        'command': 'verdict',
        'kind': args.kind,
        'n': args.n,
        'condition': report.condition,
        'inequalities': report.inequalities,
        'bound': report.bound.value,
        'alarms': list(report.alarms),
        'text': str(report),
    }
    return [record], status(report.alarms, report.condition is not None)


PRESENTATIONS = {
    'left': (LEFT, left_presentation),
    'right': (RIGHT, right_presentation),
    'coleft': (COLEFT, cognm_presentation),
}


def _presentation_record(presentation):
    return {
        'command': 'approx',
        'kind': presentation.kind,
        'module': presentation.module.name,
        'i': presentation.i,
        'k': presentation.k,
        'approximating': list(presentation.approximating.dims),
        'complement': list(presentation.complement.dims),
        'bound': presentation.bound.value,
        'bound_ok': presentation.bound_ok,
        'class': presentation.classes.holds,
        'certified': presentation.certified,
        'holds': presentation.holds,
        'alarms': list(presentation.alarms),
        'text': str(presentation),
    }


def _modules(args, algebra):
    module = load_module(args, algebra, required=False)
    if module is not None:
        return [module]
    return [simple(algebra, v) for v in algebra.vertices]


def approx_command(args):
    """Approximation presentations and the cosyzygy experiments."""
    algebra = load_algebra(args.algebra)
    if args.kind in PRESENTATIONS:
        kind, build = PRESENTATIONS[args.kind]
        presentation = build(load_module(args, algebra), args.index, args.k,
                             args.cutoff)
        if args.ladder and kind != COLEFT:
            presentation = attach_ladder(presentation, seed=args.seed)
        return ([_presentation_record(presentation)],
                status(presentation.alarms,
                       presentation.bound_ok is not None))
    if args.kind == 'cosyzygy':
        records, alarms, decided = [], [], True
        for module in _modules(args, algebra):
            report = cosyzygy_membership(module, args.n, args.cutoff,
                                         seed=args.seed)
            alarms.extend(report.alarms)
            decided = decided and report.member is not None
            records.append({
                'command': 'approx',
                'kind': 'cosyzygy',
                'module': module.name,
                'n': report.n,
                'member': report.member,
                'index': report.index,
                'certified': report.certified,
                'alarms': list(report.alarms),
                'text': str(report),
            })
        return records, status(alarms, decided)
    if args.kind == 'experiment':
        report = gorenstein_experiment(algebra, args.cutoff,
                                       sample_for(args, algebra), args.seed)
        record = {
            'command': 'approx',
            'kind': 'experiment',
            'indices': dict(report.indices),
            'uniform': report.uniform,
            'gorenstein': report.gorenstein,
            'regular': report.regular,
            'statements': report.statements,
            'alarms': list(report.alarms),
            'text': str(report),
        }
        return [record], status(report.alarms)
    n = 1 if args.n is None else args.n
    report = syzygy_torsionfree_check(algebra, n, sample_for(args, algebra),
                                      args.cutoff, seed=args.seed)
    record = {
        'command': 'approx',
        'kind': 'torsionfree',
        'n': n,
        'holds': report.holds,
        'alarms': list(report.alarms),
        'text': str(report),
    }
    return [record], status(report.alarms)


def fixture_command(args):
    """The truth table of a fixture, regenerated with ``--selftest``."""
    fix = fixture(args.name, args.p)
    if not args.selftest:
        record = {'command': 'fixture', 'name': fix.name}
        record.update(fix.truth.rows())
        record['text'] = f'{fix.name}\n{fix.truth}'
        return [record], OK
    size = 5 if args.sample is None else args.sample
    report = fix.selftest(args.cutoff, size, args.seed)
    record = {'command': 'fixture', 'name': fix.name, 'selftest': True}
    record.update(report.computed.rows())
    record['mismatches'] = list(report.mismatches)
    record['text'] = str(report)
    return [record], status(report.mismatches)


def export_command(args):
    """The algebra file of a fixture, printed or saved."""
    text = fixture(args.name, args.p).to_text()
    if args.output:
        with open(args.output, 'w') as fp:
            fp.write(text)
        return [{'command': 'export', 'output': args.output,
                 'text': f'wrote {args.output}'}], OK
    return [{'command': 'export', 'algebra': text, 'text': text.rstrip()}], OK


def plot_command(args):
    """Save a figure of a complex, a class test or the quiver."""
    algebra = load_algebra(args.algebra)
    plotter = Plotter()
    if args.kind == 'quiver':
        plotter.plot_quiver(algebra, args.output)
    else:
        module = load_module(args, algebra)
        if args.kind == 'resolve':
            plotter.plot_complex(resolve.min_resolution(module, args.cutoff),
                                 args.output)
        elif args.kind == 'coresolve':
            plotter.plot_complex(
                resolve.min_coresolution(module, args.cutoff), args.output)
        else:
            plotter.plot_gnm(is_gnm(module, args.depth, args.m, args.cutoff),
                             args.output)
    return [{'command': 'plot', 'kind': args.kind, 'output': args.output,
             'text': f'wrote {args.output}'}], OK
