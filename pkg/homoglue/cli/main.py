""" Module for the command-line entry point. """
import argparse
import sys

from . import commands
from ..fixtures import FIXTURES
from ..formats import ParseError
from ..linalg import PrimeField
from ..meta import __version__
from ..utils import (DEFAULT_CUTOFF, DEFAULT_PRIME, DEFAULT_SEED,
                     HypothesisError)
from ..writer import FORMATS, Writer
from .inputs import SPECS


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f'expected a non-negative integer, '
                                         f'got {value}')
    return value


def _prime(text):
    try:
        return PrimeField(int(text)).p
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def _common():
    """The global flags, accepted after every subcommand."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--cutoff', type=_non_negative,
                        default=DEFAULT_CUTOFF,
                        help='largest homological degree computed')
    parser.add_argument('--seed', type=int, default=DEFAULT_SEED,
                        help='seed of every random choice')
    parser.add_argument('--sample', type=_non_negative, default=None,
                        help='number of random modules in the sample')
    parser.add_argument('--format', choices=FORMATS, default='text',
                        help='report format')
    parser.add_argument('--jobs', type=_non_negative, default=1,
                        help='worker processes for sample evaluation')
    return parser


def _module_options(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--module', help='module file')
    group.add_argument('--simple', type=_non_negative, metavar='V')
    group.add_argument('--projective', type=_non_negative, metavar='V')
    group.add_argument('--injective', type=_non_negative, metavar='V')
    group.add_argument('--regular', action='store_true')


def build_parser():
    """
    The argument parser of the ``homoglue`` command.

    :rtype: argparse.ArgumentParser
    """
    common = _common()
    parser = argparse.ArgumentParser(
        prog='homoglue',
        description='Resolutions, gluing and Auslander-type conditions '
        'over bound quiver algebras.')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    for name, handler, text in (
        ('resolve', commands.resolve_command, 'minimal projective resolution'),
        ('coresolve', commands.coresolve_command,
         'minimal injective coresolution'),
    ):
        sub = subparsers.add_parser(name, parents=[common], help=text)
        sub.add_argument('--algebra', required=True,
                         help='algebra file or fixture name')
        _module_options(sub)
        sub.add_argument('--length', type=_non_negative, default=None,
                         help='index of the last term (default: cutoff)')
        sub.set_defaults(handler=handler)

    glue = subparsers.add_parser('glue', parents=[common],
                                 help='glue proper (co)resolutions')
    glue.add_argument('kind', choices=sorted(commands.GLUE_KINDS))
    glue.add_argument('--algebra', required=True)
    glue.add_argument('--ses', required=True,
                      help='short exact sequence file')
    glue.add_argument('--spec', choices=SPECS, default='projectives',
                      help='the subcategory add(X)')
    glue.add_argument('--length', type=_non_negative, default=2)
    glue.add_argument('--require', choices=('proper', 'strong'))
    glue.set_defaults(handler=commands.glue_command)

    auslander = subparsers.add_parser(
        'auslander', parents=[common],
        help='Auslander condition and condition battery')
    auslander.add_argument('--algebra', required=True)
    auslander.add_argument('--depth', type=_non_negative, default=3,
                           help='depth of the battery')
    auslander.add_argument('--structural', action='store_true',
                           help='also run the structural checks')
    auslander.set_defaults(handler=commands.auslander_command)

    verdict = subparsers.add_parser('verdict', parents=[common],
                                    help='Gorenstein or regular verdict')
    verdict.add_argument('kind', choices=('gorenstein', 'regular'))
    verdict.add_argument('--algebra', required=True)
    verdict.add_argument('--n', type=_non_negative, default=1)
    verdict.set_defaults(handler=commands.verdict_command)

    approx = subparsers.add_parser(
        'approx', parents=[common],
        help='approximation presentations and cosyzygy experiments')
    approx.add_argument('kind',
                        choices=('left', 'right', 'coleft', 'cosyzygy',
                                 'experiment', 'torsionfree'))
    approx.add_argument('--algebra', required=True)
    _module_options(approx)
    approx.add_argument('--index', type=_non_negative, default=1)
    approx.add_argument('--k', type=_non_negative, default=0)
    approx.add_argument('--n', type=_non_negative, default=None)
    approx.add_argument('--ladder', action='store_true',
                        help='attach the ladder to index - 1')
    approx.set_defaults(handler=commands.approx_command)

    fixture = subparsers.add_parser('fixture', parents=[common],
                                    help='built-in test algebras')
    fixture.add_argument('name', choices=FIXTURES)
    fixture.add_argument('--p', type=_prime, default=DEFAULT_PRIME)
    fixture.add_argument('--selftest', action='store_true',
                         help='regenerate the truth table')
    fixture.set_defaults(handler=commands.fixture_command)

    export = subparsers.add_parser('export', parents=[common],
                                   help='algebra file of a fixture')
    export.add_argument('name', choices=FIXTURES)
    export.add_argument('--p', type=_prime, default=DEFAULT_PRIME)
    export.add_argument('--output')
    export.set_defaults(handler=commands.export_command)

    plot = subparsers.add_parser('plot', parents=[common],
                                 help='save a figure')
    plot.add_argument('kind', choices=('resolve', 'coresolve', 'gnm',
                                       'quiver'))
    plot.add_argument('--algebra', required=True)
    _module_options(plot)
    plot.add_argument('--depth', type=_non_negative, default=3)
    plot.add_argument('--m', type=_non_negative, default=0)
    plot.add_argument('--output', required=True)
    plot.set_defaults(handler=commands.plot_command)
    return parser


def run(argv=None, stream=None):
    """
    Run the command line.

    :param list(str) argv: the arguments, ``sys.argv[1:]`` if omitted.
    :param stream: where reports go, ``sys.stdout`` if omitted.
    :return: 0 when every check passed, 1 when an alarm fired or a
        library contract failed, 2 on an input or usage error or an unmet
        hypothesis, 3 when a verdict is inconclusive at the cutoff.
    :rtype: int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit:
        return commands.USAGE if exit.code else commands.OK
    writer = Writer(args.format, stream)
    try:
        records, code = args.handler(args)
    except ParseError as error:
        print(f'homoglue: {error}', file=sys.stderr)
        return commands.USAGE
    except HypothesisError as error:
        print(f'homoglue {args.command}: {error}', file=sys.stderr)
        return commands.USAGE
    except ValueError as error:
        print(f'homoglue {args.command}: internal error: {error}',
              file=sys.stderr)
        return commands.ALARM
    for record in records:
        writer.write(record)
    return code


def main():
    """Console entry point."""
    sys.exit(run())
