""" Module for loading the command-line inputs. """
import os

from ..fixtures import FIXTURES, fixture
from ..formats import ParseError, parse_algebra, parse_module, parse_ses
from ..glue import SubcatSpec
from ..quiver import injective, projective, regular, simple

SPECS = ('projectives', 'injectives', 'both')


def _read(path):
    try:
        with open(path, 'r') as fp:
            return fp.read()
    except OSError as error:
        raise ParseError(error.strerror or str(error), path) from None


def load_algebra(source):
    """
    The algebra of an algebra file, or of a fixture when ``source`` names
    one and no such file exists.

    :rtype: BoundQuiverAlgebra
    :raises ParseError: if the file is malformed or missing.
    """
    if not os.path.exists(source) and source in FIXTURES:
        return fixture(source).algebra
    name = os.path.splitext(os.path.basename(source))[0]
    return parse_algebra(_read(source), source, name)


def load_module(args, algebra, required=True):
    """
    The module named on the command line: a module file, or a standard
    module at a vertex.

    :return: the module, or ``None`` when none is given and not required.
    :raises ParseError: if the file is malformed or none is given.
    """
    standard = (('simple', simple), ('projective', projective),
                ('injective', injective))
    for option, build in standard:
        vertex = getattr(args, option, None)
        if vertex is not None:
            if not 0 <= vertex < algebra.vertex_count:
                raise ParseError(f'vertex {vertex} out of range',
                                 f'--{option}')
            return build(algebra, vertex)
    if getattr(args, 'regular', False):
        return regular(algebra)
    path = getattr(args, 'module', None)
    if path is None:
        if required:
            raise ParseError('a module is required (--module, --simple, '
                             '--projective, --injective or --regular)',
                             '<argv>')
        return None
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_module(_read(path), algebra, path, name)


def load_ses(path, algebra):
    """The short exact sequence of a sequence file."""
    return parse_ses(_read(path), algebra, path)


def subcategory(name, algebra):
    """
    ``add(A)``, ``add(D A)`` or ``add(A + D A)``.

    :rtype: SubcatSpec
    """
    projectives = [projective(algebra, v) for v in algebra.vertices]
    injectives = [injective(algebra, v) for v in algebra.vertices]
    generators = {
        'projectives': projectives,
        'injectives': injectives,
        'both': projectives + injectives,
    }
    if name not in generators:
        raise ParseError(f'unknown subcategory {name!r}', '--spec')
    return SubcatSpec(generators[name], name)
