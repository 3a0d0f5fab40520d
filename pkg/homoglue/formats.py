""" Module for the line-oriented algebra, module and morphism files. """
import re

from .linalg import Matrix, PrimeField
from .quiver import (Quiver, BoundQuiverAlgebra, Representation, Morphism,
                     ShortExactSequence)
from .resolve import AugmentedComplex
from .resolve.complex import RESOLUTION, CORESOLUTION
from .utils import check_consistency

_TERM = re.compile(r'^([+-]?\d*)\*?(.+)$')


class ParseError(ValueError):
    """
    A malformed input file. The message is prefixed with
    ``file:line:column``.
    """

    def __init__(self, message, filename='<text>', line=0, column=0):
        super().__init__(f'{filename}:{line}:{column}: {message}')
        self.filename = filename
        self.line = line
        self.column = column


def _lines(text):
    """Non-blank lines with comments removed, as ``(number, tokens)``."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield number, line


def _ints(tokens, filename, number, line):
    values = []
    for token in tokens:
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f'expected an integer, got {token!r}', filename,
                             number,
                             line.find(token) + 1) from None
    return values


def _word(token, quiver):
    """Arrow ids of a path token: dot-separated, or one letter per arrow."""
    if '.' in token:
        return token.split('.')
    if token in {a.id for a in quiver.arrows}:
        return [token]
    return list(token)


def _parse_relation(body, quiver, filename, number, line):
    relation = []
    for term in body.replace('-', '+-').split('+'):
        term = term.strip()
        if not term:
            continue
        match = _TERM.match(term)
        coeff, word = match.group(1), match.group(2).strip()
        coeff = int(coeff) if coeff not in ('', '+', '-') else (
            -1 if coeff == '-' else 1)
        try:
            quiver.path(_word(word, quiver))
        except (KeyError, ValueError) as error:
            raise ParseError(str(error), filename, number,
                             line.find(word) + 1) from None
        relation.append((coeff, _word(word, quiver)))
    return relation


def parse_algebra(text, filename='<text>', name=''):
    """
    Parse an algebra file::

        field 5
        vertices 2
        arrow a 0 1
        rel 1*ab + 4*cd

    Vertices are 0-indexed. Path words are dot-separated arrow ids
    (``a.b``), or concatenated one-letter ids (``ab``).

    :param str text: the file contents.
    :param str filename: used in diagnostics.
    :rtype: BoundQuiverAlgebra
    :raises ParseError: on malformed input or an invalid algebra.
    """
    p, count, arrows, relations = None, None, [], []
    pending = []
    for number, line in _lines(text):
        head, *rest = line.split(None, 1)
        rest = rest[0] if rest else ''
        if head == 'field':
            p, = _ints(rest.split(), filename, number, line)
        elif head == 'vertices':
            count, = _ints(rest.split(), filename, number, line)
        elif head == 'arrow':
            tokens = rest.split()
            if len(tokens) != 3:
                raise ParseError('arrow lines read "arrow <id> <src> <tgt>"',
                                 filename, number, 1)
            src, tgt = _ints(tokens[1:], filename, number, line)
            arrows.append((tokens[0], src, tgt))
        elif head == 'rel':
            pending.append((number, line, rest))
        else:
            raise ParseError(f'unknown keyword {head!r}', filename, number, 1)
    if p is None or count is None:
        raise ParseError('the header needs "field p" and "vertices n"',
                         filename, 1, 1)
    try:
        field = PrimeField(p)
        quiver = Quiver(count, arrows)
    except ValueError as error:
        raise ParseError(str(error), filename, 1, 1) from None
    for number, line, body in pending:
        relations.append(
            _parse_relation(body, quiver, filename, number, line))
    try:
        return BoundQuiverAlgebra(quiver, field, relations, name=name)
    except ValueError as error:
        raise ParseError(str(error), filename, 1, 1) from None


def _matrix_rows(lines, start, rows, cols, field, filename):
    """Read ``rows`` matrix rows of ``cols`` entries from ``lines``."""
    values = []
    for offset in range(rows):
        if start + offset >= len(lines):
            number = lines[-1][0] if lines else 0
            raise ParseError(f'expected {rows} matrix rows', filename,
                             number, 1)
        number, line = lines[start + offset]
        row = _ints(line.split(), filename, number, line)
        if len(row) != cols:
            raise ParseError(f'expected {cols} entries, got {len(row)}',
                             filename, number, 1)
        values.append(row)
    return Matrix(field, values, shape=(rows, cols)), start + rows


def parse_module(text, algebra, filename='<text>', name=''):
    """
    Parse a module file::

        dims 1 1
        map a
        1

    Every ``map <arrow-id>`` line is followed by ``dims[target]`` rows of
    ``dims[source]`` entries; arrows without a map act by zero.

    :rtype: Representation
    :raises ParseError: on malformed input or violated relations.
    """
    check_consistency(algebra, BoundQuiverAlgebra)
    lines = list(_lines(text))
    dims, maps, i = None, {}, 0
    while i < len(lines):
        number, line = lines[i]
        head, *rest = line.split()
        if head == 'dims':
            dims = _ints(rest, filename, number, line)
            if len(dims) != algebra.vertex_count:
                raise ParseError(f'expected {algebra.vertex_count} '
                                 f'dimensions, got {len(dims)}', filename,
                                 number, 1)
            i += 1
        elif head == 'map':
            if dims is None:
                raise ParseError('"dims" must come before the maps', filename,
                                 number, 1)
            if len(rest) != 1:
                raise ParseError('map lines read "map <arrow-id>"', filename,
                                 number, 1)
            try:
                arrow = algebra.quiver.arrow(rest[0])
            except KeyError as error:
                raise ParseError(str(error), filename, number, 5) from None
            maps[arrow.id], i = _matrix_rows(lines, i + 1,
                                             dims[arrow.target],
                                             dims[arrow.source],
                                             algebra.field, filename)
        else:
            raise ParseError(f'unknown keyword {head!r}', filename, number, 1)
    if dims is None:
        raise ParseError('missing "dims" line', filename, 1, 1)
    try:
        return Representation(algebra, dims, maps, name=name)
    except ValueError as error:
        raise ParseError(str(error), filename, 1, 1) from None


def parse_morphism(text, source, target, filename='<text>'):
    """
    Parse the blocks of a morphism::

        block 0
        1 0
        block 1
        1

    Each ``block <vertex>`` is followed by ``target.dims[v]`` rows; missing
    blocks are zero.

    :rtype: Morphism
    :raises ParseError: on malformed input or non-commuting squares.
    """
    lines = list(_lines(text))
    field = source.field
    blocks = [
        Matrix.zeros(field, t, s) for s, t in zip(source.dims, target.dims)
    ]
    i = 0
    while i < len(lines):
        number, line = lines[i]
        head, *rest = line.split()
        if head != 'block' or len(rest) != 1:
            raise ParseError('expected "block <vertex>"', filename, number, 1)
        v, = _ints(rest, filename, number, line)
        if not 0 <= v < len(blocks):
            raise ParseError(f'vertex {v} out of range', filename, number, 7)
        blocks[v], i = _matrix_rows(lines, i + 1, target.dims[v],
                                    source.dims[v], field, filename)
    try:
        return Morphism(source, target, blocks)
    except ValueError as error:
        raise ParseError(str(error), filename, 1, 1) from None


def _format_word(path):
    if all(len(a) == 1 for a in path.arrows):
        return ''.join(path.arrows)
    return '.'.join(path.arrows)


def algebra_to_text(algebra):
    """The algebra file of ``algebra``; :func:`parse_algebra` reads it back."""
    lines = []
    if algebra.name:
        lines.append(f'# {algebra.name}')
    lines.append(f'field {algebra.field.p}')
    lines.append(f'vertices {algebra.vertex_count}')
    for arrow in algebra.quiver.arrows:
        lines.append(f'arrow {arrow.id} {arrow.source} {arrow.target}')
    for relation in algebra.relations:
        terms = ' + '.join(f'{c}*{_format_word(path)}'
                           for c, path in relation)
        lines.append(f'rel {terms}')
    return '\n'.join(lines) + '\n'


def _matrix_lines(matrix):
    return [' '.join(str(int(x)) for x in row) for row in matrix.array]


def module_to_text(module):
    """The module file of ``module``."""
    lines = []
    if module.name:
        lines.append(f'# {module.name}')
    lines.append('dims ' + ' '.join(str(d) for d in module.dims))
    for arrow in module.algebra.quiver.arrows:
        matrix = module.maps[arrow.id]
        if matrix.is_zero():
            continue
        lines.append(f'map {arrow.id}')
        lines.extend(_matrix_lines(matrix))
    return '\n'.join(lines) + '\n'


def morphism_to_text(morphism):
    """The block file of ``morphism``."""
    lines = []
    for v, block in enumerate(morphism.blocks):
        if block.is_zero():
            continue
        lines.append(f'block {v}')
        lines.extend(_matrix_lines(block))
    return '\n'.join(lines) + '\n'


def _sections(text, heads, filename):
    """
    Split ``text`` at the lines whose first token is in ``heads``. Every
    section keeps its original line numbers, so the nested parsers report
    positions in the whole file.

    :return: ``(head, argument, number, body)`` tuples in file order.
    """
    sections, current = [], None
    raw = text.splitlines()
    for number, line in _lines(text):
        head, *rest = line.split()
        if head in heads:
            current = [head, ' '.join(rest), number, ['' for _ in raw]]
            sections.append(current)
            continue
        if current is None:
            raise ParseError(f'expected one of {", ".join(sorted(heads))}',
                             filename, number, 1)
        current[3][number - 1] = raw[number - 1]
    return [(h, arg, n, '\n'.join(body)) for h, arg, n, body in sections]


def ses_to_text(ses):
    """The file of a short exact sequence ``0 -> L -> X -> R -> 0``."""
    lines = []
    for label, module in (('left', ses.left), ('middle', ses.middle),
                          ('right', ses.right)):
        lines.append(f'module {label}')
        lines.append(module_to_text(module).rstrip('\n'))
    for label, morphism in (('f', ses.f), ('g', ses.g)):
        lines.append(f'morphism {label}')
        body = morphism_to_text(morphism).rstrip('\n')
        if body:
            lines.append(body)
    return '\n'.join(lines) + '\n'


def parse_ses(text, algebra, filename='<text>'):
    """
    Parse a short exact sequence file::

        module left
        dims 0 1
        module middle
        dims 1 1
        map a
        1
        module right
        dims 1 0
        morphism f
        block 1
        1
        morphism g
        block 0
        1

    :rtype: ShortExactSequence
    :raises ParseError: on malformed input or a sequence that is not
        exact.
    """
    modules, morphisms = {}, {}
    for head, arg, number, body in _sections(text, {'module', 'morphism'},
                                             filename):
        if head == 'module':
            if arg not in ('left', 'middle', 'right'):
                raise ParseError('modules are "left", "middle" or "right"',
                                 filename, number, 8)
            modules[arg] = parse_module(body, algebra, filename, arg)
        else:
            if arg not in ('f', 'g'):
                raise ParseError('morphisms are "f" or "g"', filename,
                                 number, 10)
            morphisms[arg] = (number, body)
    missing = {'left', 'middle', 'right'} - set(modules)
    if missing:
        raise ParseError(f'missing modules {sorted(missing)}', filename, 1, 1)
    ends = {'f': ('left', 'middle'), 'g': ('middle', 'right')}
    maps = {}
    for label, (source, target) in ends.items():
        number, body = morphisms.get(label, (1, ''))
        maps[label] = parse_morphism(body, modules[source], modules[target],
                                     filename)
    try:
        return ShortExactSequence(maps['f'], maps['g'])
    except ValueError as error:
        raise ParseError(str(error), filename, 1, 1) from None


def complex_to_text(complex):
    """
    The file of an augmented complex: its direction, the terms, the
    augmentation and the differentials. :func:`parse_complex` reads it
    back given the resolved module.
    """
    lines = [f'complex {complex.direction}']
    for level, term in enumerate(complex.terms):
        lines.append(f'term {level}')
        lines.append(module_to_text(term).rstrip('\n'))
    for label, morphism in [('augmentation', complex.augmentation)] + [
            (f'differential {l}', d)
            for l, d in enumerate(complex.differentials, start=1)
    ]:
        lines.append(label)
        body = morphism_to_text(morphism).rstrip('\n')
        if body:
            lines.append(body)
    return '\n'.join(lines) + '\n'


def parse_complex(text, module, filename='<text>'):
    """
    Parse the file written by :func:`complex_to_text` into an
    :class:`AugmentedComplex` of ``module``.

    :raises ParseError: on malformed input or pieces that do not fit.
    """
    check_consistency(module, Representation)
    heads = {'complex', 'term', 'augmentation', 'differential'}
    direction, terms, maps = None, [], {}
    for head, arg, number, body in _sections(text, heads, filename):
        if head == 'complex':
            direction = arg
        elif head == 'term':
            if arg != str(len(terms)):
                raise ParseError(f'expected term {len(terms)}', filename,
                                 number, 6)
            terms.append(parse_module(body, module.algebra, filename))
        else:
            maps[(head, arg)] = (number, body)
    if direction not in (RESOLUTION, CORESOLUTION) or not terms:
        raise ParseError('expected "complex resolution|coresolution" and at '
                         'least one term', filename, 1, 1)
    resolution = direction == RESOLUTION
    ends = (terms[0], module) if resolution else (module, terms[0])
    _, body = maps.get(('augmentation', ''), (1, ''))
    augmentation = parse_morphism(body, *ends, filename)
    differentials = []
    for l in range(1, len(terms)):
        _, body = maps.get(('differential', str(l)), (1, ''))
        ends = ((terms[l], terms[l - 1]) if resolution else
                (terms[l - 1], terms[l]))
        differentials.append(parse_morphism(body, *ends, filename))
    try:
        return AugmentedComplex(direction, module, terms, differentials,
                                augmentation)
    except ValueError as error:
        raise ParseError(str(error), filename, 1, 1) from None
