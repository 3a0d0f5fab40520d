""" Module for quivers. """
from typing import NamedTuple, Tuple

import networkx as nx

from ..utils import check_non_negative


class Arrow(NamedTuple):
    """An arrow ``id: source -> target``."""
    id: str
    source: int
    target: int


class Path(NamedTuple):
    """
    A path of the quiver. Arrows are listed in the order they are
    applied, so the word ``('a', 'b')`` means apply ``a`` then ``b``. The
    trivial path at ``v`` is ``Path(v, v, ())``.
    """
    source: int
    target: int
    arrows: Tuple[str, ...]

    @property
    def length(self):
        """Number of arrows."""
        return len(self.arrows)

    def reversed(self):
        """The same word read backwards, a path of the opposite quiver."""
        return Path(self.target, self.source, tuple(reversed(self.arrows)))

    def __str__(self):
        if not self.arrows:
            return f'e{self.source}'
        return '.'.join(self.arrows)


class Quiver:
    """
    A finite quiver with vertices ``0, ..., vertex_count - 1`` and
    string-labelled arrows. The underlying multigraph is kept as a
    ``networkx.MultiDiGraph`` whose edge keys are the arrow ids.

    :Example:
        >>> Q = Quiver(2, [('a', 0, 1), ('b', 0, 1)])
        >>> [str(p) for p in Q.paths(1)]
        ['a', 'b']
    """

    def __init__(self, vertex_count, arrows=()):
        """
        :param int vertex_count: number of vertices.
        :param list arrows: triples ``(id, source, target)``.
        :raises ValueError: on repeated ids or out-of-range endpoints.
        """
        check_non_negative(vertex_count, 'vertex_count')
        self._vertex_count = int(vertex_count)
        self._arrows = {}
        self._graph = nx.MultiDiGraph()
        self._graph.add_nodes_from(range(self._vertex_count))
        for item in arrows:
            arrow = Arrow(str(item[0]), int(item[1]), int(item[2]))
            if arrow.id in self._arrows:
                raise ValueError(f'Arrow id {arrow.id!r} is repeated.')
            for end in (arrow.source, arrow.target):
                if not 0 <= end < self._vertex_count:
                    raise ValueError(f'Arrow {arrow.id!r} has endpoint {end} '
                                     f'outside 0..{self._vertex_count - 1}.')
            self._arrows[arrow.id] = arrow
            self._graph.add_edge(arrow.source, arrow.target, key=arrow.id)

    @property
    def vertex_count(self):
        """Number of vertices."""
        return self._vertex_count

    @property
    def vertices(self):
        """The vertex range."""
        return range(self._vertex_count)

    @property
    def arrows(self):
        """The arrows, in insertion order."""
        return tuple(self._arrows.values())

    @property
    def graph(self):
        """The underlying ``networkx.MultiDiGraph``."""
        return self._graph

    def arrow(self, arrow_id):
        """
        Look an arrow up by id.

        :raises KeyError: if there is no such arrow.
        """
        try:
            return self._arrows[arrow_id]
        except KeyError:
            raise KeyError(f'Unknown arrow {arrow_id!r}.') from None

    def arrows_from(self, v):
        """Arrows with source ``v``."""
        edges = self._graph.out_edges(v, keys=True)
        return [self._arrows[k] for _, _, k in edges]

    def arrows_into(self, v):
        """Arrows with target ``v``."""
        return [self._arrows[k] for _, _, k in self._graph.in_edges(v,
                                                                    keys=True)]

    def path(self, word, source=None):
        """
        Build the path of a word of arrow ids.

        :param word: sequence of arrow ids; a string of one-letter ids works.
        :param int source: required for the empty word.
        :raises ValueError: if consecutive arrows do not compose.
        """
        word = tuple(str(a) for a in word)
        if not word:
            if source is None:
                raise ValueError('The trivial path needs a source vertex.')
            return Path(source, source, ())
        arrows = [self.arrow(a) for a in word]
        for first, second in zip(arrows, arrows[1:]):
            if first.target != second.source:
                raise ValueError(f'Arrows {first.id!r} and {second.id!r} do '
                                 f'not compose in the word {word}.')
        return Path(arrows[0].source, arrows[-1].target, word)

    def paths(self, length):
        """
        All paths of exactly the given length, in lexicographic order of
        (source, word).
        """
        check_non_negative(length, 'length')
        current = [Path(v, v, ()) for v in self.vertices]
        for _ in range(length):
            extended = []
            for path in current:
                for arrow in sorted(self.arrows_from(path.target),
                                    key=lambda a: a.id):
                    extended.append(
                        Path(path.source, arrow.target,
                             path.arrows + (arrow.id, )))
            current = extended
        return sorted(current, key=lambda p: (p.source, p.arrows))

    def is_acyclic(self):
        """True if the quiver has no oriented cycle (loops included)."""
        return nx.is_directed_acyclic_graph(self._graph)

    def opposite(self):
        """The quiver with every arrow reversed, ids preserved."""
        return Quiver(self._vertex_count,
                      [(a.id, a.target, a.source) for a in self.arrows])

    def __eq__(self, other):
        return (isinstance(other, Quiver)
                and other._vertex_count == self._vertex_count
                and other.arrows == self.arrows)

    __hash__ = None

    def __repr__(self):
        arrows = ', '.join(f'{a.id}:{a.source}->{a.target}'
                           for a in self.arrows)
        return f'Quiver({self._vertex_count}, [{arrows}])'
