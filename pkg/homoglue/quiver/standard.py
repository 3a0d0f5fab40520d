""" Module for the standard modules of a bound quiver algebra. """
import numpy as np

from .constructions import DirectSum
from .duality import matlis_dual
from .morphism import Morphism
from .representation import Representation
from ..linalg import Matrix
from ..utils import check_consistency


def _check_vertex(algebra, v):
    if not 0 <= v < algebra.vertex_count:
        raise ValueError(f'Vertex {v} outside 0..{algebra.vertex_count - 1}.')


def projective(algebra, v):
    """
    The indecomposable projective ``P(v)``: at vertex ``w`` the paths
    ``v -> w`` modulo the relations, arrows acting by extending paths.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param int v: the vertex.
    :rtype: Representation
    """
    _check_vertex(algebra, v)
    key = ('projective', v)
    if key not in algebra.cache:
        field = algebra.field
        dims = [algebra.dim(v, w) for w in algebra.vertices]
        maps = {}
        for arrow in algebra.quiver.arrows:
            basis = algebra.path_basis(v, arrow.source)
            cols = [algebra.extend(q, arrow.id) for q in basis]
            shape = (dims[arrow.target], dims[arrow.source])
            if cols:
                maps[arrow.id] = Matrix(field, np.array(cols).T, shape=shape)
        algebra.cache[key] = Representation(algebra,
                                            dims,
                                            maps,
                                            name=f'P({v})',
                                            check=False)
    return algebra.cache[key]


def injective(algebra, v):
    """
    The indecomposable injective ``I(v)``, realized as the Matlis dual of
    the projective at ``v`` of the opposite algebra.

    :rtype: Representation
    """
    _check_vertex(algebra, v)
    key = ('injective', v)
    if key not in algebra.cache:
        dual = matlis_dual(projective(algebra.opposite(), v))
        algebra.cache[key] = dual.renamed(f'I({v})')
    return algebra.cache[key]


def simple(algebra, v):
    """The simple module ``S(v)``."""
    _check_vertex(algebra, v)
    dims = [1 if w == v else 0 for w in algebra.vertices]
    return Representation(algebra, dims, name=f'S({v})', check=False)


def zero_module(algebra):
    """The zero representation."""
    return Representation(algebra, [0] * algebra.vertex_count,
                          name='0',
                          check=False)


def regular(algebra):
    """The regular module, the direct sum of all ``P(v)``."""
    summands = [projective(algebra, v) for v in algebra.vertices]
    return DirectSum(summands, algebra).module.renamed('A')


def projective_morphism(algebra, v, module, element):
    """
    The morphism ``P(v) -> M`` sending the trivial path at ``v`` to
    ``element``: a path ``q`` is sent to ``M_q(element)``.

    :param BoundQuiverAlgebra algebra: the algebra.
    :param int v: the vertex.
    :param Representation module: the target ``M``.
    :param element: a vector of ``M_v`` (list or one-column Matrix).
    :rtype: Morphism
    """
    check_consistency(module, Representation)
    field = algebra.field
    if not isinstance(element, Matrix):
        element = Matrix(field, element, shape=(module.dims[v], 1))
    if element.shape != (module.dims[v], 1):
        raise ValueError(f'Expected a vector of length {module.dims[v]}.')
    source = projective(algebra, v)
    blocks = []
    for w in algebra.vertices:
        basis = algebra.path_basis(v, w)
        if not basis:
            blocks.append(Matrix.zeros(field, module.dims[w], 0))
            continue
        columns = [module.path_matrix(q) @ element for q in basis]
        blocks.append(
            Matrix(field,
                   np.hstack([c.array for c in columns]),
                   shape=(module.dims[w], len(basis))))
    return Morphism(source, module, blocks, check=False)
