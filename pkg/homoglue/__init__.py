__all__ = [
    'PrimeField', 'Matrix', 'Quiver', 'BoundQuiverAlgebra', 'Representation',
    'Morphism', 'ShortExactSequence', 'AugmentedComplex', 'SubcatSpec',
    'ProperResolution', 'Writer', 'Plotter', 'fixture'
]

from .meta import *
from .linalg import PrimeField, Matrix
from .quiver import (Quiver, BoundQuiverAlgebra, Representation, Morphism,
                     ShortExactSequence)
from .resolve import AugmentedComplex
from .glue import SubcatSpec, ProperResolution
from .writer import Writer
from .plotter import Plotter
from .fixtures import fixture
