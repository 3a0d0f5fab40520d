__all__ = [
    'Arrow', 'Path', 'Quiver', 'BoundQuiverAlgebra', 'Representation',
    'ModuleKey', 'Morphism', 'hom_basis', 'lift', 'extend', 'coordinates',
    'hom_map', 'is_hom_epic', 'subrepresentation', 'quotient_by', 'kernel',
    'image', 'cokernel', 'corestriction', 'factor_through_cokernel',
    'DirectSum', 'direct_sum', 'row_morphism', 'column_morphism',
    'diagonal_morphism', 'Pullback', 'Pushout', 'pullback', 'pushout',
    'matlis_dual', 'evaluation',
    'projective', 'injective', 'simple', 'zero_module', 'regular',
    'projective_morphism', 'is_exact_at', 'ShortExactSequence',
    'LongExactSequence', 'horseshoe_fill', 'cohorseshoe_fill',
    'random_element', 'random_morphism', 'random_module', 'random_ses',
    'pullback_preserves_hom_epi', 'pushout_preserves_hom_epi'
]

from .quiver import Arrow, Path, Quiver
from .algebra import BoundQuiverAlgebra
from .representation import Representation, ModuleKey
from .morphism import Morphism
from .hom import hom_basis, lift, extend, coordinates, hom_map, is_hom_epic
from .constructions import (subrepresentation, quotient_by, kernel, image,
                            cokernel, corestriction, factor_through_cokernel,
                            DirectSum, direct_sum, row_morphism,
                            column_morphism, diagonal_morphism, Pullback,
                            Pushout, pullback, pushout)
from .duality import matlis_dual, evaluation
from .standard import (projective, injective, simple, zero_module, regular,
                       projective_morphism)
from .sequence import (is_exact_at, ShortExactSequence, LongExactSequence,
                       horseshoe_fill, cohorseshoe_fill)
from .random import (random_element, random_morphism, random_module,
                     random_ses)
from .squares import pullback_preserves_hom_epi, pushout_preserves_hom_epi
