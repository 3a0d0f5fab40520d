__all__ = [
    'AugmentedComplex', 'horseshoe_tower', 'radical', 'socle', 'top',
    'top_vertices', 'cover_data', 'projective_cover', 'injective_envelope',
    'is_projective', 'is_injective', 'summand_label', 'projective_label',
    'injective_label', 'min_resolution', 'min_coresolution',
    'syzygy', 'cosyzygy', 'DimensionReport', 'pd', 'id', 'fd',
    'sup_dimension', 'transpose', 'presentation_dual', 'ext',
    'ext_via_coresolution', 'ext_cocycles', 'n_torsionfree', 'is_isomorphic',
    'FindimScan', 'findim_scan'
]

from .complex import AugmentedComplex, horseshoe_tower
from .cover import (radical, socle, top, top_vertices, cover_data,
                    projective_cover, injective_envelope, is_projective,
                    is_injective, summand_label, projective_label,
                    injective_label)
from .resolution import min_resolution, min_coresolution, syzygy, cosyzygy
from .dimension import DimensionReport, pd, id, fd, sup_dimension
from .transpose import transpose, presentation_dual
from .ext import ext, ext_via_coresolution, ext_cocycles, n_torsionfree
from .scan import is_isomorphic, FindimScan, findim_scan
