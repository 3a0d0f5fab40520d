__all__ = [
    'SubcatSpec', 'precover', 'preenvelope', 'ProperResolution',
    'proper_resolution', 'proper_coresolution', 'right_minimal_reduce',
    'left_minimal_reduce', 'minimal_proper_resolution', 'GlueResult',
    'GluingInterface', 'FirstTermGluing', 'LastTermGluing', 'DualGluing',
    'glue_first', 'glue_last_res', 'glue_last_cores', 'glue_first_cores',
    'iterate_glue', 'GLUINGS'
]

from .subcat import SubcatSpec, precover, preenvelope
from .proper import (ProperResolution, proper_resolution, proper_coresolution,
                     right_minimal_reduce, left_minimal_reduce,
                     minimal_proper_resolution)
from .gluing import (GlueResult, GluingInterface, FirstTermGluing,
                     LastTermGluing, DualGluing, glue_first, glue_last_res,
                     glue_last_cores, glue_first_cores, iterate_glue, GLUINGS)
