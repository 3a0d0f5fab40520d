__all__ = [
    'LEFT', 'RIGHT', 'COLEFT', 'KINDS', 'FactorRow', 'ApproximationTest',
    'ApproxPresentation', 'ring_hypothesis', 'left_presentation',
    'right_presentation', 'cognm_presentation', 'approximation_test',
    'LadderMap', 'ladder_map', 'attach_ladder', 'ladder_coherence',
    'require_auslander', 'cosyzygy_index', 'CosyzygyReport',
    'cosyzygy_membership', 'GorensteinExperiment', 'gorenstein_experiment',
    'TorsionfreeRow', 'TorsionfreeReport', 'syzygy_torsionfree_check'
]

from .presentation import (LEFT, RIGHT, COLEFT, KINDS, FactorRow,
                           ApproximationTest, ApproxPresentation,
                           ring_hypothesis, left_presentation,
                           right_presentation, cognm_presentation,
                           approximation_test)
from .ladder import LadderMap, ladder_map, attach_ladder, ladder_coherence
from .experiments import (require_auslander, cosyzygy_index, CosyzygyReport,
                          cosyzygy_membership, GorensteinExperiment,
                          gorenstein_experiment, TorsionfreeRow,
                          TorsionfreeReport, syzygy_torsionfree_check)
