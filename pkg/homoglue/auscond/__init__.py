__all__ = [
    'GnmRow', 'GnmReport', 'CoGnmReport', 'is_gnm', 'is_cognm',
    'in_g_infinity', 'Sample', 'default_sample', 'explicit_sample',
    'ModuleProfile', 'profile_module', 'profile_sample', 'gldim',
    'RingVerdict', 'ring_auslander', 'STATEMENTS', 'ConditionResult',
    'BatteryReport', 'auslander_battery', 'consistency_alarms',
    'CheckResult', 'StructuralReport', 'structural_checks',
    'projective_shift', 'InequalityRow', 'VerdictReport',
    'gorenstein_verdict', 'regular_verdict'
]

from .gnm import (GnmRow, GnmReport, CoGnmReport, is_gnm, is_cognm,
                  in_g_infinity)
from .sample import (Sample, default_sample, explicit_sample, ModuleProfile,
                     profile_module, profile_sample)
from .ring import gldim, RingVerdict, ring_auslander
from .battery import (STATEMENTS, ConditionResult, BatteryReport,
                      auslander_battery, consistency_alarms)
from .structural import (CheckResult, StructuralReport, structural_checks,
                         projective_shift)
from .verdict import (InequalityRow, VerdictReport, gorenstein_verdict,
                      regular_verdict)
