from src.modules.admissibility import (AdmissibilityReport, AdmissibilityVerdict, is_admissible,
                                       stable_subspaces)
from src.modules.constructions import dual_module, induced_sub_quotient, tensor
from src.modules.filtration import Filtration
from src.modules.phin_module import (FilteredPhiNModule, HodgeData, NewtonData, ValidationReport,
                                     hodge_data, newton_data, require_valid, validate_module)

__all__ = [
    'AdmissibilityReport', 'AdmissibilityVerdict', 'FilteredPhiNModule', 'Filtration', 'HodgeData',
    'NewtonData', 'ValidationReport', 'dual_module', 'hodge_data', 'induced_sub_quotient',
    'is_admissible', 'newton_data', 'require_valid', 'stable_subspaces', 'tensor', 'validate_module',
]
