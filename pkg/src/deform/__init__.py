from src.deform.colmez import ColmezTranslation, colmez_translate
from src.deform.constraints import (ConstraintStatus, ConstraintSystem, DeformationReport, check_deformation,
                                    constraint_system)
from src.deform.family import FirstOrderCharacter, FirstOrderFamily, residual

__all__ = [
    'ColmezTranslation', 'ConstraintStatus', 'ConstraintSystem', 'DeformationReport', 'FirstOrderCharacter',
    'FirstOrderFamily', 'check_deformation', 'colmez_translate', 'constraint_system', 'residual',
]
