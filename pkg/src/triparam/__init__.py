from src.triparam.max_monodromy import HodgeTransform, MaxMonodromyResult, max_monodromy_refinement
from src.triparam.parameters import Character, parameters_to_invariants, refinement_to_parameters

__all__ = [
    'Character', 'HodgeTransform', 'MaxMonodromyResult', 'max_monodromy_refinement',
    'parameters_to_invariants', 'refinement_to_parameters',
]
