from src.oracle.brute_force import oracle_admissible, oracle_critical_indices, oracle_l_invariant
from src.oracle.random_instances import (PlantedJumpLine, PlantedMaxMonodromy, RandomInstanceConfig,
                                         planted_jump_line, planted_max_monodromy, random_distinct_module,
                                         random_refinement)

__all__ = [
    'PlantedJumpLine', 'PlantedMaxMonodromy', 'RandomInstanceConfig', 'oracle_admissible',
    'oracle_critical_indices', 'oracle_l_invariant', 'planted_jump_line', 'planted_max_monodromy',
    'random_distinct_module', 'random_refinement',
]
