from src.refine.decomposition import (SDecomposition, classify_decomposition, perfect_basis,
                                      s_decomposition)
from src.refine.duality import dual_perfect_basis, dual_refinement, dual_s_perfect_basis
from src.refine.l_invariant import (LInvariantEntry, LInvariantReport, Verdict, check_s_perfect,
                                    l_invariant_report, s_perfect_basis, strong_criticality)
from src.refine.monodromy import GradedMonodromy, GradedTarget, critical_indices, graded_monodromy
from src.refine.refinement import Refinement, enumerate_refinements, make_refinement

__all__ = [
    'GradedMonodromy', 'GradedTarget', 'LInvariantEntry', 'LInvariantReport', 'Refinement',
    'SDecomposition', 'Verdict', 'check_s_perfect', 'classify_decomposition', 'critical_indices',
    'dual_perfect_basis', 'dual_refinement', 'dual_s_perfect_basis', 'enumerate_refinements',
    'graded_monodromy', 'l_invariant_report', 'make_refinement', 'perfect_basis', 's_decomposition',
    's_perfect_basis', 'strong_criticality',
]
