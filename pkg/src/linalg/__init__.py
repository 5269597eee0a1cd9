from src.linalg.dual import DualNumber
from src.linalg.matrix import Matrix, nullspace, rref, solve_particular
from src.linalg.scalar import (Scalar, Vector, as_scalar, as_vector, format_rational,
                               parse_rational, valuation)
from src.linalg.subspace import (Flag, Subspace, annihilator, canonicalize, coordinate_subspace,
                                 express, full_space, intersect, solve_in_span, span,
                                 subspace_sum, zero_subspace)

__all__ = [
    'DualNumber', 'Flag', 'Matrix', 'Scalar', 'Subspace', 'Vector', 'annihilator', 'as_scalar',
    'as_vector', 'canonicalize', 'coordinate_subspace', 'express', 'format_rational', 'full_space',
    'intersect', 'nullspace', 'parse_rational', 'rref', 'solve_in_span', 'solve_particular', 'span',
    'subspace_sum', 'valuation', 'zero_subspace',
]
