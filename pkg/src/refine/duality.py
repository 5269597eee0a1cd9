"""Dual refinements F^_i = (F_{n-i})^⊥ on the dual module."""
from typing import List, Sequence, Tuple

from src.linalg.matrix import Matrix
from src.linalg.scalar import ScalarLike, Vector, scale_vector
from src.linalg.subspace import Flag
from src.logger import logging
from src.modules.constructions import dual_module
from src.refine.refinement import Refinement, make_refinement


def dual_refinement(refinement: Refinement) -> Refinement:
    """
    The dual refinement, on the flag (v*_n, ..., v*_1) of the dual basis.

    Its alphas are the inverted reversed alphas and its ks the negated
    reversed ks.
    """
    dual = dual_module(refinement.base)
    vectors = list(reversed(refinement.to_flag_coordinates.rows))
    dual_ref = make_refinement(dual, Flag.from_vectors(vectors))
    logging.debug('dual refinement with ks %s', dual_ref.ks)
    return dual_ref


def dual_index_pair(n: int, s: int, t: int) -> Tuple[int, int]:
    """(s, t) critical for F corresponds to (n+1-t, n+1-s) for the dual refinement."""
    return n + 1 - t, n + 1 - s


def dual_perfect_basis(basis: Sequence[Sequence[ScalarLike]]) -> List[Vector]:
    """(e*_n, ..., e*_1) for a basis (e_1, ..., e_n)."""
    inverse = Matrix.from_columns(basis).inverse()
    return list(reversed(inverse.rows))


def dual_s_perfect_basis(basis: Sequence[Sequence[ScalarLike]], s: int) -> List[Vector]:
    """(e*_n, ..., -e*_s, ..., e*_1): s-perfect for the dual index n+1-t."""
    dual = dual_perfect_basis(basis)
    position = len(dual) - s
    dual[position] = scale_vector(-1, dual[position])
    return dual


def reversal(n: int) -> Matrix:
    return Matrix.from_rows([[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)], ncols=n)


def dual_graded_matrix(matrix: Matrix) -> Matrix:
    """-R M^T R with R the order-reversing permutation: N_F on the dual graded basis."""
    r = reversal(matrix.nrows)
    return -(r @ matrix.transpose() @ r)
