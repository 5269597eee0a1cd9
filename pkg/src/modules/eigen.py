"""Rational eigenvalues, eigenspaces and eigenprojections of Frobenius."""
from fractions import Fraction
from typing import Dict, List, Tuple

import sympy

from src.exceptions import IrrationalEigenvalues, NotSemisimple
from src.linalg.matrix import Matrix
from src.linalg.scalar import Vector, as_scalar, combine
from src.linalg.subspace import Subspace, canonicalize
from src.logger import logging


def characteristic_polynomial(phi: Matrix) -> sympy.Poly:
    x = sympy.Symbol('x')
    rows = [[sympy.Rational(a.numerator, a.denominator) for a in row] for row in phi.rows]
    return sympy.Matrix(rows).charpoly(x)


def rational_eigenvalues(phi: Matrix) -> Dict[Fraction, int]:
    """
    Eigenvalues with algebraic multiplicities, ascending.

    Raises
    ------
    IrrationalEigenvalues
        If the characteristic polynomial does not split over Q.
    """
    if phi.nrows == 0:
        return {}
    poly = characteristic_polynomial(phi)
    roots = sympy.roots(poly, filter='Q')
    if sum(roots.values()) != phi.nrows:
        logging.debug('characteristic polynomial %s does not split over Q', poly.as_expr())
        raise IrrationalEigenvalues('characteristic polynomial %s does not split over Q' % poly.as_expr())
    return {as_scalar(r): int(m) for r, m in sorted(roots.items(), key=lambda item: as_scalar(item[0]))}


def eigenvalue_list(phi: Matrix) -> List[Fraction]:
    out: List[Fraction] = []
    for value, mult in rational_eigenvalues(phi).items():
        out.extend([value] * mult)
    return out


def has_distinct_eigenvalues(phi: Matrix) -> bool:
    return all(m == 1 for m in rational_eigenvalues(phi).values())


def eigenspace(phi: Matrix, value: Fraction) -> Subspace:
    shifted = phi - Matrix.identity(phi.nrows).scale(value)
    return canonicalize(shifted.kernel(), phi.nrows)


def is_semisimple(phi: Matrix) -> bool:
    return all(eigenspace(phi, v).dim == m for v, m in rational_eigenvalues(phi).items())


def eigenbasis(phi: Matrix) -> List[Tuple[Fraction, Vector]]:
    """
    Eigenvectors (canonical eigenspace bases, eigenvalues ascending).

    Raises
    ------
    NotSemisimple
        If phi is not diagonalizable over Q.
    """
    pairs: List[Tuple[Fraction, Vector]] = []
    for value, mult in rational_eigenvalues(phi).items():
        space = eigenspace(phi, value)
        if space.dim != mult:
            raise NotSemisimple('eigenvalue %s has multiplicity %d but a %d-dimensional eigenspace'
                                % (value, mult, space.dim))
        pairs.extend((value, b) for b in space.basis)
    return pairs


class Eigenprojector:
    """Projections onto the eigenspaces of a semisimple phi."""

    def __init__(self, phi: Matrix):
        pairs = eigenbasis(phi)
        self.n = phi.nrows
        self.values = [v for v, _ in pairs]
        self.vectors = [b for _, b in pairs]
        self._to_eigen = Matrix.from_columns(self.vectors, nrows=self.n).inverse() if self.n else None

    def component(self, v: Vector, value: Fraction) -> Vector:
        """The ``value``-eigencomponent of v."""
        if self.n == 0:
            return v
        coordinates = self._to_eigen.apply(v)
        kept = [c if lam == value else Fraction(0) for c, lam in zip(coordinates, self.values)]
        return combine(kept, self.vectors, self.n)
