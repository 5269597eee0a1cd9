"""Filtered (phi, N)-modules over Q: the data type, validation and numerical invariants."""
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import sympy

from src.exceptions import InvalidModule
from src.linalg.matrix import Matrix
from src.linalg.scalar import ScalarLike, valuation
from src.linalg.subspace import Subspace, canonicalize, coordinate_subspace
from src.logger import logging
from src.modules.eigen import eigenvalue_list
from src.modules.filtration import Filtration


@dataclass(frozen=True)
class FilteredPhiNModule:
    """
    Dimension n, Frobenius ``phi`` (invertible), monodromy (nilpotent,
    N phi = p phi N) and a Z-indexed descending filtration.

    Construction does not validate; see :func:`validate_module`.
    """

    p: int
    phi: Matrix
    monodromy: Matrix
    filtration: Filtration

    @classmethod
    def build(cls, p: int, phi: Sequence[Sequence[ScalarLike]], monodromy: Sequence[Sequence[ScalarLike]],
              filtration: Sequence[Tuple[int, Sequence[Sequence[ScalarLike]]]]) -> 'FilteredPhiNModule':
        """Build from row lists; filtration given as ``(jump, generators)`` pairs."""
        phi_m = Matrix.from_rows(phi)
        n = phi_m.nrows
        steps = [(jump, canonicalize(generators, n)) for jump, generators in filtration]
        return cls(int(p), phi_m, Matrix.from_rows(monodromy, ncols=n), Filtration.from_steps(n, steps))

    @property
    def n(self) -> int:
        return self.phi.nrows

    def fil(self, i: int) -> Subspace:
        return self.filtration.at(i)

    def in_basis(self, basis: Matrix) -> 'FilteredPhiNModule':
        """The same module written in the basis given by the columns of ``basis``."""
        inverse = basis.inverse()
        return FilteredPhiNModule(
            self.p,
            inverse @ self.phi @ basis,
            inverse @ self.monodromy @ basis,
            self.filtration.transform(self.n, lambda space: space.image(inverse)),
        )

    def block(self, lo: int, hi: int) -> 'FilteredPhiNModule':
        """
        Subquotient span(e_1..e_hi) / span(e_1..e_lo) in the current coordinates.

        Both coordinate spans must be stable; coordinates lo..hi-1 (0-based)
        become the coordinates of the result.
        """
        indices = list(range(lo, hi))
        top = coordinate_subspace(self.n, range(hi))
        size = hi - lo
        filtration = Filtration.normalized(size, [
            (j, canonicalize([b[lo:hi] for b in space.intersect(top).basis], size))
            for j, space in self.filtration.steps
        ])
        return FilteredPhiNModule(self.p, self.phi.submatrix(indices, indices),
                                  self.monodromy.submatrix(indices, indices), filtration)


@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class HodgeData:
    weights: Tuple[int, ...]
    t_h: int


@dataclass(frozen=True)
class NewtonData:
    slopes: Tuple[int, ...]
    t_n: int


def validate_module(module: FilteredPhiNModule) -> ValidationReport:
    """List every violated invariant; an empty report means the module is valid."""
    report = ValidationReport()
    n = module.n
    if not sympy.isprime(module.p):
        report.violations.append('p = %d is not prime' % module.p)
    if not module.phi.is_square:
        report.violations.append('phi is %dx%d, not square' % module.phi.shape)
        return report
    if module.monodromy.shape != (n, n):
        report.violations.append('monodromy is %dx%d, expected %dx%d' % (module.monodromy.shape + (n, n)))
        return report
    if n and module.phi.determinant() == 0:
        report.violations.append('det(phi) = 0')
    if n and not module.monodromy.power(n).is_zero():
        report.violations.append('monodromy is not nilpotent (N^%d != 0)' % n)
    lhs = module.monodromy @ module.phi
    rhs = (module.phi @ module.monodromy).scale(module.p)
    if lhs != rhs:
        report.violations.append('NΦ ≠ pΦN')
    if module.filtration.ambient_dim != n:
        report.violations.append('filtration lives in dimension %d, expected %d'
                                 % (module.filtration.ambient_dim, n))
    else:
        report.violations.extend(module.filtration.violations())
    if report.violations:
        logging.debug('module validation found %d violation(s): %s', len(report.violations), report.violations)
    return report


def require_valid(module: FilteredPhiNModule) -> None:
    report = validate_module(module)
    if not report.valid:
        logging.error('Invalid filtered (phi,N)-module: %s', report.violations)
        raise InvalidModule(report.violations)


def hodge_data(module: FilteredPhiNModule) -> HodgeData:
    weights = tuple(module.filtration.weights())
    return HodgeData(weights, sum(weights))


def frobenius_valuation(module: FilteredPhiNModule) -> int:
    """t_N = v_p(det phi)."""
    if module.n == 0:
        return 0
    return valuation(module.phi.determinant(), module.p)


def newton_data(module: FilteredPhiNModule) -> NewtonData:
    """
    Newton slopes v_p(alpha_i) and t_N.

    Raises
    ------
    IrrationalEigenvalues
        If the characteristic polynomial of phi does not split over Q.
    """
    slopes = tuple(sorted(valuation(alpha, module.p) for alpha in eigenvalue_list(module.phi)))
    t_n = frobenius_valuation(module)
    return NewtonData(slopes, t_n)


def zero_module(p: int) -> FilteredPhiNModule:
    return FilteredPhiNModule(p, Matrix.zeros(0, 0), Matrix.zeros(0, 0), Filtration(0, ()))


def unit_module(p: int) -> FilteredPhiNModule:
    """D_0: phi = 1, N = 0, Hodge weight 0."""
    return FilteredPhiNModule.build(p, [[1]], [[0]], [(0, [[1]])])
