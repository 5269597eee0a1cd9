"""
The first-order constraint on families through a refinement: for every
strongly critical s with t = t_F(s),

    eps_t(p) - eps_s(p) + L_{F,s} (eps_{t,2} - eps_{s,2}) = 0.
"""
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from src.deform.family import FirstOrderFamily, residual
from src.exceptions import DeformationError
from src.linalg.matrix import Matrix
from src.linalg.scalar import dot
from src.logger import logging
from src.refine.l_invariant import LInvariantReport, Verdict, l_invariant_report
from src.refine.refinement import Refinement
from src.triparam.parameters import refinement_to_parameters


class ConstraintStatus(str, enum.Enum):
    PASS = 'Pass'
    FAIL = 'Fail'
    UNCHECKED = 'Unchecked'


@dataclass(frozen=True)
class ConstraintCheck:
    s: int
    t: int
    l_value: Optional[Fraction]
    residual: Optional[Fraction]
    status: ConstraintStatus


@dataclass
class DeformationReport:
    checks: List[ConstraintCheck] = field(default_factory=list)

    @property
    def failures(self) -> List[ConstraintCheck]:
        return [c for c in self.checks if c.status is ConstraintStatus.FAIL]

    @property
    def unchecked(self) -> List[ConstraintCheck]:
        return [c for c in self.checks if c.status is ConstraintStatus.UNCHECKED]

    @property
    def passed(self) -> bool:
        """No checked constraint fails; Unchecked indices do not count either way."""
        return not self.failures


def _check_base_point(refinement: Refinement, family: FirstOrderFamily):
    expected = refinement_to_parameters(refinement)
    for i, (char, param) in enumerate(zip(family.characters, expected), start=1):
        if char.base_delta_p is not None and char.base_delta_p != param.value_at_p:
            logging.error('Base delta_%d(p) = %s, refinement gives %s', i, char.base_delta_p, param.value_at_p)
            raise DeformationError('base value delta_%d(p) = %s does not match %s'
                                   % (i, char.base_delta_p, param.value_at_p))
        if char.base_weight is not None and char.base_weight != param.weight:
            logging.error('Base weight w_%d = %s, refinement gives %s', i, char.base_weight, param.weight)
            raise DeformationError('base weight w_%d = %s does not match %s' % (i, char.base_weight, param.weight))


def _report_for(refinement: Refinement, family: FirstOrderFamily,
                report: Optional[LInvariantReport]) -> LInvariantReport:
    if family.n != refinement.n:
        logging.error('Family of length %d for a refinement of dimension %d', family.n, refinement.n)
        raise DeformationError('family has %d characters, refinement has dimension %d' % (family.n, refinement.n))
    return report if report is not None else l_invariant_report(refinement)


def check_deformation(refinement: Refinement, family: FirstOrderFamily,
                      report: Optional[LInvariantReport] = None) -> DeformationReport:
    """
    Evaluate the constraint of every strongly critical index on ``family``.

    Pass/Fail is exact. Indices whose verdict is NotDetected are reported as
    Unchecked; indices that are not strongly critical carry no constraint.

    Raises
    ------
    DeformationError
        On a length mismatch, a strongly critical index without L, or base
        values that disagree with the refinement's parameters.
    """
    report = _report_for(refinement, family, report)
    if any(c.has_base for c in family.characters):
        _check_base_point(refinement, family)
    out = DeformationReport()
    for entry in report.entries:
        if entry.verdict is Verdict.NOT_DETECTED:
            out.checks.append(ConstraintCheck(entry.s, entry.t, None, None, ConstraintStatus.UNCHECKED))
            continue
        if entry.verdict is not Verdict.STRONGLY_CRITICAL:
            continue
        if entry.l_value is None:
            raise DeformationError('strongly critical index %d has no L-invariant' % entry.s)
        value = residual(entry.l_value, entry.s, entry.t, family)
        status = ConstraintStatus.PASS if value == 0 else ConstraintStatus.FAIL
        out.checks.append(ConstraintCheck(entry.s, entry.t, entry.l_value, value, status))
    logging.info('deformation check: %d constraint(s), %d failing, %d unchecked',
                 len(out.checks), len(out.failures), len(out.unchecked))
    return out


@dataclass(frozen=True)
class ConstraintRow:
    s: int
    t: int
    coefficients: Tuple[Fraction, ...]


@dataclass(frozen=True)
class ConstraintSystem:
    """Rows over (eps_1(p), ..., eps_n(p), eps_{1,2}, ..., eps_{n,2})."""

    n: int
    rows: Tuple[ConstraintRow, ...]

    def matrix(self) -> Matrix:
        return Matrix.from_rows([r.coefficients for r in self.rows], ncols=2 * self.n)

    def apply(self, family: FirstOrderFamily) -> List[Fraction]:
        vector = family.as_vector()
        return [dot(r.coefficients, vector) for r in self.rows]

    def satisfied_by(self, family: FirstOrderFamily) -> bool:
        return all(v == 0 for v in self.apply(family))

    def rank(self) -> int:
        return self.matrix().rank()

    def kernel_dimension(self) -> int:
        return 2 * self.n - self.rank()

    def kernel_basis(self) -> List[FirstOrderFamily]:
        return [FirstOrderFamily.from_vector(v) for v in self.matrix().kernel()]


def constraint_system(refinement: Refinement, report: Optional[LInvariantReport] = None) -> ConstraintSystem:
    """One row per strongly critical s: +1 at eps_t(p), -1 at eps_s(p), +-L at eps_{t,2}, eps_{s,2}."""
    n = refinement.n
    report = report if report is not None else l_invariant_report(refinement)
    rows = []
    for entry in report.strongly_critical():
        if entry.l_value is None:
            raise DeformationError('strongly critical index %d has no L-invariant' % entry.s)
        coefficients = [Fraction(0)] * (2 * n)
        coefficients[entry.t - 1] += 1
        coefficients[entry.s - 1] -= 1
        coefficients[n + entry.t - 1] += entry.l_value
        coefficients[n + entry.s - 1] -= entry.l_value
        rows.append(ConstraintRow(entry.s, entry.t, tuple(coefficients)))
    logging.debug('constraint system with %d row(s) over %d variables', len(rows), 2 * n)
    return ConstraintSystem(n, tuple(rows))
