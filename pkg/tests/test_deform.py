import dataclasses
import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from src.deform.colmez import colmez_translate
from src.deform.constraints import ConstraintStatus, check_deformation, constraint_system
from src.deform.family import FirstOrderCharacter, FirstOrderFamily, residual
from src.exceptions import DeformationError
from src.linalg.dual import DualNumber
from src.oracle.random_instances import planted_jump_line, random_refinement
from src.refine.l_invariant import LInvariantReport, Verdict, l_invariant_report
from tests.fixtures import CONFIG, d_ell, fixture_c, refinement_of, rng_for, seeds

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
indices = st.integers(min_value=1, max_value=3)


class TestFamilies(unittest.TestCase):

    def test_residual(self):
        family = d_ell().family('ok')
        self.assertEqual(residual(3, 1, 2, family), 0)
        self.assertEqual(residual(4, 1, 2, family), 1)
        with self.assertRaises(DeformationError):
            residual(3, 2, 1, family)

    def test_from_dual_numbers(self):
        """eps_p is the logarithmic derivative of delta(p)."""
        char = FirstOrderCharacter.from_dual_numbers(DualNumber(Fraction(1, 2), 3), DualNumber(1, 5))
        self.assertEqual(char.eps_p, 6)
        self.assertEqual(char.eps_w, 5)
        self.assertEqual(char.delta_p(), DualNumber(Fraction(1, 2), 3))

    def test_combine(self):
        family = FirstOrderFamily.from_eps([1, 2], [3, 4])
        other = FirstOrderFamily.from_eps([0, 1], [1, 0])
        self.assertEqual(family.combine(2, other, -1).as_vector(), (2, 3, 5, 8))

    @settings(max_examples=500, deadline=None)
    @given(st.lists(rationals, min_size=8, max_size=8), st.lists(rationals, min_size=8, max_size=8), rationals,
           rationals, rationals, indices, indices)
    def test_residual_is_linear(self, first, second, a, b, l_value, s, gap):
        t = min(s + gap, 4)
        one, other = FirstOrderFamily.from_vector(first), FirstOrderFamily.from_vector(second)
        self.assertEqual(residual(l_value, s, t, one.combine(a, other, b)),
                         a * residual(l_value, s, t, one) + b * residual(l_value, s, t, other))


class TestDeformationCheck(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.workspace = fixture_c()
        cls.refinement = refinement_of(cls.workspace)
        cls.report = l_invariant_report(cls.refinement)

    def test_tangent_family_passes(self):
        result = check_deformation(self.refinement, self.workspace.family('ok'), self.report)
        self.assertTrue(result.passed)
        self.assertEqual([c.status for c in result.checks], [ConstraintStatus.PASS, ConstraintStatus.PASS])

    def test_perturbed_family_fails(self):
        result = check_deformation(self.refinement, self.workspace.family('perturbed'), self.report)
        self.assertFalse(result.passed)
        self.assertEqual([(c.s, c.residual) for c in result.failures], [(2, 2)])

    def test_not_detected_is_unchecked(self):
        entries = [dataclasses.replace(e, verdict=Verdict.NOT_DETECTED, l_value=None) if e.s == 2 else e
                   for e in self.report.entries]
        result = check_deformation(self.refinement, self.workspace.family('perturbed'), LInvariantReport(entries))
        self.assertTrue(result.passed)
        self.assertEqual([c.s for c in result.unchecked], [2])

    def test_length_mismatch(self):
        with self.assertRaises(DeformationError):
            check_deformation(self.refinement, d_ell().family('ok'))

    def test_base_point(self):
        refinement = refinement_of(d_ell())
        matching = FirstOrderFamily((FirstOrderCharacter.of(0, 0, 1, 1), FirstOrderCharacter.of(-3, 1, 1, 0)))
        self.assertTrue(check_deformation(refinement, matching).passed)
        wrong = FirstOrderFamily((FirstOrderCharacter.of(0, 0, 2, 1), FirstOrderCharacter.of(-3, 1, 1, 0)))
        with self.assertRaises(DeformationError):
            check_deformation(refinement, wrong)

    @settings(max_examples=300, deadline=None)
    @given(seeds, st.booleans())
    def test_check_matches_constraint_rows(self, seed, tangent):
        """A family passes exactly when every row of the constraint system vanishes on it."""
        rng = rng_for(seed)
        refinement = planted_jump_line(rng, CONFIG).refinement if rng.random() < 0.5 else random_refinement(rng, CONFIG)
        report = l_invariant_report(refinement)
        system = constraint_system(refinement, report)
        if tangent:
            family = FirstOrderFamily.from_vector([0] * (2 * refinement.n))
            for direction in system.kernel_basis():
                family = family.combine(1, direction, Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
        else:
            family = FirstOrderFamily.from_vector([Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                                                   for _ in range(2 * refinement.n)])
        result = check_deformation(refinement, family, report)
        self.assertEqual(result.passed, system.satisfied_by(family))
        self.assertEqual([c.residual for c in result.checks if c.status is not ConstraintStatus.UNCHECKED],
                         system.apply(family))
        if tangent:
            self.assertTrue(result.passed)


class TestConstraintSystem(unittest.TestCase):

    def test_d_ell_row(self):
        system = constraint_system(refinement_of(d_ell()))
        self.assertEqual([r.coefficients for r in system.rows], [(-1, 1, -3, 3)])

    def test_fixture_c_system(self):
        system = constraint_system(refinement_of(fixture_c()))
        self.assertEqual([r.coefficients for r in system.rows], [(-1, 1, 0, -7, 7, 0), (0, -1, 1, 0, 2, -2)])
        self.assertEqual(system.rank(), 2)
        self.assertEqual(system.kernel_dimension(), 4)
        kernel = system.kernel_basis()
        self.assertEqual(len(kernel), 4)
        self.assertTrue(all(system.satisfied_by(f) for f in kernel))
        self.assertTrue(system.satisfied_by(fixture_c().family('ok')))
        self.assertEqual(system.apply(fixture_c().family('perturbed')), [0, 2])


class TestColmez(unittest.TestCase):

    def test_tangent_direction(self):
        translation = colmez_translate(1, 2, 4, 3)
        self.assertEqual(translation.expression, 1 - 3 + 2)
        self.assertEqual(translation.residual, 0)

    @settings(max_examples=500, deadline=None)
    @given(rationals, rationals, rationals, rationals)
    def test_expression_is_half_residual(self, d_alpha, d_kappa, d_delta, l_value):
        translation = colmez_translate(d_alpha, d_kappa, d_delta, l_value)
        self.assertEqual(translation.expression, -translation.residual / 2)
        self.assertEqual(translation.residual, residual(l_value, 1, 2, translation.family))


if __name__ == '__main__':
    unittest.main()
