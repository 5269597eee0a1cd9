import dataclasses
import unittest
from collections import Counter
from fractions import Fraction
from itertools import combinations

from hypothesis import given, settings

from src.exceptions import InvalidModule, NotStable, PrimeMismatch, RepeatedEigenvalues
from src.linalg.matrix import Matrix
from src.linalg.subspace import coordinate_subspace, full_space, span, zero_subspace
from src.modules.admissibility import AdmissibilityVerdict, is_admissible, stable_subspaces
from src.modules.constructions import dual_module, induced_sub_quotient, tensor
from src.modules.eigen import eigenbasis, has_distinct_eigenvalues, rational_eigenvalues
from src.modules.filtration import Filtration
from src.modules.phin_module import (FilteredPhiNModule, hodge_data, newton_data, require_valid, unit_module,
                                     validate_module)
from src.oracle.random_instances import RandomInstanceConfig, random_distinct_module, random_refinement
from src.refine.refinement import enumerate_refinements
from tests.fixtures import SMALL_CONFIG, d_ell, fixture_a, fixture_a_modified, fixture_c, rng_for, seeds

TINY_CONFIG = RandomInstanceConfig(max_dimension=3)


def _bumped(matrix: Matrix, i: int, j: int, delta) -> Matrix:
    rows = [list(row) for row in matrix.rows]
    rows[i][j] += delta
    return Matrix.from_rows(rows, ncols=matrix.ncols)


def _breaking_entries(module, kind):
    """Entries (i, j) where adding to phi (or N) must break N phi = p phi N."""
    n, phi, monodromy = module.n, module.phi, module.monodromy
    entries = []
    for i in range(n):
        for j in range(n):
            if kind == 'phi':
                # N E_ij = p E_ij N only when column i and row j of N vanish
                harmless = (all(monodromy[k, i] == 0 for k in range(n))
                            and all(monodromy[j, k] == 0 for k in range(n)))
            else:
                harmless = (all(phi[j, k] == 0 for k in range(n) if k != j)
                            and all(phi[k, i] == 0 for k in range(n) if k != i)
                            and phi[j, j] == module.p * phi[i, i])
            if not harmless:
                entries.append((i, j))
    return entries


def corrupt(rng, module):
    """Change one entry of phi or N, or one filtration step; returns the module and its violation."""
    n = module.n
    delta = rng.choice([1, -1, 2, Fraction(1, 2)])
    kind = rng.choice(['phi', 'monodromy', 'filtration'])
    entries = _breaking_entries(module, kind) if kind != 'filtration' else []
    if entries:
        i, j = rng.choice(entries)
        changed = {kind: _bumped(getattr(module, kind), i, j, delta)}
        return dataclasses.replace(module, **changed), 'NΦ ≠ pΦN'
    steps = list(module.filtration.steps)
    k = rng.randrange(len(steps))
    if k:
        steps[k] = (steps[k][0], steps[k - 1][1])
        violation = 'Fil^%d is not strictly contained in Fil^%d' % (steps[k][0], steps[k - 1][0])
    else:
        functional = [0] * n
        while not any(functional):
            functional = [rng.randint(-3, 3) for _ in range(n)]
        steps[0] = (steps[0][0], span([functional], n).annihilator())
        violation = 'Fil^%d is not the whole space (not exhaustive)' % steps[0][0]
    return dataclasses.replace(module, filtration=Filtration(n, tuple(steps))), violation


class TestFiltration(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.module = fixture_c().module

    def test_interpolation(self):
        """Fil^i is the first listed jump >= i and zero past the last jump."""
        filtration = self.module.filtration
        self.assertEqual(filtration.at(-5), full_space(3))
        self.assertEqual(filtration.at(0), full_space(3))
        self.assertEqual(filtration.at(2).dim, 1)
        self.assertEqual(filtration.at(3), zero_subspace(3))

    def test_weights(self):
        self.assertEqual(self.module.filtration.weights(), [0, 1, 2])
        self.assertEqual(self.module.filtration.hodge_number(), 3)

    def test_normalized_drops_repeated_steps(self):
        candidates = [(0, full_space(2)), (1, coordinate_subspace(2, [0])), (2, coordinate_subspace(2, [0]))]
        filtration = Filtration.normalized(2, candidates)
        self.assertEqual(filtration.jumps, (0, 2))
        self.assertEqual(filtration.weights(), [0, 2])

    def test_violations(self):
        not_exhaustive = Filtration.from_steps(2, [(0, coordinate_subspace(2, [0]))])
        self.assertTrue(any('exhaustive' in v for v in not_exhaustive.violations()))
        not_strict = Filtration.from_steps(2, [(0, full_space(2)), (1, full_space(2))])
        self.assertTrue(not_strict.violations())


class TestModuleValidation(unittest.TestCase):

    def test_fixtures_are_valid(self):
        for workspace in (d_ell(), fixture_a(), fixture_a_modified(), fixture_c()):
            self.assertTrue(validate_module(workspace.module).valid)

    def test_commutation_violation(self):
        """N phi = p phi N fails when N links equal eigenvalues."""
        module = FilteredPhiNModule.build(2, [[1, 0], [0, 1]], [[0, 1], [0, 0]], [(0, [[1, 0], [0, 1]])])
        report = validate_module(module)
        self.assertFalse(report.valid)
        self.assertIn('NΦ ≠ pΦN', report.violations)
        with self.assertRaises(InvalidModule):
            require_valid(module)

    def test_singular_phi_and_composite_p(self):
        module = FilteredPhiNModule.build(4, [[0, 0], [0, 1]], [[0, 0], [0, 0]], [(0, [[1, 0], [0, 1]])])
        violations = validate_module(module).violations
        self.assertIn('p = 4 is not prime', violations)
        self.assertIn('det(phi) = 0', violations)

    @settings(max_examples=300, deadline=None)
    @given(seeds)
    def test_single_corruptions_are_rejected(self, seed):
        """One wrong entry of phi or N, or one wrong filtration step, is reported."""
        rng = rng_for(seed)
        if rng.random() < 0.3:
            module = rng.choice([d_ell, fixture_a, fixture_c])().module
        else:
            module = random_refinement(rng, SMALL_CONFIG).base
        self.assertTrue(validate_module(module).valid)
        corrupted, violation = corrupt(rng, module)
        report = validate_module(corrupted)
        self.assertFalse(report.valid)
        self.assertIn(violation, report.violations)
        with self.assertRaises(InvalidModule):
            require_valid(corrupted)

    def test_hodge_and_newton(self):
        module = d_ell().module
        self.assertEqual(hodge_data(module).weights, (-1, 0))
        self.assertEqual(hodge_data(module).t_h, -1)
        self.assertEqual(newton_data(module).slopes, (-1, 0))
        self.assertEqual(newton_data(module).t_n, -1)


class TestEigen(unittest.TestCase):

    def test_rational_eigenvalues(self):
        module = fixture_a().module
        self.assertEqual(rational_eigenvalues(module.phi), {Fraction(1, 2): 1, Fraction(1): 2})
        self.assertFalse(has_distinct_eigenvalues(module.phi))
        self.assertEqual(len(eigenbasis(module.phi)), 3)


class TestConstructions(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.d = d_ell().module

    def test_dual_module(self):
        """Phi* = Phi^{-T}, N* = -N^T and the Hodge weights are negated."""
        dual = dual_module(self.d)
        self.assertEqual(dual.phi, self.d.phi.inverse().transpose())
        self.assertEqual(dual.monodromy, -self.d.monodromy.transpose())
        self.assertEqual(dual.filtration.weights(), [0, 1])
        self.assertTrue(validate_module(dual).valid)
        self.assertEqual(dual_module(dual), self.d)

    def test_tensor_square(self):
        square = tensor(self.d, self.d)
        self.assertEqual(square.n, 4)
        self.assertTrue(validate_module(square).valid)
        self.assertEqual(Counter(square.filtration.weights()), Counter({-2: 1, -1: 2, 0: 1}))
        self.assertEqual(newton_data(square).t_n, -4)
        self.assertEqual(hodge_data(square).t_h, -4)

    def test_tensor_prime_mismatch(self):
        with self.assertRaises(PrimeMismatch):
            tensor(self.d, unit_module(3))

    def test_tensor_with_unit(self):
        product = tensor(self.d, unit_module(2))
        self.assertEqual(product.filtration.weights(), self.d.filtration.weights())

    def test_sub_quotient(self):
        sub, quotient = induced_sub_quotient(self.d, span([[1, 0]], 2))
        self.assertEqual(sub.filtration.weights(), [-1])
        self.assertEqual(quotient.filtration.weights(), [0])
        self.assertEqual(sub.phi[0, 0], Fraction(1, 2))
        with self.assertRaises(NotStable):
            induced_sub_quotient(self.d, span([[0, 1]], 2))

    @settings(max_examples=100, deadline=None)
    @given(seeds)
    def test_dual_and_tensor_invariants(self, seed):
        """t(D*) = -t(D) and t(D1 ⊗ D2) = n2 t(D1) + n1 t(D2) for t_H and t_N."""
        rng = rng_for(seed)
        first = random_refinement(rng, TINY_CONFIG).base
        second = random_refinement(rng, TINY_CONFIG).base
        if second.p != first.p:
            second = dual_module(first)
        dual = dual_module(first)
        self.assertEqual(hodge_data(dual).t_h, -hodge_data(first).t_h)
        self.assertEqual(newton_data(dual).t_n, -newton_data(first).t_n)
        product = tensor(first, second)
        n1, n2 = first.n, second.n
        self.assertEqual(hodge_data(product).t_h, n2 * hodge_data(first).t_h + n1 * hodge_data(second).t_h)
        self.assertEqual(newton_data(product).t_n, n2 * newton_data(first).t_n + n1 * newton_data(second).t_n)

    def test_sub_quotient_weights_partition(self):
        """The weights of W and D/W together are the weights of D for every stable W."""
        for name, workspace in (('d_ell', d_ell()), ('fixture_a', fixture_a()),
                                ('fixture_a_modified', fixture_a_modified()), ('fixture_c', fixture_c())):
            module = workspace.module
            if has_distinct_eigenvalues(module.phi):
                spaces = stable_subspaces(module)
            else:
                spaces = [step for flag in workspace.refinements.values() for step in flag.steps()]
            for space in spaces:
                sub, quotient = induced_sub_quotient(module, space)
                with self.subTest(fixture=name, space=space.basis):
                    self.assertEqual((sub.n, quotient.n), (space.dim, module.n - space.dim))
                    self.assertEqual(sub.filtration.weight_multiset() + quotient.filtration.weight_multiset(),
                                     module.filtration.weight_multiset())

    def test_fixture_a_second_step(self):
        workspace = fixture_a()
        sub, quotient = induced_sub_quotient(workspace.module, workspace.refinement('F').step(2))
        self.assertEqual(sub.filtration.weights(), [-1, 0])
        self.assertEqual(quotient.filtration.weights(), [0])


class TestAdmissibility(unittest.TestCase):

    def test_stable_subspaces_of_d_ell(self):
        module = d_ell().module
        spaces = stable_subspaces(module)
        self.assertEqual(spaces, [zero_subspace(2), span([[1, 0]], 2), full_space(2)])

    def test_d_ell_admissible(self):
        report = is_admissible(d_ell().module)
        self.assertIs(report.verdict, AdmissibilityVerdict.ADMISSIBLE)
        self.assertTrue(report.certifying)
        self.assertEqual((report.t_h, report.t_n), (-1, -1))

    def test_fixture_c_admissible(self):
        module = fixture_c().module
        self.assertEqual(len(stable_subspaces(module)), 4)
        report = is_admissible(module)
        self.assertIs(report.verdict, AdmissibilityVerdict.ADMISSIBLE)
        self.assertEqual(report.t_h, 3)

    def test_repeated_eigenvalues_check_candidates(self):
        """Fixture A has a repeated eigenvalue: only the flag steps are examined."""
        workspace = fixture_a()
        with self.assertRaises(RepeatedEigenvalues):
            stable_subspaces(workspace.module)
        report = is_admissible(workspace.module, flags=list(workspace.refinements.values()))
        self.assertIs(report.verdict, AdmissibilityVerdict.CHECKED_ON_CANDIDATES)
        self.assertFalse(report.certifying)
        self.assertEqual(len(report.checks), 2)

    def test_failure_is_certified(self):
        """In modified Fixture A the line E f1 sits in Fil^0 but has slope -1."""
        workspace = fixture_a_modified()
        report = is_admissible(workspace.module, flags=list(workspace.refinements.values()))
        self.assertIs(report.verdict, AdmissibilityVerdict.NOT_ADMISSIBLE)
        self.assertTrue(report.certifying)
        self.assertEqual(report.failures[0].space, span([[1, 0, 0]], 3))

    def test_global_equality_required(self):
        module = FilteredPhiNModule.build(2, [[1]], [[0]], [(1, [[1]])])
        report = is_admissible(module)
        self.assertIs(report.verdict, AdmissibilityVerdict.NOT_ADMISSIBLE)

    def test_diagonal_phi_without_monodromy(self):
        """N = 0 and phi = diag(1, 2, 4): every coordinate subspace is stable and every ordering refines."""
        module = FilteredPhiNModule.build(2, [[1, 0, 0], [0, 2, 0], [0, 0, 4]], [[0] * 3] * 3,
                                          [(0, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])])
        spaces = stable_subspaces(module)
        self.assertEqual(len(spaces), 8)
        self.assertEqual(set(spaces), {coordinate_subspace(3, subset) for size in range(4)
                                       for subset in combinations(range(3), size)})
        flags = enumerate_refinements(module)
        self.assertEqual(len(flags), 6)
        self.assertEqual(len({tuple(flag.steps()) for flag in flags}), 6)

    @settings(max_examples=50, deadline=None)
    @given(seeds)
    def test_dual_preserves_admissibility(self, seed):
        """D is admissible iff D* is."""
        module = random_distinct_module(rng_for(seed), SMALL_CONFIG)
        self.assertIs(is_admissible(module).verdict, is_admissible(dual_module(module)).verdict)


if __name__ == '__main__':
    unittest.main()
