import unittest
from fractions import Fraction

from hypothesis import given, settings

from src.exceptions import InvalidDecomposition, NotCritical, NotStable, NotStronglyCritical, RepeatedEigenvalues
from src.linalg.scalar import add_vectors, combine, scale_vector
from src.linalg.subspace import Flag, canonicalize, zero_subspace
from src.modules.constructions import dual_module
from src.oracle.brute_force import oracle_l_invariant
from src.oracle.random_instances import planted_jump_line, random_refinement
from src.refine.decomposition import (classify_decomposition, critical_perfect_basis, perfect_basis,
                                      quotient_coordinates, s_decomposition)
from src.refine.duality import (dual_graded_matrix, dual_index_pair, dual_perfect_basis, dual_refinement,
                                dual_s_perfect_basis)
from src.refine.l_invariant import Verdict, check_s_perfect, l_invariant_report, s_perfect_basis, strong_criticality
from src.refine.monodromy import GradedTarget, critical_partner, graded_monodromy
from src.refine.refinement import enumerate_refinements, make_refinement
from tests.fixtures import CONFIG, d_ell, fixture_a, fixture_a_modified, fixture_c, refinement_of, rng_for, seeds


def perturbed_flag(rng, refinement) -> Flag:
    """v_i -> a_i v_i + sum_{k<i} r_k v_k: same flag, other vectors."""
    vectors = []
    for i in range(1, refinement.n + 1):
        scale = rng.choice([1, -1, 2, Fraction(1, 3), -3])
        lower = combine([rng.randint(-3, 3) for _ in range(i - 1)],
                        [refinement.vector(k) for k in range(1, i)], refinement.n)
        vectors.append(add_vectors(scale_vector(scale, refinement.vector(i)), lower))
    return Flag.from_vectors(vectors)


def induced_decomposition(refinement, s, basis):
    """The s-decomposition read off the classes of an s-perfect basis."""
    t = critical_partner(refinement, s)
    middle = canonicalize([quotient_coordinates(refinement, s, t, basis[i - 1]) for i in range(s + 1, t)], t - s + 1)
    return classify_decomposition(refinement, s, quotient_coordinates(refinement, s, t, basis[t - 1]), middle)


class TestReferenceRefinements(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.d = refinement_of(d_ell())
        cls.a = refinement_of(fixture_a())
        cls.a_modified = refinement_of(fixture_a_modified())
        cls.c = refinement_of(fixture_c())

    def test_orderings(self):
        self.assertEqual(self.d.alphas, (Fraction(1, 2), Fraction(1)))
        self.assertEqual(self.d.ks, (-1, 0))
        self.assertEqual(self.a.alphas, (Fraction(1, 2), Fraction(1), Fraction(1)))
        self.assertEqual(self.a.ks, (-1, 0, 0))
        self.assertEqual(self.c.alphas, (1, 2, 4))
        self.assertEqual(self.c.ks, (0, 1, 2))

    def test_modified_fixture_a_weights(self):
        """Moving f1 into Fil^0 swaps the first two weights along the flag."""
        self.assertEqual(self.a_modified.ks, (0, -1, 0))

    def test_graded_monodromy(self):
        graded = graded_monodromy(self.a)
        self.assertEqual(graded.as_dict(), {1: None, 2: GradedTarget(1, Fraction(1)), 3: None})
        self.assertEqual(graded.critical_pairs(), [(1, 2)])
        self.assertEqual(graded.chains(), [(2, 1), (3,)])
        self.assertTrue(graded.is_injective())

        graded_c = graded_monodromy(self.c)
        self.assertEqual(graded_c.as_dict(), {1: None, 2: GradedTarget(1, Fraction(1)),
                                              3: GradedTarget(2, Fraction(1))})
        self.assertEqual(graded_c.chains(), [(3, 2, 1)])

    def test_critical_partner(self):
        self.assertEqual(critical_partner(self.c, 2), 3)
        with self.assertRaises(NotCritical):
            critical_partner(self.d, 2)

    def test_l_invariants(self):
        self.assertEqual(l_invariant_report(self.d).l_values(), {1: 3})
        self.assertEqual(l_invariant_report(self.a).l_values(), {1: 5})
        self.assertEqual(l_invariant_report(self.c).l_values(), {1: 7, 2: -2})

    def test_not_strongly_critical(self):
        entry = strong_criticality(self.a_modified, 1)
        self.assertIs(entry.verdict, Verdict.NOT_STRONGLY_CRITICAL)
        self.assertIsNone(entry.l_value)
        with self.assertRaises(NotStronglyCritical):
            s_perfect_basis(self.a_modified, 1)

    def test_s_perfect_bases(self):
        for refinement, indices in ((self.d, [1]), (self.a, [1]), (self.c, [1, 2])):
            for s in indices:
                with self.subTest(n=refinement.n, s=s):
                    self.assertEqual(check_s_perfect(refinement, s, s_perfect_basis(refinement, s)), [])

    def test_dual_s_perfect_bases(self):
        """(e*_n, ..., -e*_s, ..., e*_1) is (n+1-t)-perfect for the dual refinement."""
        for refinement, indices in ((self.d, [1]), (self.a, [1]), (self.c, [1, 2])):
            dual = dual_refinement(refinement)
            for s in indices:
                t = critical_partner(refinement, s)
                basis = dual_s_perfect_basis(s_perfect_basis(refinement, s), s)
                with self.subTest(n=refinement.n, s=s):
                    self.assertEqual(check_s_perfect(dual, refinement.n + 1 - t, basis), [])

    def test_classify_decomposition(self):
        for refinement, indices in ((self.d, [1]), (self.a, [1]), (self.c, [1, 2])):
            for s in indices:
                decomposition = s_decomposition(refinement, s)
                with self.subTest(n=refinement.n, s=s):
                    self.assertTrue(decomposition.perfect)
                    self.assertEqual(classify_decomposition(refinement, s, decomposition.e_bar_t,
                                                            decomposition.middle), decomposition)

    def test_invalid_decomposition(self):
        """e_t must leave the penultimate step of the induced flag."""
        with self.assertRaises(InvalidDecomposition):
            classify_decomposition(self.d, 1, [1, 0], zero_subspace(2))
        with self.assertRaises(InvalidDecomposition):
            classify_decomposition(self.d, 1, [0, 1, 0], zero_subspace(3))

    def test_dual_perfect_basis(self):
        self.assertEqual(dual_perfect_basis([[1, 0], [1, 1]]), [(0, 1), (1, -1)])
        self.assertEqual(dual_s_perfect_basis([[1, 0], [1, 1]], 1), [(0, 1), (-1, 1)])

    def test_dual_l_invariants(self):
        dual = dual_refinement(self.c)
        self.assertEqual(dual.ks, (-2, -1, 0))
        self.assertEqual(dual.alphas, (Fraction(1, 4), Fraction(1, 2), 1))
        self.assertEqual(l_invariant_report(dual).l_values(), {1: -2, 2: 7})
        self.assertEqual(graded_monodromy(dual_refinement(self.a)).critical_pairs(), [(2, 3)])


class TestRefinementConstruction(unittest.TestCase):

    def test_unstable_flag(self):
        workspace = d_ell()
        with self.assertRaises(NotStable) as raised:
            make_refinement(workspace.module, Flag.from_vectors([[0, 1], [1, 0]]))
        self.assertEqual(raised.exception.index, 1)

    def test_enumeration(self):
        self.assertEqual(enumerate_refinements(d_ell().module), [Flag.from_vectors([[1, 0], [0, 1]])])
        self.assertEqual(len(enumerate_refinements(fixture_c().module)), 1)
        with self.assertRaises(RepeatedEigenvalues):
            enumerate_refinements(fixture_a().module)

    def test_perfect_basis(self):
        refinement = refinement_of(fixture_a())
        basis = perfect_basis(refinement)
        for r in range(1, 4):
            self.assertEqual(canonicalize(basis[:r], 3), refinement.step(r))
        basis = critical_perfect_basis(refinement, 1)
        self.assertEqual(refinement.base.monodromy.apply(basis[1]), basis[0])


class TestRandomRefinements(unittest.TestCase):

    @settings(max_examples=200, deadline=None)
    @given(seeds)
    def test_graded_monodromy_is_well_defined(self, seed):
        """N_F only depends on the flag: rescaled targets after changing the flag vectors."""
        rng = rng_for(seed)
        refinement = random_refinement(rng, CONFIG)
        scales = []
        moved = make_refinement(refinement.base, perturbed_flag(rng, refinement))
        for i in range(1, refinement.n + 1):
            coordinates = refinement.coordinates(moved.vector(i))
            scales.append(coordinates[i - 1])
        self.assertEqual(moved.alphas, refinement.alphas)
        self.assertEqual(moved.ks, refinement.ks)
        before, after = graded_monodromy(refinement), graded_monodromy(moved)
        for i in range(1, refinement.n + 1):
            old, new = before.target(i), after.target(i)
            if old is None:
                self.assertIsNone(new)
                continue
            self.assertEqual(new.j, old.j)
            self.assertEqual(new.coefficient, old.coefficient * scales[i - 1] / scales[old.j - 1])

    @settings(max_examples=200, deadline=None)
    @given(seeds)
    def test_l_invariant_is_well_defined(self, seed):
        """Every perfect s-decomposition gives the same L, also after changing the flag vectors."""
        rng = rng_for(seed)
        refinement = random_refinement(rng, CONFIG)
        report = l_invariant_report(refinement)
        moved = l_invariant_report(make_refinement(refinement.base, perturbed_flag(rng, refinement)))
        for s, value in moved.l_values().items():
            if s in report.l_values():
                self.assertEqual(value, report.l_values()[s])
        for entry in report.strongly_critical():
            for _ in range(3):
                dec = s_decomposition(refinement, entry.s, rng)
                if dec.perfect:
                    self.assertEqual(dec.l_dec, entry.l_value)
                    self.assertEqual(dec.l_dec_prime, entry.l_value)

    @settings(max_examples=200, deadline=None)
    @given(seeds)
    def test_l_invariant_on_wide_pieces(self, seed):
        """With t >= s + 2 the random s-decompositions move the middle or e_t but not L."""
        rng = rng_for(seed)
        planted = planted_jump_line(rng, CONFIG)
        refinement, s = planted.refinement, planted.s
        self.assertGreaterEqual(planted.t, s + 2)
        self.assertIn(refinement.n, range(3, 6))

        entry = l_invariant_report(refinement).entry(s)
        self.assertIs(entry.verdict, Verdict.STRONGLY_CRITICAL)
        self.assertEqual(entry.t, planted.t)
        self.assertEqual(entry.l_value, planted.l_value)
        canonical = entry.decomposition

        draws = [s_decomposition(refinement, s, rng) for _ in range(8)]
        for dec in draws:
            self.assertTrue(dec.perfect)
            self.assertEqual(dec.l_dec, planted.l_value)
            self.assertEqual(dec.l_dec_prime, planted.l_value)
        self.assertTrue(any((dec.e_bar_t, dec.middle) != (canonical.e_bar_t, canonical.middle) for dec in draws))

        moved = make_refinement(refinement.base, perturbed_flag(rng, refinement))
        self.assertEqual(l_invariant_report(moved).l_values(), {s: planted.l_value})

    @settings(max_examples=200, deadline=None)
    @given(seeds)
    def test_duality(self, seed):
        refinement = random_refinement(rng_for(seed), CONFIG)
        n = refinement.n
        dual = dual_refinement(refinement)
        self.assertEqual(dual.alphas, tuple(1 / a for a in reversed(refinement.alphas)))
        self.assertEqual(dual.ks, tuple(-k for k in reversed(refinement.ks)))
        graded, dual_graded = graded_monodromy(refinement), graded_monodromy(dual)
        self.assertEqual(dual_graded.critical_pairs(),
                         sorted(dual_index_pair(n, s, t) for s, t in graded.critical_pairs()))
        self.assertEqual(dual_graded.matrix(), dual_graded_matrix(graded.matrix()))

        report, dual_report = l_invariant_report(refinement), l_invariant_report(dual)
        self.assertEqual(len(dual_report.entries), len(report.entries))
        for entry in report.entries:
            s_dual, t_dual = dual_index_pair(n, entry.s, entry.t)
            mirrored = dual_report.entry(s_dual)
            self.assertEqual(mirrored.t, t_dual)
            if entry.t == entry.s + 1:
                self.assertIs(mirrored.verdict, entry.verdict)
            for source, target, s_source, s_target, found in ((refinement, dual, entry.s, s_dual, entry),
                                                             (dual, refinement, s_dual, entry.s, mirrored)):
                if found.verdict is not Verdict.STRONGLY_CRITICAL:
                    continue
                transported = induced_decomposition(
                    target, s_target, dual_s_perfect_basis(s_perfect_basis(source, s_source), s_source))
                self.assertTrue(transported.perfect)
                self.assertEqual(transported.l_dec, found.l_value)
                self.assertEqual(strong_criticality(target, s_target, transported).l_value, found.l_value)
                self.assertEqual(oracle_l_invariant(target, s_target, transported), found.l_value)
            if Verdict.NOT_DETECTED not in (entry.verdict, mirrored.verdict):
                self.assertIs(mirrored.verdict, entry.verdict)
                self.assertEqual(mirrored.l_value, entry.l_value)

        twice = dual_refinement(dual)
        self.assertEqual(dual_module(dual.base), refinement.base)
        self.assertEqual(twice.flag.steps(), refinement.flag.steps())

    @settings(max_examples=200, deadline=None)
    @given(seeds)
    def test_duality_on_wide_pieces(self, seed):
        """The dual of a planted jump line is strongly critical at n + 1 - t with the same L."""
        planted = planted_jump_line(rng_for(seed), CONFIG)
        refinement, s, t = planted.refinement, planted.s, planted.t
        n = refinement.n
        dual = dual_refinement(refinement)
        s_dual, t_dual = dual_index_pair(n, s, t)

        mirrored = l_invariant_report(dual).entry(s_dual)
        self.assertIs(mirrored.verdict, Verdict.STRONGLY_CRITICAL)
        self.assertEqual(mirrored.t, t_dual)
        self.assertEqual(mirrored.l_value, planted.l_value)
        self.assertEqual(oracle_l_invariant(dual, s_dual, mirrored.decomposition), planted.l_value)
        basis = dual_s_perfect_basis(s_perfect_basis(refinement, s), s)
        self.assertEqual(check_s_perfect(dual, s_dual, basis), [])

    @settings(max_examples=100, deadline=None)
    @given(seeds)
    def test_s_perfect_basis(self, seed):
        refinement = random_refinement(rng_for(seed), CONFIG)
        for entry in l_invariant_report(refinement).strongly_critical():
            basis = s_perfect_basis(refinement, entry.s)
            self.assertEqual(check_s_perfect(refinement, entry.s, basis), [])
            self.assertEqual(refinement.base.monodromy.apply(basis[entry.t - 1]), basis[entry.s - 1])


if __name__ == '__main__':
    unittest.main()
