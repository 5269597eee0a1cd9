import unittest
from fractions import Fraction

from hypothesis import given, settings

from src.exceptions import NonIntegerWeight, WeightsNotStrict, WrongMonodromyRank
from src.linalg.matrix import Matrix
from src.modules.phin_module import FilteredPhiNModule
from src.oracle.random_instances import planted_max_monodromy, random_refinement
from src.triparam.max_monodromy import max_monodromy_refinement, monodromy_chain
from src.triparam.parameters import Character, parameters_to_invariants, refinement_to_parameters
from tests.fixtures import CONFIG, d_ell, fixture_a, fixture_c, refinement_of, rng_for, seeds


class TestParameters(unittest.TestCase):

    def test_reference_parameters(self):
        """delta_i(p) = alpha_i p^{-k_i} and w_i = -k_i."""
        chars = refinement_to_parameters(refinement_of(d_ell()))
        self.assertEqual(chars, [Character.of(1, 1), Character.of(1, 0)])
        chars = refinement_to_parameters(refinement_of(fixture_c()))
        self.assertEqual([c.value_at_p for c in chars], [1, 1, 1])
        self.assertEqual([c.weight for c in chars], [0, -1, -2])

    def test_non_integer_weight(self):
        with self.assertRaises(NonIntegerWeight):
            parameters_to_invariants([Character.of(1, '1/2')], 2)

    @settings(max_examples=1000, deadline=None)
    @given(seeds)
    def test_round_trip(self, seed):
        refinement = random_refinement(rng_for(seed), CONFIG)
        alphas, ks = parameters_to_invariants(refinement_to_parameters(refinement), refinement.p)
        self.assertEqual(tuple(alphas), refinement.alphas)
        self.assertEqual(tuple(ks), refinement.ks)


class TestMaxMonodromy(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.result = max_monodromy_refinement(fixture_c().module)

    def test_canonical_flag(self):
        self.assertEqual(self.result.flag.steps(), refinement_of(fixture_c()).flag.steps())
        self.assertEqual(self.result.refinement.ks, (0, 1, 2))

    def test_hodge_transform(self):
        ell = Matrix.from_rows([[1, 7, 4], [0, 1, -2], [0, 0, 1]])
        self.assertEqual(self.result.transform.ell, ell)
        self.assertEqual(self.result.transform.entry(1, 3), 4)
        self.assertEqual(self.result.l_values, (Fraction(7), Fraction(-2)))

    def test_chain(self):
        module = fixture_c().module
        chain = monodromy_chain(module)
        self.assertEqual(module.monodromy.apply(chain[2]), chain[1])
        self.assertEqual(module.monodromy.apply(chain[0]), (0, 0, 0))

    def test_wrong_rank(self):
        with self.assertRaises(WrongMonodromyRank):
            max_monodromy_refinement(fixture_a().module)

    def test_weights_not_strict(self):
        module = FilteredPhiNModule.build(2, [[1, 0], [0, 2]], [[0, 1], [0, 0]], [(0, [[1, 0], [0, 1]])])
        with self.assertRaises(WeightsNotStrict):
            max_monodromy_refinement(module)

    @settings(max_examples=200, deadline=None)
    @given(seeds)
    def test_planted_transform_is_recovered(self, seed):
        planted = planted_max_monodromy(rng_for(seed), CONFIG)
        result = max_monodromy_refinement(planted.module)
        self.assertEqual(result.refinement.ks, planted.ks)
        self.assertEqual(result.transform.ell, planted.ell)
        self.assertEqual(list(result.l_values), planted.superdiagonal())


if __name__ == '__main__':
    unittest.main()
