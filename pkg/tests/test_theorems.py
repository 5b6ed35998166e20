"""
Unit tests for the executable connectivity theorems.
"""
import unittest

from core.errors import ParameterError
from core.families import complete, cycle, fruit, spider, star
from core.graph import Graph, complement
from core.theorems import (
    TheoremVerdict,
    cycles_complement_base_case,
    dandelion_characterization,
    fruit_base_case,
    hereditary_extension_check,
    min_degree_sufficient,
    necessary_spider_condition,
    spider_vs_complement_cycle,
    spider_vs_complement_fruit,
    sufficient_spider_condition,
    wilsonian_existence,
)


class TestVerdict(unittest.TestCase):

    def test_consistency_rules(self):
        """Equivalences need equality; implications only constrain a true predicate."""
        self.assertFalse(TheoremVerdict(True, False, kind="equivalence").consistent)
        self.assertTrue(TheoremVerdict(False, True, kind="sufficient").consistent)
        self.assertFalse(TheoremVerdict(True, False, kind="sufficient").consistent)
        self.assertFalse(TheoremVerdict(True, True, kind="necessary").consistent)
        self.assertTrue(TheoremVerdict(True, None, kind="necessary").consistent)


class TestClosedForms(unittest.TestCase):

    def test_complement_cycle(self):
        """Exceptions, the (a,1,1) family and path legs are disconnected."""
        self.assertFalse(spider_vs_complement_cycle((2, 2, 1)))
        self.assertTrue(spider_vs_complement_cycle((6, 2, 1)))
        self.assertFalse(spider_vs_complement_cycle((7, 1, 1)))
        self.assertFalse(spider_vs_complement_cycle((1, 1, 1, 1)))
        self.assertTrue(spider_vs_complement_cycle((2, 1, 1, 1)))
        self.assertTrue(spider_vs_complement_cycle((1, 2, 3, 2)))
        self.assertFalse(spider_vs_complement_cycle((3, 2)))

    def test_complement_cycle_small_n(self):
        """n = Σλ + 1 must be at least 4."""
        with self.assertRaises(ParameterError):
            spider_vs_complement_cycle((1, 1))

    def test_complement_fruit(self):
        """The three disconnected forms."""
        self.assertFalse(spider_vs_complement_fruit((2, 2, 2)))
        self.assertTrue(spider_vs_complement_fruit((2, 2, 1, 1)))
        self.assertFalse(spider_vs_complement_fruit((3, 2, 1)))
        self.assertFalse(spider_vs_complement_fruit((4, 1, 1, 1)))
        self.assertTrue(spider_vs_complement_fruit((3, 2, 2)))
        self.assertTrue(spider_vs_complement_fruit((1, 1, 1, 1, 1)))
        with self.assertRaises(ParameterError):
            spider_vs_complement_fruit((2, 2))

    def test_base_cases(self):
        """Connected predictions are witnessed by a dominated base spider."""
        self.assertEqual(cycles_complement_base_case((7, 2, 1)), (6, 2, 1))
        self.assertEqual(cycles_complement_base_case((2, 2, 1, 1)), (2, 1, 1, 1))
        self.assertEqual(cycles_complement_base_case((3, 3, 3)), (3, 2, 2))
        self.assertIsNone(cycles_complement_base_case((1, 1, 1, 1)))
        self.assertEqual(fruit_base_case((3, 3, 2)), (3, 2, 2))
        self.assertIsNone(fruit_base_case((2, 2, 2)))

    def test_every_connected_prediction_has_a_base(self):
        """Closed-form connectivity and base-case witnesses agree for n <= 12."""
        from core.utils import partitions
        for n in range(4, 13):
            for legs in partitions(n - 1):
                if spider_vs_complement_cycle(legs):
                    self.assertIsNotNone(cycles_complement_base_case(legs), legs)
                if len(legs) >= 3 and spider_vs_complement_fruit(legs):
                    self.assertIsNotNone(fruit_base_case(legs), legs)


class TestSpiderConditions(unittest.TestCase):

    def test_sufficient_on_complete(self):
        """Any 4-subset of K_5 is a witness for Star_5."""
        verdict = sufficient_spider_condition(star(5), complete(5), oracle=True)
        self.assertTrue(verdict.predicate_result)
        self.assertEqual(verdict.witness, (1, 2, 3, 4))
        self.assertTrue(verdict.oracle_result)
        self.assertTrue(verdict.consistent)

    def test_sufficient_needs_connected_inputs(self):
        """Disconnected Y violates the hypotheses."""
        with self.assertRaises(ParameterError):
            sufficient_spider_condition(star(4), Graph(4, [(1, 2)]))

    def test_wilsonian(self):
        """K_7 has a Star_4 witness; cycles fail the subset hypothesis."""
        verdict = wilsonian_existence(complete(7), 4)
        self.assertEqual(verdict.witness, (1, 2, 3, 4))
        with self.assertRaises(ParameterError):
            wilsonian_existence(cycle(7), 3)
        with self.assertRaises(ParameterError):
            wilsonian_existence(complete(7), 2)

    def test_wilsonian_triangle_witness(self):
        """For k = 3 a triangle is a witness: FS(Star_3, K_3) is one 6-cycle."""
        self.assertEqual(wilsonian_existence(complete(5), 3).witness, (1, 2, 3))
        y = Graph(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)])
        verdict = wilsonian_existence(y, 3)
        self.assertTrue(verdict.predicate_result)
        self.assertEqual(verdict.witness, (1, 3, 5))

    def test_sufficient_at_k3(self):
        """A spider with a degree-3 center is covered by any triangle of K_5."""
        verdict = sufficient_spider_condition(spider(2, 1, 1), complete(5), oracle=True)
        self.assertTrue(verdict.predicate_result)
        self.assertEqual(verdict.witness, (1, 2, 3))
        self.assertTrue(verdict.oracle_result)
        self.assertTrue(verdict.consistent)

    def test_wilsonian_complement_cycle(self):
        """n = 9 >= 2k - 1 for k = 4 forces a witness."""
        self.assertTrue(wilsonian_existence(complement(cycle(9)), 4).predicate_result)

    def test_necessary_certificate(self):
        """A star inside the fruit graph disconnects its complement on 4 vertices."""
        verdict = necessary_spider_condition((3, 1, 1, 1), complement(fruit(7)), oracle=True)
        self.assertTrue(verdict.predicate_result)
        self.assertEqual(len(verdict.witness), 4)
        self.assertFalse(verdict.oracle_result)

    def test_necessary_on_complete(self):
        """Complete graphs have no disconnected induced subgraph."""
        verdict = necessary_spider_condition((4, 1, 1), complete(7))
        self.assertFalse(verdict.predicate_result)
        self.assertIsNone(verdict.witness)

    def test_necessary_size_mismatch(self):
        """Spider(2,1) has 4 vertices."""
        with self.assertRaises(ParameterError):
            necessary_spider_condition((2, 1), complete(5))


class TestDandelion(unittest.TestCase):

    def test_k2_means_complete(self):
        """Dand_{2,n} is a path, connected only against K_n."""
        verdict = dandelion_characterization(2, 5, complete(5), oracle=True)
        self.assertTrue(verdict.predicate_result)
        self.assertTrue(verdict.oracle_result)

    def test_cycle(self):
        """Cycle_5 has a disconnected 3-subset and the census agrees."""
        verdict = dandelion_characterization(3, 5, cycle(5), oracle=True)
        self.assertFalse(verdict.predicate_result)
        self.assertFalse(verdict.oracle_result)

    def test_bound(self):
        """n < 2k - 1 is outside the characterization."""
        with self.assertRaises(ParameterError):
            dandelion_characterization(3, 4, complete(4))


class TestMinDegree(unittest.TestCase):

    def test_star7(self):
        """Star_7 against the complement of Cycle_7."""
        verdict = min_degree_sufficient(star(7), complement(cycle(7)))
        self.assertTrue(verdict.predicate_result)
        self.assertEqual(verdict.witness[0], (1, 1, 1, 1, 1, 1))

    def test_cycle_has_no_center(self):
        """Cycles contain none of the listed spiders."""
        self.assertFalse(min_degree_sufficient(cycle(9), complete(9)).predicate_result)

    def test_oracle_agrees(self):
        """The census confirms a firing predicate."""
        verdict = min_degree_sufficient(spider(2, 2, 1, 1), complement(cycle(7)), oracle=True)
        self.assertTrue(verdict.predicate_result)
        self.assertTrue(verdict.oracle_result)


class TestHereditary(unittest.TestCase):

    def test_growth_keeps_connectivity(self):
        """Spider(2,1,1,1) grown at its center stays connected against the cycle family."""
        verdict = hereditary_extension_check(spider(2, 1, 1, 1), 1, "CoCycle")
        self.assertTrue(verdict.predicate_result)
        self.assertTrue(verdict.oracle_result)
        self.assertEqual(verdict.witness["disconnected"], [])

    def test_failing_base(self):
        """Spider(2,2,2) is disconnected against the complement of Cycle_7."""
        with self.assertRaises(ParameterError):
            hereditary_extension_check(spider(2, 2, 2), 1, "CoCycle")

    def test_unknown_family(self):
        """Only the three hereditary families are supported."""
        with self.assertRaises(ParameterError):
            hereditary_extension_check(spider(2, 1, 1, 1), 1, "CoStar")


if __name__ == '__main__':
    unittest.main()
