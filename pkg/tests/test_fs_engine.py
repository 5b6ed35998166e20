"""
Unit tests for the friends-and-strangers census engine.
"""
import os
import unittest
from itertools import combinations_with_replacement
from math import factorial

from core.errors import CapabilityError, ParameterError
from core.families import complete, cycle, empty, path, spider, star, theta0, fruit
from core.fs_engine import (
    EdgeLabel,
    bipartite_parity,
    census_labels,
    cyclic_leaf_order,
    fs_component_of,
    fs_components,
    fs_is_connected,
    fs_neighbors,
    iter_components,
    placement_reachable,
    star_components_predicted,
)
from core.graph import Graph, complement
from core.permutations import Permutation, identity, unrank
from core.small_graphs import enumerate_small_graphs

SLOW = os.environ.get("FS_SLOW_TESTS") == "1"


class TestEdgeLabel(unittest.TestCase):

    def test_normalized(self):
        """Labels are unordered pairs stored low first."""
        self.assertEqual(EdgeLabel.of(3, 1), EdgeLabel(1, 3))
        self.assertEqual(str(EdgeLabel.of(1, 2)), "12")
        self.assertEqual(str(EdgeLabel.of(12, 1)), "1-12")

    def test_same_person(self):
        """A label needs two people."""
        with self.assertRaises(ParameterError):
            EdgeLabel.of(2, 2)


class TestNeighbors(unittest.TestCase):

    def test_path_on_complete(self):
        """Each X-edge gives one friendly swap when Y is complete."""
        nbrs = fs_neighbors(path(3), complete(3), identity(3))
        self.assertEqual(nbrs, [(Permutation((2, 1, 3)), EdgeLabel(1, 2)),
                                (Permutation((1, 3, 2)), EdgeLabel(2, 3))])

    def test_no_friends(self):
        """An edgeless Y allows no swaps."""
        self.assertEqual(fs_neighbors(path(3), empty(3), identity(3)), [])


class TestCensus(unittest.TestCase):

    def test_star_vs_theta0(self):
        """FS(Star_7, theta0) has exactly 6 components of 840 vertices."""
        census = fs_components(star(7), theta0())
        self.assertEqual(census.count, 6)
        self.assertEqual(set(census.sizes), {840})

    def test_spider_vs_complement_fruit(self):
        """FS(Spider(2,2,2), complement of the fruit graph on 7) has 12 components."""
        self.assertEqual(fs_components(spider(2, 2, 2), complement(fruit(7))).count, 12)

    def test_tiny_connected(self):
        """FS(Path_3, K_3) is connected."""
        self.assertTrue(fs_is_connected(path(3), complete(3)))

    def test_representatives_are_minimum_ranks(self):
        """Components are ordered by their minimum-rank representative, identity first."""
        census = fs_components(star(5), cycle(5))
        self.assertEqual(census.reps[0], identity(5))
        ranks = [r.rank() for r in census.reps]
        self.assertEqual(ranks, sorted(ranks))
        self.assertEqual(sum(census.sizes), factorial(5))

    def test_swap_symmetry(self):
        """FS(X, Y) and FS(Y, X) have the same component sizes."""
        for x, y in ((path(5), cycle(5)), (star(5), path(5)), (spider(2, 1, 1), cycle(5))):
            self.assertSymmetric(x, y)

    def test_swap_symmetry_all_small_pairs(self):
        """Every pair of graphs on at most 5 vertices, up to isomorphism."""
        for n in range(2, 6):
            for x, y in combinations_with_replacement(enumerate_small_graphs(n), 2):
                self.assertSymmetric(x, y)

    @unittest.skipUnless(SLOW, "set FS_SLOW_TESTS=1 for the 6-vertex pairs")
    def test_swap_symmetry_six_vertices(self):
        """Every pair of 6-vertex graphs, up to isomorphism."""
        for x, y in combinations_with_replacement(enumerate_small_graphs(6), 2):
            self.assertSymmetric(x, y)

    def assertSymmetric(self, x, y):
        a, b = fs_components(x, y), fs_components(y, x)
        self.assertEqual(a.count, b.count, (x.edges(), y.edges()))
        self.assertEqual(sorted(a.sizes), sorted(b.sizes), (x.edges(), y.edges()))

    def test_isolated_person_is_frozen(self):
        """A person with no friends never moves, giving at least n components."""
        y = Graph(4, [(1, 2), (2, 3)])
        self.assertGreaterEqual(fs_components(path(4), y).count, 4)

    def test_budget(self):
        """11! exceeds the default budget of 10!."""
        with self.assertRaises(CapabilityError):
            fs_components(path(11), complete(11))

    def test_size_mismatch(self):
        """X and Y must have the same number of vertices."""
        with self.assertRaises(ParameterError):
            fs_components(path(3), complete(4))

    def test_labels_cover_every_rank(self):
        """census_labels assigns every rank a component index."""
        labels = census_labels(star(4), cycle(4))
        self.assertEqual(len(labels), 24)
        self.assertEqual(set(labels.tolist()), {0, 1})


class TestStarPrediction(unittest.TestCase):

    def test_kinds(self):
        """Wilson's classification on representative graphs."""
        self.assertEqual(star_components_predicted(theta0()).to_dict(),
                         {"kind": "ThetaSix", "count": 6, "size": 840})
        self.assertEqual(star_components_predicted(cycle(6)).to_dict(),
                         {"kind": "CyclicOrders", "count": 24, "size": 30})
        self.assertEqual(star_components_predicted(complete(5)).kind, "Connected")
        self.assertEqual(star_components_predicted(path(5)).kind, "NotBiconnected")

    def test_bipartite_halves(self):
        """K_{2,3} splits FS(Star_5, K_{2,3}) into two halves."""
        k23 = Graph(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
        predicted = star_components_predicted(k23)
        census = fs_components(star(5), k23)
        self.assertEqual((predicted.kind, predicted.count, predicted.size), ("TwoHalves", 2, 60))
        self.assertEqual((census.count, set(census.sizes)), (2, {60}))

    def test_cycle_prediction_matches_census(self):
        """(n-2)! components of size n(n-1) for Y = Cycle_5."""
        census = fs_components(star(5), cycle(5))
        self.assertEqual((census.count, set(census.sizes)), (6, {20}))


class TestInvariants(unittest.TestCase):

    def test_cyclic_leaf_order_identity(self):
        """The identity reads chairs 2..n in order."""
        self.assertEqual(cyclic_leaf_order(identity(5)), (2, 3, 4, 5))

    def test_cyclic_leaf_order_separates_components(self):
        """Two permutations share a component of FS(Star_5, Cycle_5) iff their orders match."""
        labels = census_labels(star(5), cycle(5))
        classes = {}
        for r, lab in enumerate(labels):
            classes.setdefault(cyclic_leaf_order(unrank(r, 5)), set()).add(int(lab))
        self.assertEqual(len(classes), 6)
        self.assertTrue(all(len(v) == 1 for v in classes.values()))

    def test_bipartite_parity_constant_on_components(self):
        """The parity bit never changes inside a component of FS(Path_4, Cycle_4)."""
        x, y = path(4), cycle(4)
        for c in iter_components(x, y):
            bits = {bipartite_parity(x, y, {1, 3}, {1, 3}, v) for v in c.vertices}
            self.assertEqual(len(bits), 1)

    def test_bipartite_parity_rejects_bad_side(self):
        """Sides must be bipartition sides."""
        with self.assertRaises(ParameterError):
            bipartite_parity(path(4), cycle(4), {1, 2}, {1, 3}, identity(4))


class TestExplicitComponents(unittest.TestCase):

    def test_six_cycle(self):
        """FS(Path_3, K_3) is a 6-cycle."""
        c = fs_component_of(path(3), complete(3), identity(3))
        self.assertEqual((c.size, c.num_edges), (6, 6))
        self.assertEqual(c.vertices[0], identity(3))
        self.assertTrue(all(i < j for i, j, _ in c.edges))

    def test_iter_components_partition(self):
        """Explicit components cover every permutation exactly once."""
        seen = set()
        for c in iter_components(star(4), cycle(4)):
            self.assertFalse(seen & set(c.vertices))
            seen |= set(c.vertices)
        self.assertEqual(len(seen), 24)

    def test_placement(self):
        """Placement search reaches any chair in a connected FS graph and nothing when frozen."""
        self.assertTrue(placement_reachable(star(4), complete(4), identity(4), 1, 3))
        self.assertFalse(placement_reachable(path(3), empty(3), identity(3), 1, 2))
        self.assertTrue(placement_reachable(path(3), empty(3), identity(3), 1, 1))


if __name__ == '__main__':
    unittest.main()
