"""
Unit tests for named graph families and the spec syntax.
"""
import unittest

from core.errors import ParameterError
from core.families import (
    FamilySpec,
    dandelion,
    family_name,
    fruit,
    make_family,
    parse_family,
    spider,
    theta0,
)
from core.graph import complement


class TestFamilies(unittest.TestCase):

    def test_spider(self):
        """Spider(2,2,2) has 7 vertices and a degree-3 center."""
        g = spider(2, 2, 2)
        self.assertEqual(g.n, 7)
        self.assertEqual(g.num_edges, 6)
        self.assertEqual(g.degree(1), 3)

    def test_dandelion(self):
        """Dand_{3,8} is Spider(5,1,1)."""
        g = dandelion(3, 8)
        self.assertEqual(g.n, 8)
        self.assertEqual(g.degree(1), 3)
        self.assertEqual(sorted(g.degrees()).count(1), 3)

    def test_fruit(self):
        """The fruit graph is an (n-1)-cycle with a pendant at vertex 1."""
        g = fruit(7)
        self.assertEqual(g.num_edges, 7)
        self.assertEqual(g.degree(1), 3)
        self.assertEqual(g.degree(7), 1)

    def test_theta0(self):
        """theta0 has two degree-3 hubs and 8 edges."""
        g = theta0()
        self.assertEqual(g.num_edges, 8)
        self.assertEqual((g.degree(1), g.degree(2)), (3, 3))

    def test_bounds(self):
        """Out-of-range parameters name the violated bound."""
        with self.assertRaises(ParameterError):
            make_family(FamilySpec("cycle", (2,)))
        with self.assertRaises(ParameterError):
            make_family(FamilySpec("dand", (5, 4)))


class TestSpecSyntax(unittest.TestCase):

    def test_parse_complement(self):
        """co(...) wraps the inner spec."""
        spec = parse_family("co(fruit:7)")
        self.assertEqual(spec, FamilySpec("co", (), FamilySpec("fruit", (7,))))
        self.assertEqual(make_family(spec), complement(fruit(7)))

    def test_name_round_trip(self):
        """family_name renders what parse_family reads."""
        for text in ("star:7", "spider:3,2,2", "dand:3,8", "theta0", "co(cycle:8)"):
            self.assertEqual(family_name(parse_family(text)), text)

    def test_parse_errors(self):
        """Unknown kinds and misplaced parameters are rejected."""
        for text in ("bogus:3", "theta0:3", "cycle", "cycle:2", "spider:"):
            with self.assertRaises(ParameterError):
                parse_family(text)


if __name__ == '__main__':
    unittest.main()
