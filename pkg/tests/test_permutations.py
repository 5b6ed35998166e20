"""
Unit tests for permutation ranking and arithmetic.
"""
import unittest

import numpy as np

from core.errors import ParameterError
from core.permutations import Permutation, identity, rank, rank_rows, sign, unrank, unrank_range


class TestRanking(unittest.TestCase):

    def test_identity_and_reverse(self):
        """The identity has rank 0 and the reversal rank n! - 1."""
        self.assertEqual(rank((1, 2, 3, 4, 5)), 0)
        self.assertEqual(rank((5, 4, 3, 2, 1)), 119)
        self.assertEqual(unrank(119, 5), Permutation((5, 4, 3, 2, 1)))

    def test_unrank_inverts_rank(self):
        """unrank(rank(p)) == p on all of S_4."""
        for r in range(24):
            self.assertEqual(unrank(r, 4).rank(), r)

    def test_vectorized_range(self):
        """Rows of unrank_range are 0-based and in lexicographic order."""
        rows = unrank_range(0, 6, 3)
        expected = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
        self.assertEqual(rows.tolist(), expected)
        np.testing.assert_array_equal(rank_rows(rows), np.arange(6))

    def test_rank_rows_matches_scalar(self):
        """Vectorized and scalar ranks agree on a middle range of S_6."""
        rows = unrank_range(100, 160, 6)
        self.assertEqual(rank_rows(rows).tolist(), [rank(tuple(r)) for r in rows])

    def test_out_of_range(self):
        """Ranks outside 0..n!-1 are rejected."""
        with self.assertRaises(ParameterError):
            unrank(6, 3)


class TestPermutationOps(unittest.TestCase):

    def test_sign(self):
        """Transpositions are odd, 3-cycles even."""
        self.assertEqual(sign((2, 1, 3)), -1)
        self.assertEqual(sign((2, 3, 1)), 1)
        self.assertEqual(identity(4).sign(), 1)

    def test_swap_and_inverse(self):
        """Swapping positions and composing with the inverse."""
        self.assertEqual(identity(3).swap_positions(1, 3), Permutation((3, 2, 1)))
        p = Permutation((2, 3, 1))
        self.assertEqual(p.compose(p.inverse()), identity(3))
        self.assertEqual(p.position_of(1), 3)

    def test_rejects_non_permutations(self):
        """Repeated images raise ParameterError."""
        with self.assertRaises(ParameterError):
            Permutation((1, 1, 2))


if __name__ == '__main__':
    unittest.main()
