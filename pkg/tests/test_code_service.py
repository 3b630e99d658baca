"""
Tests for code construction and the MDS check.
"""

import os
import sys
import unittest
from fractions import Fraction

sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from listsource.errors import DimensionMismatch, DuplicatePoints, RankDeficient, TooLong, TooManySubsets
from listsource.models.code import CodeSpec
from listsource.models.field import FieldSpec
from listsource.models.matrix import MatrixGF
from listsource.services.code_service import CodeService


class TestCodeService(unittest.TestCase):
    """Test cases for CodeService."""

    def setUp(self):
        self.service = CodeService()
        self.gf2 = FieldSpec.prime(2)
        self.gf5 = FieldSpec.prime(5)

    def test_vandermonde_gf5(self):
        """Test the default-point Vandermonde parity check."""
        code = self.service.vandermonde_parity_check(self.gf5, 4, 2)
        self.assertEqual(code.h.to_rows(), [[1, 1, 1, 1], [0, 1, 2, 3]])
        self.assertEqual(code.list_exponent, Fraction(1, 2))
        self.assertEqual(code.list_size, 25)
        self.assertEqual(code.min_distance, 3)

    def test_vandermonde_gf2(self):
        """Test the single all-ones row over GF(2)."""
        code = self.service.vandermonde_parity_check(self.gf2, 2, 1)
        self.assertEqual(code.h.to_rows(), [[1, 1]])

    def test_vandermonde_too_long(self):
        """Test that n > q is rejected."""
        with self.assertRaises(TooLong):
            self.service.vandermonde_parity_check(self.gf5, 6, 2)

    def test_vandermonde_duplicate_points(self):
        """Test that repeated evaluation points are rejected."""
        with self.assertRaises(DuplicatePoints):
            self.service.vandermonde_parity_check(self.gf5, 3, 1, points=[1, 2, 1])

    def test_vandermonde_custom_points(self):
        """Test explicit evaluation points."""
        code = self.service.vandermonde_parity_check(self.gf5, 3, 1, points=[1, 2, 4])
        self.assertEqual(code.h.to_rows(), [[1, 1, 1], [1, 2, 4]])

    def test_vandermonde_extremes(self):
        """Test k = 0 and k = n."""
        full = self.service.vandermonde_parity_check(self.gf5, 4, 0)
        self.assertEqual(full.h.rows, 4)
        empty = self.service.vandermonde_parity_check(self.gf5, 4, 4)
        self.assertEqual((empty.h.rows, empty.h.cols), (0, 4))
        self.assertEqual(empty.list_size, 625)

    def test_code_spec_validation(self):
        """Test CodeSpec shape and rank checks."""
        h = MatrixGF.from_rows(self.gf5, [[1, 1, 1], [2, 2, 2]])
        with self.assertRaises(RankDeficient):
            CodeSpec.from_parity_check(h)
        with self.assertRaises(DimensionMismatch):
            CodeSpec(self.gf5, 3, 2, h)

    def test_is_mds_examples(self):
        """Test the MDS check on known codes."""
        self.assertTrue(self.service.is_mds(self.service.vandermonde_parity_check(self.gf5, 4, 2)))
        self.assertTrue(self.service.is_mds(self.service.from_parity_check(self.gf2, [[1, 1]])))
        self.assertFalse(self.service.is_mds(
            self.service.from_parity_check(self.gf2, [[1, 0, 1, 0], [0, 1, 0, 1]])))

    def test_vandermonde_always_mds(self):
        """Test every Vandermonde code with distinct points for prime q <= 11."""
        for q in (2, 3, 5, 7, 11):
            field = FieldSpec.prime(q)
            for n in range(2, q + 1):
                for k in range(1, n):
                    code = self.service.vandermonde_parity_check(field, n, k)
                    self.assertTrue(self.service.is_mds(code), f"q={q} n={n} k={k}")

    def test_is_mds_invariant_under_column_operations(self):
        """Test that permuting and scaling columns preserves the MDS property."""
        code = self.service.vandermonde_parity_check(self.gf5, 5, 2)
        rows = code.h.to_rows()
        order = [3, 0, 4, 1, 2]
        scales = [1, 2, 3, 4, 2]
        transformed = [[self.gf5.mul(scales[j], row[order[j]]) for j in range(5)] for row in rows]
        self.assertTrue(self.service.is_mds(self.service.from_parity_check(self.gf5, transformed)))
        bad = self.service.from_parity_check(self.gf2, [[1, 0, 1, 0], [0, 1, 0, 1]])
        permuted = [[row[j] for j in (2, 3, 0, 1)] for row in bad.h.to_rows()]
        self.assertFalse(self.service.is_mds(self.service.from_parity_check(self.gf2, permuted)))

    def test_is_mds_subset_cap(self):
        """Test that the subset cap is enforced."""
        service = CodeService(mds_subset_cap=5)
        code = service.vandermonde_parity_check(self.gf5, 4, 2)
        with self.assertRaises(TooManySubsets):
            service.is_mds(code)

    def test_minimum_distance(self):
        """Test the exhaustive minimum distance."""
        repeated = self.service.from_parity_check(self.gf2, [[1, 0, 1, 0], [0, 1, 0, 1]])
        self.assertEqual(self.service.minimum_distance(repeated), 2)
        self.assertEqual(self.service.minimum_distance(
            self.service.vandermonde_parity_check(self.gf5, 4, 2)), 3)

    def test_random_parity_check_is_seeded(self):
        """Test that random codes are full rank and reproducible."""
        first = self.service.random_parity_check(self.gf2, 6, 3, seed=42)
        second = self.service.random_parity_check(self.gf2, 6, 3, seed=42)
        self.assertEqual(first, second)
        self.assertEqual(first.h.rank, 3)
        self.assertEqual(first.code_id, second.code_id)

    def test_code_id_depends_on_field(self):
        """Test that equal matrices over different fields get different ids."""
        a = self.service.from_parity_check(FieldSpec.prime(5), [[1, 1]])
        b = self.service.from_parity_check(FieldSpec.prime(7), [[1, 1]])
        self.assertNotEqual(a.code_id, b.code_id)


if __name__ == '__main__':
    unittest.main()
