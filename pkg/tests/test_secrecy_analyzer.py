"""
Tests for the exhaustive secrecy analyzer and its bounds.
"""

import itertools
import math
import os
import sys
import unittest
from fractions import Fraction

sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from listsource.errors import DimensionMismatch, EpsilonOutOfRange, TooLarge
from listsource.models.field import FieldSpec
from listsource.models.source import SourceModel, SubsetQuery, binary_entropy
from listsource.services.code_service import CodeService
from listsource.services.list_source_service import ListSourceService, PrefixEncoder
from listsource.services.secrecy_analyzer import SecrecyAnalyzer

LOG2_5 = math.log2(5)


class TestSecrecyAnalyzer(unittest.TestCase):
    """Test cases for SecrecyAnalyzer."""

    def setUp(self):
        self.analyzer = SecrecyAnalyzer()
        self.codes = CodeService()
        self.gf2 = FieldSpec.prime(2)
        self.gf5 = FieldSpec.prime(5)
        self.mds = self.codes.vandermonde_parity_check(self.gf5, 4, 2)
        self.parity = self.codes.vandermonde_parity_check(self.gf2, 2, 1)
        self.uniform5 = SourceModel.uniform(self.gf5)
        self.uniform2 = SourceModel.uniform(self.gf2)
        self.biased2 = SourceModel.from_probabilities(self.gf2, (0.1, 0.9))

    def test_mutual_information_parity(self):
        """Test I(X_0; X_0 + X_1) and I(X^2; X_0 + X_1) for a uniform bit."""
        self.assertAlmostEqual(
            self.analyzer.mutual_information_brute(self.parity, self.uniform2, SubsetQuery(2, (0,))),
            0.0, places=12)
        self.assertAlmostEqual(
            self.analyzer.mutual_information_brute(self.parity, self.uniform2, SubsetQuery(2, (0, 1))),
            1.0, places=12)

    def test_mutual_information_biased_oracle(self):
        """Test the biased-bit leak against closed-form binary entropies."""
        expected = binary_entropy(0.82) - binary_entropy(0.9)
        measured = self.analyzer.mutual_information_brute(self.parity, self.biased2, (0,))
        self.assertAlmostEqual(measured, expected, delta=1e-6)
        self.assertAlmostEqual(measured, 0.211081, delta=1e-6)

    def test_mutual_information_rejects_bad_query(self):
        """Test that unsorted or out-of-range subsets are rejected."""
        with self.assertRaises(DimensionMismatch):
            SubsetQuery(4, (2, 1))
        with self.assertRaises(DimensionMismatch):
            self.analyzer.mutual_information_brute(self.mds, self.uniform5, (4,))

    def test_information_within_data_processing_limits(self):
        """Test 0 <= I(X_J; Y) <= min(H(X_J), H(Y)) for every subset."""
        source = SourceModel.from_probabilities(self.gf5, [0.4, 0.3, 0.1, 0.1, 0.1])
        code = self.codes.random_parity_check(self.gf5, 4, 2, seed=9)
        output_entropy = self.analyzer.output_entropy(code, source)
        for t in range(1, 5):
            for subset in itertools.combinations(range(4), t):
                value = self.analyzer.mutual_information_brute(code, source, subset)
                self.assertGreaterEqual(value, 0.0)
                self.assertLessEqual(value, min(t * source.entropy_bits, output_entropy) + 1e-9)

    def test_enumeration_cap(self):
        """Test that q**n above the cap is refused."""
        analyzer = SecrecyAnalyzer(enumeration_cap=100)
        with self.assertRaises(TooLarge):
            analyzer.mutual_information_brute(self.mds, self.uniform5, (0,))

    def test_leak_profile_trivial(self):
        """Test that the prefix leaks fully and the suffix not at all."""
        encoder = PrefixEncoder(self.gf5, 4, Fraction(1, 2))
        profile = self.analyzer.symbol_leak_profile(encoder, self.uniform5)
        for value, expected in zip(profile, (LOG2_5, LOG2_5, 0.0, 0.0)):
            self.assertAlmostEqual(value, expected, delta=1e-12)

    def test_leak_profile_mds(self):
        """Test that no single symbol of an MDS code leaks."""
        for value in self.analyzer.symbol_leak_profile(self.mds, self.uniform5):
            self.assertAlmostEqual(value, 0.0, delta=1e-12)

    def test_leak_profile_k_zero(self):
        """Test that a full-rank H reveals every symbol."""
        code = self.codes.vandermonde_parity_check(self.gf5, 4, 0)
        for value in self.analyzer.symbol_leak_profile(code, self.uniform5):
            self.assertAlmostEqual(value, LOG2_5, delta=1e-12)

    def test_mu_zero_mds(self):
        """Test absolute symbol secrecy 1/2 and its tightness for GF(5), n=4, k=2."""
        self.assertEqual(self.analyzer.mu_epsilon(self.mds, self.uniform5, 0), Fraction(1, 2))
        for pair in itertools.combinations(range(4), 2):
            self.assertAlmostEqual(
                self.analyzer.mutual_information_brute(self.mds, self.uniform5, pair), 0.0, delta=1e-12)
        leaks = [self.analyzer.mutual_information_brute(self.mds, self.uniform5, triple)
                 for triple in itertools.combinations(range(4), 3)]
        self.assertTrue(any(value > 1e-6 for value in leaks))

    def test_mu_zero_equals_list_exponent_for_mds(self):
        """Test mu_0 = k/n for every small Vandermonde code with a uniform source."""
        for q in (2, 3, 5, 7):
            field = FieldSpec.prime(q)
            source = SourceModel.uniform(field)
            for n in range(2, min(q, 4) + 1):
                for k in range(1, n):
                    code = self.codes.vandermonde_parity_check(field, n, k)
                    self.assertEqual(self.analyzer.mu_epsilon(code, source, 0), Fraction(k, n),
                                     f"q={q} n={n} k={k}")
                    leaks = [self.analyzer.mutual_information_brute(code, source, subset)
                             for subset in itertools.combinations(range(n), k + 1)]
                    self.assertTrue(any(value > 1e-6 for value in leaks))

    def test_mu_zero_trivial(self):
        """Test that the prefix scheme has no absolute symbol secrecy."""
        for list_exponent in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            encoder = PrefixEncoder(self.gf5, 4, list_exponent)
            self.assertEqual(self.analyzer.mu_epsilon(encoder, self.uniform5, 0), 0)

    def test_mu_epsilon_out_of_range(self):
        """Test that epsilon must stay below H(X)."""
        with self.assertRaises(EpsilonOutOfRange):
            self.analyzer.mu_epsilon(self.mds, self.uniform5, self.uniform5.entropy_bits)
        with self.assertRaises(EpsilonOutOfRange):
            self.analyzer.mu_epsilon(self.mds, self.uniform5, -0.1)

    def test_mu_epsilon_monotone(self):
        """Test that mu_epsilon does not decrease as epsilon grows."""
        code = self.codes.random_parity_check(self.gf2, 5, 2, seed=4)
        source = self.biased2
        previous = Fraction(0)
        for step in range(10):
            epsilon = source.entropy_bits * step / 10
            mu = self.analyzer.mu_epsilon(code, source, epsilon)
            self.assertGreaterEqual(mu, previous)
            previous = mu

    def test_conditional_entropy_uniform(self):
        """Test H(X^n | Y) = k log2 q for a uniform source."""
        self.assertAlmostEqual(self.analyzer.conditional_entropy(self.mds, self.uniform5),
                               2 * LOG2_5, delta=1e-9)
        self.assertAlmostEqual(self.analyzer.output_entropy(self.mds, self.uniform5) / 4,
                               (1 - 0.5) * LOG2_5, delta=1e-9)

    def test_report_mds(self):
        """Test the full report for the GF(5) MDS code."""
        report = self.analyzer.secrecy_bounds_report(self.mds, self.uniform5, 0)
        self.assertEqual(report.mu_epsilon, Fraction(1, 2))
        self.assertEqual(report.mu_zero, Fraction(1, 2))
        self.assertAlmostEqual(report.symbol_secrecy_bound, 0.5, delta=1e-12)
        self.assertAlmostEqual(report.leak_bound, 1.160964, delta=1e-6)
        self.assertAlmostEqual(report.measured_total_leak, report.leak_bound, delta=1e-9)
        self.assertTrue(report.rate_matches_bound)
        self.assertTrue(report.bounds_hold)

    def test_report_nothing_sent(self):
        """Test k = n: nothing is transmitted and nothing leaks."""
        code = self.codes.vandermonde_parity_check(self.gf5, 4, 4)
        report = self.analyzer.secrecy_bounds_report(code, self.uniform5, 0)
        self.assertEqual(report.mu_zero, 1)
        self.assertAlmostEqual(report.measured_total_leak, 0.0, delta=1e-12)

    def test_report_non_mds_binary(self):
        """Test that a non-MDS code falls strictly short of the bound."""
        code = self.codes.from_parity_check(self.gf2, [[1, 0, 1, 0], [0, 1, 0, 1]])
        report = self.analyzer.secrecy_bounds_report(code, self.uniform2, 0)
        self.assertEqual(report.mu_zero, Fraction(1, 4))
        self.assertLess(float(report.mu_zero), report.symbol_secrecy_bound)
        self.assertFalse(report.rate_matches_bound)
        self.assertTrue(report.bounds_hold)

    def test_report_lines(self):
        """Test the stable key = value report format."""
        lines = self.analyzer.secrecy_bounds_report(self.mds, self.uniform5, 0).to_lines()
        keys = [line.split(' = ')[0] for line in lines]
        for key in ('epsilon', 'mu_epsilon', 'mu_zero', 'prop3_bound', 'prop4_rhs',
                    'measured_total_leak', 'per_symbol_leak', 'prop5_rate_match'):
            self.assertIn(key, keys)
        values = dict(line.split(' = ', 1) for line in lines)
        self.assertEqual(values['mu_zero'], '0.5')
        self.assertEqual(len(values['per_symbol_leak'].split(',')), 4)
        self.assertEqual(values['prop5_rate_match'], 'true')

    def test_leak_bound_allows_full_epsilon(self):
        """Test that the leak bound accepts epsilon = H(X)."""
        self.assertEqual(SecrecyAnalyzer.leak_bound(LOG2_5, Fraction(1, 2), LOG2_5), LOG2_5)
        with self.assertRaises(EpsilonOutOfRange):
            SecrecyAnalyzer.leak_bound(LOG2_5, Fraction(1, 2), LOG2_5 + 1)

    def test_long_binary_codes_within_cap(self):
        """Test n = 16 binary codes, where joint labels would span about 2**32 values."""
        source = self.uniform2
        revealing = self.codes.random_parity_check(self.gf2, 16, 0, seed=21)
        self.assertEqual(self.analyzer.mu_epsilon(revealing, source, 0), 0)
        self.assertAlmostEqual(
            self.analyzer.mutual_information_brute(revealing, source, range(16)), 16.0, delta=1e-9)

        # Neighbour sums: the only nonzero codeword is all-ones.
        rows = [[1 if j in (i, i + 1) else 0 for j in range(16)] for i in range(15)]
        single = self.codes.from_parity_check(self.gf2, rows)
        self.assertEqual(single.k, 1)
        report = self.analyzer.secrecy_bounds_report(single, source, 0)
        self.assertEqual(report.mu_zero, Fraction(1, 16))
        self.assertAlmostEqual(report.measured_total_leak, 15 / 16, delta=1e-9)
        self.assertTrue(report.bounds_hold)

    def test_rate_list_tightness_uniform(self):
        """Test H(Y)/n = (1 - L) log2 q for uniform sources."""
        for q, n, k in ((2, 2, 1), (3, 3, 1), (5, 4, 1), (5, 4, 3), (7, 3, 2)):
            field = FieldSpec.prime(q)
            code = self.codes.vandermonde_parity_check(field, n, k)
            measured = self.analyzer.output_entropy(code, SourceModel.uniform(field)) / n
            bound = ListSourceService.rate_list_lower_bound(math.log2(q), Fraction(k, n), q)
            self.assertAlmostEqual(measured, bound, delta=1e-9)


class TestBoundSweep(unittest.TestCase):
    """Bound checks over seed-pinned random codes."""

    def test_random_codes_respect_bounds(self):
        """Test the symbol secrecy and total leak bounds on random codes."""
        from listsource.services.sweep_runner import SweepRunner

        reports = SweepRunner().run(count=50, seed=2024)
        self.assertEqual(len(reports), 200)
        for report in reports:
            self.assertLessEqual(float(report.mu_epsilon), report.symbol_secrecy_bound + 1e-12)
            self.assertLessEqual(report.measured_total_leak, report.leak_bound + 1e-9)
        self.assertTrue(any(r.source_id == 'biased-0.1' for r in reports))


if __name__ == '__main__':
    unittest.main()
