"""
Exhaustive symbol-secrecy analysis on desk-scale instances.

Every sequence of F_q^n is enumerated once; mutual informations between
subsets of source symbols and the encoder output are computed exactly from
the i.i.d. product measure.
"""

import itertools
import logging
import math
from fractions import Fraction

import numpy as np

from listsource.config import DEFAULT_CAP
from listsource.errors import EpsilonOutOfRange, TooLarge
from listsource.models.code import CodeSpec
from listsource.models.report import LEAK_TOLERANCE, SecrecyReport
from listsource.models.source import SubsetQuery
from listsource.services.list_source_service import ListSourceService, SyndromeEncoder

logger = logging.getLogger(__name__)

RATE_TOLERANCE = 1e-9


def _entropy_of_weights(weights):
    p = weights[weights > 0]
    return math.fsum((-p * np.log2(p)).tolist())


def _dense_labels(labels):
    """Relabel to 0..m-1 so bincount lengths stay within the number of sequences."""
    _, inverse = np.unique(labels, return_inverse=True)
    return inverse.reshape(-1).astype(np.int64)


def _as_encoder(target):
    if isinstance(target, CodeSpec):
        return SyndromeEncoder(target)
    return target


class _Enumeration:
    """All q**n sequences with their probabilities and encoder output labels."""

    def __init__(self, encoder, source):
        q = encoder.field.order
        n = encoder.n
        total = q ** n
        index = np.arange(total, dtype=np.int64)
        xs = np.empty((total, n), dtype=np.int64)
        for j in range(n):
            xs[:, j] = (index // q ** (n - 1 - j)) % q
        pmf = source.as_array()
        probabilities = np.ones(total, dtype=np.float64)
        for j in range(n):
            probabilities *= pmf[xs[:, j]]
        labels = encoder.encode_batch(xs)
        outputs = _dense_labels(labels)
        self.q = q
        self.n = n
        self.xs = xs
        self.probabilities = probabilities
        self.outputs = outputs
        self.output_count = int(self.outputs.max()) + 1 if total else 0
        self.output_entropy = _entropy_of_weights(
            np.bincount(self.outputs, weights=probabilities, minlength=self.output_count))
        self.sequence_entropy = _entropy_of_weights(probabilities)

    def mutual_information(self, indices):
        """I(X^(J); Y) = H(X^(J)) + H(Y) - H(X^(J), Y)."""
        if not indices:
            return 0.0
        projection = np.zeros(self.xs.shape[0], dtype=np.int64)
        for j in indices:
            projection = projection * self.q + self.xs[:, j]
        projection = _dense_labels(projection)
        projected_entropy = _entropy_of_weights(
            np.bincount(projection, weights=self.probabilities))
        joint = _dense_labels(projection * self.output_count + self.outputs)
        joint_entropy = _entropy_of_weights(np.bincount(joint, weights=self.probabilities))
        value = projected_entropy + self.output_entropy - joint_entropy
        return max(0.0, value)


class SecrecyAnalyzer:
    """Service computing exact leaks, symbol secrecy and the bounds they obey."""

    def __init__(self, enumeration_cap=DEFAULT_CAP):
        self.enumeration_cap = enumeration_cap

    def _enumerate(self, encoder, source):
        size = encoder.field.order ** encoder.n
        if size > self.enumeration_cap:
            raise TooLarge(f"{size} sequences exceed the enumeration cap of {self.enumeration_cap}")
        logger.debug("enumerating %d sequences for %s", size, encoder.code_id)
        return _Enumeration(encoder, source)

    def mutual_information_brute(self, target, source, query):
        """Exact I(X^(J); Y) in bits for a CodeSpec or encoder."""
        encoder = _as_encoder(target)
        if not isinstance(query, SubsetQuery):
            query = SubsetQuery(encoder.n, tuple(query))
        return self._enumerate(encoder, source).mutual_information(query.indices)

    def symbol_leak_profile(self, target, source):
        """I(X_i; Y) for every position i."""
        encoder = _as_encoder(target)
        table = self._enumerate(encoder, source)
        return [table.mutual_information((i,)) for i in range(encoder.n)]

    def conditional_entropy(self, target, source):
        """H(X^n | Y): the uncertainty left over the decoded list."""
        table = self._enumerate(_as_encoder(target), source)
        return max(0.0, table.sequence_entropy - table.output_entropy)

    def output_entropy(self, target, source):
        """H(Y) in bits."""
        return self._enumerate(_as_encoder(target), source).output_entropy

    @staticmethod
    def _check_epsilon(source, epsilon):
        if not 0 <= epsilon < source.entropy_bits:
            raise EpsilonOutOfRange(
                f"epsilon {epsilon} outside [0, H(X) = {source.entropy_bits})")

    @staticmethod
    def _scan(table, epsilon):
        # The all-subsets condition is not assumed monotone in t.
        n = table.n
        for t in range(n, 0, -1):
            if all(table.mutual_information(subset) / t <= epsilon + LEAK_TOLERANCE
                   for subset in itertools.combinations(range(n), t)):
                return Fraction(t, n)
        return Fraction(0)

    def mu_epsilon(self, target, source, epsilon):
        """Largest t/n with (1/t) I(X^(J); Y) <= epsilon for every |J| = t."""
        self._check_epsilon(source, epsilon)
        table = self._enumerate(_as_encoder(target), source)
        return self._scan(table, epsilon)

    @staticmethod
    def symbol_secrecy_bound(list_exponent, alphabet_size, source_entropy, epsilon):
        """min{L log2 |X| / (H(X) - epsilon), 1}."""
        gap = source_entropy - epsilon
        if gap <= 0:
            return 1.0
        return min(float(list_exponent) * math.log2(alphabet_size) / gap, 1.0)

    @staticmethod
    def leak_bound(source_entropy, mu, epsilon):
        """H(X) - mu (H(X) - epsilon); epsilon may equal H(X) here."""
        if not 0 <= epsilon <= source_entropy:
            raise EpsilonOutOfRange(f"epsilon {epsilon} outside [0, H(X) = {source_entropy}]")
        return source_entropy - float(mu) * (source_entropy - epsilon)

    def secrecy_bounds_report(self, target, source, epsilon):
        """Symbol secrecy of the encoder and every bound value, in one report."""
        self._check_epsilon(source, epsilon)
        encoder = _as_encoder(target)
        table = self._enumerate(encoder, source)
        q = encoder.field.order
        n = encoder.n
        entropy = source.entropy_bits
        mu = self._scan(table, epsilon)
        mu_zero = mu if epsilon == 0 else self._scan(table, 0.0)
        per_symbol = tuple(table.mutual_information((i,)) for i in range(n))
        list_exponent = encoder.list_exponent
        secrecy_bound = self.symbol_secrecy_bound(list_exponent, q, entropy, epsilon)
        rate_bound = ListSourceService.rate_list_lower_bound(entropy, list_exponent, q)
        measured = table.output_entropy / n if n else 0.0
        rate_matches = (abs(float(mu) - secrecy_bound) <= RATE_TOLERANCE
                        and abs(measured - rate_bound) <= RATE_TOLERANCE)
        report = SecrecyReport(
            code_id=encoder.code_id,
            source_id=source.label,
            q=q,
            n=n,
            k=encoder.list_symbols,
            epsilon=float(epsilon),
            source_entropy=entropy,
            list_exponent=list_exponent,
            mu_epsilon=mu,
            mu_zero=mu_zero,
            per_symbol_leak=per_symbol,
            symbol_secrecy_bound=secrecy_bound,
            leak_bound=self.leak_bound(entropy, mu, epsilon),
            measured_total_leak=measured,
            rate_list_bound=rate_bound,
            rate_matches_bound=rate_matches,
        )
        if not report.bounds_hold:
            logger.warning("bounds violated for %s / %s at epsilon %s", report.code_id,
                           report.source_id, epsilon)
        return report
