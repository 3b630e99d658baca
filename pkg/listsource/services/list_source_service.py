"""
List-source coding: syndrome encoding, coset list decoding, the trivial
prefix baseline and rate-list arithmetic.
"""

import logging
import math
from collections import namedtuple
from fractions import Fraction

import numpy as np
import pandas as pd

from listsource.config import DEFAULT_CAP
from listsource.errors import DimensionMismatch
from listsource.models.listcode import DecodedList, IdentitySourceCoder, Syndrome, TrivialEncoding

logger = logging.getLogger(__name__)

CodeRate = namedtuple('CodeRate', ['total_bits', 'bits_per_symbol'])


def _digits_to_index(digits, q):
    """Rows of base-q digits (most significant first) to integer labels."""
    index = np.zeros(digits.shape[0], dtype=np.int64)
    for j in range(digits.shape[1]):
        index = index * q + digits[:, j]
    return index


def floor_list_symbols(n, list_exponent):
    """floor(L n) computed exactly."""
    return math.floor(Fraction(list_exponent) * n)


class SyndromeEncoder:
    """Scheme encoder x -> H s_n(x) for a CodeSpec."""

    def __init__(self, code, source_coder=None):
        self.code = code
        self.source_coder = source_coder or IdentitySourceCoder()
        self.field = code.field
        self.n = code.n
        self.list_symbols = code.k

    @property
    def code_id(self):
        return self.code.code_id

    @property
    def list_exponent(self):
        return self.code.list_exponent

    def encode(self, x):
        x = list(x)
        if len(x) != self.n:
            raise DimensionMismatch(f"message of length {len(x)} for n = {self.n}")
        coded = self.source_coder.encode(x)
        return Syndrome(self.code, self.code.h.mul_vec(coded))

    def encode_batch(self, xs):
        """Integer label of each row's syndrome."""
        syndromes = self.code.h.apply_batch(xs)
        return _digits_to_index(syndromes, self.field.order)


class SyndromeDecoder:
    """Membership test for the coset named by a syndrome: H x = s."""

    def __init__(self, code, cap=DEFAULT_CAP):
        self.code = code
        self.cap = cap

    def decode(self, syndrome):
        return DecodedList(syndrome, self.cap)

    def contains(self, syndrome, x):
        return tuple(self.code.h.mul_vec(list(x))) == tuple(syndrome.symbols)


class PrefixEncoder:
    """The trivial scheme: keep the first n - floor(L n) symbols, drop the rest."""

    def __init__(self, field, n, list_exponent):
        list_exponent = Fraction(list_exponent)
        if not 0 <= list_exponent <= 1:
            raise DimensionMismatch(f"list exponent {list_exponent} outside [0, 1]")
        self.field = field
        self.n = n
        self.list_symbols = floor_list_symbols(n, list_exponent)
        self.prefix_length = n - self.list_symbols

    @property
    def code_id(self):
        return f"trivial-q{self.field.order}-n{self.n}-p{self.prefix_length}"

    @property
    def list_exponent(self):
        if self.n == 0:
            return Fraction(0)
        return Fraction(self.list_symbols, self.n)

    def encode(self, x):
        x = [int(v) for v in x]
        if len(x) != self.n:
            raise DimensionMismatch(f"message of length {len(x)} for n = {self.n}")
        return TrivialEncoding(tuple(x[:self.prefix_length]), self.list_symbols,
                               self.field.order ** self.list_symbols)

    def encode_batch(self, xs):
        xs = np.asarray(xs, dtype=np.int64)
        return _digits_to_index(xs[:, :self.prefix_length], self.field.order)


class PrefixDecoder:
    """Membership test for the trivial scheme's list: the prefix must match."""

    def contains(self, encoding, x):
        return tuple(int(v) for v in x[:len(encoding.prefix)]) == encoding.prefix


class ListSourceService:
    """Service for list-source encoding, list decoding and rate accounting."""

    def __init__(self, list_cap=DEFAULT_CAP):
        self.list_cap = list_cap

    def encode(self, code, x):
        """Syndrome H x of a length-n message."""
        return SyndromeEncoder(code).encode(x)

    def decode_list(self, code, syndrome):
        """Lazily enumerable coset {x : H x = s}."""
        if syndrome.code.h != code.h:
            raise DimensionMismatch("syndrome belongs to a different code")
        return SyndromeDecoder(code, self.list_cap).decode(syndrome)

    def trivial_encode(self, field, n, list_exponent, x):
        """Prefix of length n - floor(L n); the list is every completion."""
        return PrefixEncoder(field, n, list_exponent).encode(x)

    @staticmethod
    def rate_list_lower_bound(entropy_bits, list_exponent, alphabet_size):
        """max(0, H(X) - L log2 |X|) in bits per symbol."""
        return max(0.0, entropy_bits - float(list_exponent) * math.log2(alphabet_size))

    @staticmethod
    def code_rate(code):
        """ceil((n-k) log2 q) bits in total and per source symbol."""
        total = (code.q ** code.redundancy - 1).bit_length()
        per_symbol = total / code.n if code.n else 0.0
        return CodeRate(total, per_symbol)

    def error_probability_estimate(self, encoder, decoder, source, trials, seed):
        """Fraction of sampled sequences missing from their own decoded list."""
        if trials < 1:
            raise DimensionMismatch("at least one trial is required")
        rng = np.random.default_rng(seed)
        samples = source.sample(rng, encoder.n, trials)
        misses = 0
        for x in samples:
            x = [int(v) for v in x]
            if not decoder.contains(encoder.encode(x), x):
                misses += 1
        logger.debug("%d of %d sampled sequences missed their list", misses, trials)
        return misses / trials

    def tradeoff_table(self, field, n):
        """Phase sizes, list size and rates for every k at block length n (uniform source)."""
        q = field.order
        log_q = math.log2(q)
        rows = []
        for k in range(n + 1):
            list_exponent = Fraction(k, n) if n else Fraction(0)
            total_bits = (q ** (n - k) - 1).bit_length()
            rows.append({
                'k': k,
                'list_exponent': float(list_exponent),
                'phase1_symbols': n - k,
                'phase2_symbols': k,
                'list_size': q ** k,
                'rate_bits_per_symbol': total_bits / n if n else 0.0,
                'rate_list_bound': self.rate_list_lower_bound(log_q, list_exponent, q),
                'mds_mu_zero': float(list_exponent) if n <= q else None,
            })
        return pd.DataFrame(rows)
