"""
Values produced by list-source encoding and decoding.
"""

import itertools
from dataclasses import dataclass
from typing import Tuple

from listsource.errors import DimensionMismatch, InvalidField, ListTooLarge
from listsource.models.code import CodeSpec
from listsource.models.matrix import reduce_rows


@dataclass(frozen=True)
class Syndrome:
    """H . x for a code; identifies the coset (decoded list) containing x."""

    code: CodeSpec
    symbols: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'symbols', tuple(int(s) for s in self.symbols))
        if len(self.symbols) != self.code.redundancy:
            raise DimensionMismatch(
                f"syndrome of length {len(self.symbols)}, expected {self.code.redundancy}")
        for s in self.symbols:
            if not self.code.field.contains(s):
                raise InvalidField(f"{s!r} is not an element of GF({self.code.q})")

    @property
    def bit_length(self):
        """ceil((n-k) log2 q): size of the bit string this syndrome maps to."""
        return (self.code.q ** self.code.redundancy - 1).bit_length()

    def __len__(self):
        return len(self.symbols)


class DecodedList:
    """
    The coset {x : H x = s}, reported by size and enumerated lazily.

    Members come out in lexicographic order of the k free coordinates (the
    non-pivot columns of rref(H)). Enumeration is refused when q**k exceeds
    `cap`; the cardinality is always available.
    """

    def __init__(self, syndrome, cap):
        self.code = syndrome.code
        self.syndrome = syndrome
        self.cap = cap
        self.cardinality = self.code.list_size
        self._solution = None
        self._produced = 0

    def __len__(self):
        return self.cardinality

    def __contains__(self, x):
        if len(x) != self.code.n:
            return False
        return tuple(self.code.h.mul_vec(list(x))) == self.syndrome.symbols

    @property
    def produced(self):
        """Members yielded so far by this list's iterators."""
        return self._produced

    def _reduced_system(self):
        if self._solution is None:
            code = self.code
            field = code.field
            augmented = [row + [s] for row, s in zip(code.h.to_rows(), self.syndrome.symbols)]
            pivots = reduce_rows(field, augmented, code.n)
            free = [j for j in range(code.n) if j not in pivots]
            self._solution = (augmented, pivots, free)
        return self._solution

    def __iter__(self):
        if self.cardinality > self.cap:
            raise ListTooLarge(f"list of {self.cardinality} members exceeds the cap of {self.cap}")
        return self._enumerate()

    def _enumerate(self):
        code = self.code
        field = code.field
        n = code.n
        reduced, pivots, free = self._reduced_system()
        for values in itertools.product(range(code.q), repeat=len(free)):
            x = [0] * n
            for col, value in zip(free, values):
                x[col] = value
            for row, col in zip(reduced, pivots):
                acc = row[n]
                for f in free:
                    if row[f] and x[f]:
                        acc = field.sub(acc, field.mul(row[f], x[f]))
                x[col] = acc
            self._produced += 1
            yield tuple(x)

    def take(self, limit):
        """At most `limit` members, in enumeration order."""
        return list(itertools.islice(iter(self), limit))


class IdentitySourceCoder:
    """s_n and r_n for a source already uniform over the alphabet: m_n = n."""

    def encode(self, x):
        return list(x)


@dataclass(frozen=True)
class TrivialEncoding:
    """Prefix kept by the trivial scheme; the list is prefix + every suffix."""

    prefix: Tuple[int, ...]
    suffix_length: int
    list_size: int
