"""
Finite field arithmetic over GF(p) for primes p <= 2**16 and over GF(2**8).

Elements are plain ints in [0, q). Binary extension fields multiply through
log/antilog tables built once when the field is constructed.
"""

import enum
import logging
from dataclasses import dataclass, field

import numpy as np

from listsource.errors import InvalidField, ZeroInverse

logger = logging.getLogger(__name__)

MAX_PRIME = 1 << 16
AES_POLYNOMIAL = 0x11B


class FieldKind(enum.IntEnum):
    PRIME = 0
    BINARY_EXTENSION = 1


def is_prime(value):
    """Deterministic trial-division primality check."""
    if value < 2:
        return False
    if value < 4:
        return True
    if value % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 2
    return True


def _poly_degree(poly):
    return poly.bit_length() - 1


def _poly_mod(a, b):
    """Remainder of a / b for polynomials over GF(2) packed in ints."""
    degree_b = _poly_degree(b)
    while a and _poly_degree(a) >= degree_b:
        a ^= b << (_poly_degree(a) - degree_b)
    return a


def is_irreducible_degree8(poly):
    """True when poly has degree 8 and no factor of degree 1..4 over GF(2)."""
    if _poly_degree(poly) != 8:
        return False
    for divisor in range(2, 1 << 5):
        if _poly_mod(poly, divisor) == 0:
            return False
    return True


def carryless_multiply(a, b, poly):
    """Shift-and-add product in GF(2**8), reduced by poly."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & 0x100:
            a ^= poly
    return result


@dataclass(frozen=True)
class FieldSpec:
    """The alphabet F_q: a prime field or GF(2**8) with a reduction polynomial."""

    kind: FieldKind
    modulus: int
    order: int = field(init=False)
    _exp: tuple = field(init=False, repr=False, compare=False)
    _log: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        kind = FieldKind(self.kind)
        object.__setattr__(self, 'kind', kind)
        if kind == FieldKind.PRIME:
            if not (2 <= self.modulus <= MAX_PRIME) or not is_prime(self.modulus):
                raise InvalidField(f"modulus {self.modulus} is not a prime in [2, {MAX_PRIME}]")
            object.__setattr__(self, 'order', self.modulus)
            object.__setattr__(self, '_exp', ())
            object.__setattr__(self, '_log', ())
        else:
            if not is_irreducible_degree8(self.modulus):
                raise InvalidField(f"polynomial {self.modulus:#x} is not an irreducible degree-8 polynomial")
            object.__setattr__(self, 'order', 256)
            self._build_tables()

    @classmethod
    def prime(cls, p):
        return cls(FieldKind.PRIME, p)

    @classmethod
    def binary_extension(cls, poly=AES_POLYNOMIAL):
        return cls(FieldKind.BINARY_EXTENSION, poly)

    @classmethod
    def for_order(cls, q, poly=None):
        """GF(q) for a prime q, or GF(256) with `poly` (default 0x11B)."""
        if q == 256:
            return cls.binary_extension(AES_POLYNOMIAL if poly is None else poly)
        if poly is not None:
            raise InvalidField("a reduction polynomial only applies to q = 256")
        return cls.prime(q)

    @property
    def is_binary(self):
        return self.kind == FieldKind.BINARY_EXTENSION

    @property
    def characteristic(self):
        return 2 if self.is_binary else self.modulus

    def _build_tables(self):
        # Any irreducible polynomial gives a cyclic multiplicative group,
        # but x itself is only a generator when the polynomial is primitive.
        for generator in range(2, 256):
            exp = [0] * 510
            log = [0] * 256
            value = 1
            seen = set()
            for power in range(255):
                if value in seen:
                    break
                seen.add(value)
                exp[power] = value
                log[value] = power
                value = carryless_multiply(value, generator, self.modulus)
            if len(seen) == 255:
                for power in range(255, 510):
                    exp[power] = exp[power - 255]
                object.__setattr__(self, '_exp', tuple(exp))
                object.__setattr__(self, '_log', tuple(log))
                logger.debug("GF(256) tables for %#x built with generator %#x", self.modulus, generator)
                return
        raise InvalidField(f"no generator found for polynomial {self.modulus:#x}")

    def contains(self, value):
        return isinstance(value, (int, np.integer)) and 0 <= value < self.order

    def element(self, value):
        """Validate and return a canonical element."""
        if not self.contains(value):
            raise InvalidField(f"{value!r} is not an element of GF({self.order})")
        return int(value)

    def add(self, a, b):
        if self.is_binary:
            return a ^ b
        return (a + b) % self.modulus

    def neg(self, a):
        if self.is_binary:
            return a
        return (-a) % self.modulus

    def sub(self, a, b):
        if self.is_binary:
            return a ^ b
        return (a - b) % self.modulus

    def mul(self, a, b):
        if self.is_binary:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return (a * b) % self.modulus

    def inv(self, a):
        if a == 0:
            raise ZeroInverse(f"0 has no inverse in GF({self.order})")
        if self.is_binary:
            return self._exp[255 - self._log[a]]
        return pow(a, self.modulus - 2, self.modulus)

    def power(self, a, exponent):
        """a**exponent with 0**0 = 1."""
        result = 1
        base = a
        while exponent > 0:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def multiplication_table(self):
        """Full q x q product table as a numpy array (binary extension only)."""
        if not self.is_binary:
            raise InvalidField("multiplication tables are only built for GF(256)")
        exp = np.array(self._exp, dtype=np.int64)
        log = np.array(self._log, dtype=np.int64)
        table = exp[log[:, None] + log[None, :]]
        table[0, :] = 0
        table[:, 0] = 0
        return table

    def add_vectors(self, x, y):
        return [self.add(a, b) for a, b in zip(x, y)]

    def sub_vectors(self, x, y):
        return [self.sub(a, b) for a, b in zip(x, y)]
