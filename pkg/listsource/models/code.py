"""
Linear code parameters for list-source coding.
"""

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from listsource.errors import DimensionMismatch, RankDeficient
from listsource.models.matrix import MatrixGF


@dataclass(frozen=True)
class CodeSpec:
    """
    A length-n code over `field` given by its (n-k) x n parity check `h`.

    The decoded list of every syndrome has q**k members; L = k/n is the
    normalized list exponent.
    """

    field: object
    n: int
    k: int
    h: MatrixGF
    min_distance: Optional[int] = None

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise DimensionMismatch(f"k = {self.k} outside [0, n = {self.n}]")
        if self.h.field != self.field:
            raise DimensionMismatch("parity check is over a different field")
        if self.h.rows != self.n - self.k or self.h.cols != self.n:
            raise DimensionMismatch(
                f"parity check is {self.h.rows}x{self.h.cols}, expected {self.n - self.k}x{self.n}")
        if self.h.rank != self.h.rows:
            raise RankDeficient(f"parity check rank is below {self.h.rows}")

    @classmethod
    def from_parity_check(cls, h, min_distance=None):
        return cls(h.field, h.cols, h.cols - h.rows, h, min_distance)

    @property
    def q(self):
        return self.field.order

    @property
    def redundancy(self):
        return self.n - self.k

    @property
    def list_exponent(self):
        """L = k/n as an exact fraction."""
        if self.n == 0:
            return Fraction(0)
        return Fraction(self.k, self.n)

    @property
    def list_size(self):
        return self.q ** self.k

    @property
    def code_id(self):
        material = f"{int(self.field.kind)}:{self.field.modulus}:{self.h.elements}"
        digest = hashlib.sha256(material.encode('ascii')).hexdigest()[:12]
        return f"q{self.q}-n{self.n}-k{self.k}-{digest}"
