"""
I.i.d. source models and subset queries for the secrecy analyzer.
"""

import hashlib
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from listsource.errors import DimensionMismatch, InvalidSource

PMF_TOLERANCE = 1e-12
PMF_FILE_TOLERANCE = 1e-9


def shannon_entropy(probabilities):
    """Shannon entropy in bits, summed with math.fsum."""
    return math.fsum(-p * math.log2(p) for p in probabilities if p > 0)


def binary_entropy(p):
    return shannon_entropy((p, 1.0 - p))


@dataclass(frozen=True)
class SourceModel:
    """Per-symbol pmf over the field elements 0..q-1, extended i.i.d."""

    field: object
    pmf: Tuple[float, ...]
    label: str = "custom"

    def __post_init__(self):
        pmf = tuple(float(p) for p in self.pmf)
        object.__setattr__(self, 'pmf', pmf)
        if len(pmf) != self.field.order:
            raise InvalidSource(f"pmf has {len(pmf)} entries, expected {self.field.order}")
        if any(p < 0 or math.isnan(p) for p in pmf):
            raise InvalidSource("pmf entries must be nonnegative")
        if abs(math.fsum(pmf) - 1.0) > PMF_TOLERANCE:
            raise InvalidSource(f"pmf sums to {math.fsum(pmf)!r}, not 1")

    @classmethod
    def uniform(cls, field):
        q = field.order
        return cls(field, (1.0 / q,) * q, "uniform")

    @classmethod
    def from_probabilities(cls, field, probabilities, label=None, tolerance=PMF_TOLERANCE):
        """Validate against `tolerance`, then renormalize to an exact pmf."""
        values = [float(p) for p in probabilities]
        total = math.fsum(values)
        if len(values) != field.order:
            raise InvalidSource(f"pmf has {len(values)} entries, expected {field.order}")
        if abs(total - 1.0) > tolerance:
            raise InvalidSource(f"pmf sums to {total!r}, not 1 within {tolerance}")
        values = [v / total for v in values]
        if label is None:
            digest = hashlib.sha256(repr(values).encode('ascii')).hexdigest()[:12]
            label = f"pmf-{digest}"
        return cls(field, tuple(values), label)

    @classmethod
    def from_file(cls, field, path):
        """Plain text, one probability per line, q lines."""
        with open(path, 'r', encoding='utf-8') as handle:
            lines = [line.strip() for line in handle if line.strip()]
        try:
            values = [float(line) for line in lines]
        except ValueError as e:
            raise InvalidSource(f"unreadable probability in {path}: {e}")
        return cls.from_probabilities(field, values, tolerance=PMF_FILE_TOLERANCE)

    @property
    def entropy_bits(self):
        return shannon_entropy(self.pmf)

    def as_array(self):
        return np.array(self.pmf, dtype=np.float64)

    def sample(self, rng, n, count=None):
        """Draw i.i.d. sequences of length n (count x n when count is given)."""
        shape = (n,) if count is None else (count, n)
        return rng.choice(self.field.order, size=shape, p=self.as_array())


@dataclass(frozen=True)
class SubsetQuery:
    """A set J of positions in [0, n), kept sorted."""

    n: int
    indices: Tuple[int, ...]

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        object.__setattr__(self, 'indices', indices)
        if list(indices) != sorted(set(indices)):
            raise DimensionMismatch(f"subset indices {indices} must be sorted and distinct")
        if indices and (indices[0] < 0 or indices[-1] >= self.n):
            raise DimensionMismatch(f"subset indices {indices} outside [0, {self.n})")

    @property
    def size(self):
        return len(self.indices)
