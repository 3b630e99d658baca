"""
Code service: parity-check constructions and the exhaustive MDS check.
"""

import itertools
import logging
import math

import numpy as np

from listsource.config import DEFAULT_CAP
from listsource.errors import DimensionMismatch, DuplicatePoints, RankDeficient, TooLong, TooManySubsets
from listsource.models.code import CodeSpec
from listsource.models.matrix import MatrixGF

logger = logging.getLogger(__name__)


class CodeService:
    """Service for building and checking the linear codes behind list-source coding."""

    def __init__(self, mds_subset_cap=DEFAULT_CAP, max_rejections=10_000):
        self.mds_subset_cap = mds_subset_cap
        self.max_rejections = max_rejections

    def vandermonde_parity_check(self, field, n, k, points=None):
        """GRS parity check H[i][j] = points[j]**i for i < n-k (MDS, d = n-k+1)."""
        if n > field.order:
            raise TooLong(f"n = {n} exceeds q = {field.order}")
        if not 0 <= k <= n:
            raise DimensionMismatch(f"k = {k} outside [0, n = {n}]")
        if points is None:
            points = list(range(n))
        points = [field.element(p) for p in points]
        if len(points) != n:
            raise DimensionMismatch(f"{len(points)} evaluation points for n = {n}")
        if len(set(points)) != n:
            raise DuplicatePoints(f"evaluation points {points} are not distinct")
        rows = [[field.power(p, i) for p in points] for i in range(n - k)]
        h = MatrixGF.from_rows(field, rows, n)
        return CodeSpec(field, n, k, h, min_distance=n - k + 1)

    def from_parity_check(self, field, rows, n=None):
        """CodeSpec for an explicit full-row-rank parity check."""
        h = MatrixGF.from_rows(field, rows, n)
        return CodeSpec.from_parity_check(h)

    def random_parity_check(self, field, n, k, seed):
        """Uniformly drawn full-row-rank (n-k) x n parity check, rejection sampled."""
        if not 0 <= k <= n:
            raise DimensionMismatch(f"k = {k} outside [0, n = {n}]")
        rng = np.random.default_rng(seed)
        for attempt in range(self.max_rejections):
            values = rng.integers(0, field.order, size=(n - k, n))
            h = MatrixGF.from_rows(field, values.tolist(), n)
            if h.rank == n - k:
                logger.debug("random %dx%d parity check accepted after %d draws", n - k, n, attempt + 1)
                return CodeSpec(field, n, k, h)
        raise RankDeficient(f"no full-rank {n - k}x{n} matrix in {self.max_rejections} draws")

    def is_mds(self, code):
        """
        True iff every (n-k) x (n-k) column submatrix of H is invertible.

        Exhaustive over all column subsets; this is the reference check, so
        no algebraic shortcut is taken.
        """
        r = code.redundancy
        subsets = math.comb(code.n, r)
        if subsets > self.mds_subset_cap:
            raise TooManySubsets(f"{subsets} column subsets exceed the cap of {self.mds_subset_cap}")
        logger.debug("checking %d maximal minors of %s", subsets, code.code_id)
        for columns in itertools.combinations(range(code.n), r):
            if code.h.select_columns(columns).rank < r:
                return False
        return True

    def minimum_distance(self, code):
        """Known d if recorded, else the size of the smallest dependent column set of H."""
        if code.min_distance is not None:
            return code.min_distance
        for size in range(1, code.n + 1):
            if math.comb(code.n, size) > self.mds_subset_cap:
                raise TooManySubsets(f"{math.comb(code.n, size)} column subsets exceed the cap")
            for columns in itertools.combinations(range(code.n), size):
                if code.h.select_columns(columns).rank < size:
                    return size
        return code.n + 1
