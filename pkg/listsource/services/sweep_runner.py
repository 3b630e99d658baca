"""
Seed-pinned sweep of random codes checking the secrecy bounds.
"""

import logging

import numpy as np
import pandas as pd

from listsource.models.field import FieldSpec
from listsource.models.source import SourceModel
from listsource.services.code_service import CodeService
from listsource.services.secrecy_analyzer import SecrecyAnalyzer

logger = logging.getLogger(__name__)

SWEEP_FIELDS = (2, 3, 5)
MAX_SWEEP_LENGTH = 6
EPSILON_FRACTIONS = (0.0, 0.25)


class SweepRunner:
    """Draws random full-rank codes and analyzes each under several sources."""

    def __init__(self, analyzer=None, code_service=None, store=None):
        self.analyzer = analyzer or SecrecyAnalyzer()
        self.code_service = code_service or CodeService()
        self.store = store

    @staticmethod
    def _biased_source(field, rng):
        if field.order == 2:
            return SourceModel.from_probabilities(field, (0.1, 0.9), label="biased-0.1")
        weights = rng.dirichlet(np.ones(field.order))
        # Keep every symbol possible so that H(X) > 0.
        weights = 0.5 * weights + 0.5 / field.order
        return SourceModel.from_probabilities(field, weights.tolist())

    def draw_code(self, rng):
        q = int(rng.choice(SWEEP_FIELDS))
        n = int(rng.integers(2, MAX_SWEEP_LENGTH + 1))
        k = int(rng.integers(1, n))
        field = FieldSpec.prime(q)
        return self.code_service.random_parity_check(field, n, k, int(rng.integers(0, 2 ** 32)))

    def run(self, count, seed, run_label=None):
        """Analyze `count` random codes; returns every SecrecyReport produced."""
        rng = np.random.default_rng(seed)
        reports = []
        for index in range(count):
            code = self.draw_code(rng)
            sources = [SourceModel.uniform(code.field), self._biased_source(code.field, rng)]
            for source in sources:
                for fraction in EPSILON_FRACTIONS:
                    epsilon = fraction * source.entropy_bits
                    report = self.analyzer.secrecy_bounds_report(code, source, epsilon)
                    reports.append(report)
                    if self.store is not None:
                        self.store.save_report(report, run_label)
            logger.info("sweep %d/%d: %s", index + 1, count, code.code_id)
        return reports

    @staticmethod
    def summarize(reports):
        """One DataFrame row per report."""
        return pd.DataFrame([r.to_dict() for r in reports])
