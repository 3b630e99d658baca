"""
Database model for stored secrecy analyses.
"""

import json

from sqlalchemy import Boolean, Column, Float, Integer, String, Text
from sqlalchemy.orm import declarative_base

Base = declarative_base()


class AnalysisRecord(Base):
    """One SecrecyReport, flattened into a row."""

    __tablename__ = 'analysis_records'

    id = Column(Integer, primary_key=True)
    run_label = Column(String(100), nullable=True, index=True)
    code_id = Column(String(100), nullable=False, index=True)
    source_id = Column(String(100), nullable=False)
    q = Column(Integer, nullable=False)
    n = Column(Integer, nullable=False)
    k = Column(Integer, nullable=False)

    # Secrecy
    epsilon = Column(Float, nullable=False)
    source_entropy = Column(Float, nullable=False)
    mu_epsilon = Column(Float, nullable=False)
    mu_zero = Column(Float, nullable=False)
    per_symbol_leak = Column(Text, nullable=False)  # JSON list of bits

    # Bounds
    symbol_secrecy_bound = Column(Float, nullable=False)
    leak_bound = Column(Float, nullable=False)
    measured_total_leak = Column(Float, nullable=False)
    rate_list_bound = Column(Float, nullable=False)
    rate_matches_bound = Column(Boolean, default=False)
    bounds_hold = Column(Boolean, default=True, index=True)

    @classmethod
    def from_report(cls, report, run_label=None):
        return cls(
            run_label=run_label,
            code_id=report.code_id,
            source_id=report.source_id,
            q=report.q,
            n=report.n,
            k=report.k,
            epsilon=report.epsilon,
            source_entropy=report.source_entropy,
            mu_epsilon=float(report.mu_epsilon),
            mu_zero=float(report.mu_zero),
            per_symbol_leak=json.dumps(list(report.per_symbol_leak)),
            symbol_secrecy_bound=report.symbol_secrecy_bound,
            leak_bound=report.leak_bound,
            measured_total_leak=report.measured_total_leak,
            rate_list_bound=report.rate_list_bound,
            rate_matches_bound=report.rate_matches_bound,
            bounds_hold=report.bounds_hold,
        )

    def to_dict(self):
        """Convert model to dictionary."""
        return {
            'id': self.id,
            'run_label': self.run_label,
            'code_id': self.code_id,
            'source_id': self.source_id,
            'q': self.q,
            'n': self.n,
            'k': self.k,
            'epsilon': self.epsilon,
            'source_entropy': self.source_entropy,
            'mu_epsilon': self.mu_epsilon,
            'mu_zero': self.mu_zero,
            'per_symbol_leak': json.loads(self.per_symbol_leak) if self.per_symbol_leak else [],
            'symbol_secrecy_bound': self.symbol_secrecy_bound,
            'leak_bound': self.leak_bound,
            'measured_total_leak': self.measured_total_leak,
            'rate_list_bound': self.rate_list_bound,
            'rate_matches_bound': self.rate_matches_bound,
            'bounds_hold': self.bounds_hold,
        }
