"""
Secrecy report produced by the exhaustive analyzer.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

MU_TOLERANCE = 1e-12
LEAK_TOLERANCE = 1e-9


def _format_float(value):
    return repr(float(value))


@dataclass(frozen=True)
class SecrecyReport:
    """
    Symbol secrecy of one (encoder, source, epsilon) triple and the bound
    values it is checked against. Entropies and leaks are in bits.
    """

    code_id: str
    source_id: str
    q: int
    n: int
    k: int
    epsilon: float
    source_entropy: float
    list_exponent: Fraction
    mu_epsilon: Fraction
    mu_zero: Fraction
    per_symbol_leak: Tuple[float, ...]
    symbol_secrecy_bound: float
    leak_bound: float
    measured_total_leak: float
    rate_list_bound: float
    rate_matches_bound: bool

    @property
    def mu_within_bound(self):
        return float(self.mu_epsilon) <= self.symbol_secrecy_bound + MU_TOLERANCE

    @property
    def leak_within_bound(self):
        return self.measured_total_leak <= self.leak_bound + LEAK_TOLERANCE

    @property
    def bounds_hold(self):
        return self.mu_within_bound and self.leak_within_bound

    def to_lines(self):
        """`key = value` lines with the stable report key names."""
        values = [
            ('code', self.code_id),
            ('source', self.source_id),
            ('epsilon', _format_float(self.epsilon)),
            ('mu_epsilon', _format_float(self.mu_epsilon)),
            ('mu_zero', _format_float(self.mu_zero)),
            ('prop3_bound', _format_float(self.symbol_secrecy_bound)),
            ('prop4_rhs', _format_float(self.leak_bound)),
            ('measured_total_leak', _format_float(self.measured_total_leak)),
            ('per_symbol_leak', ','.join(_format_float(v) for v in self.per_symbol_leak)),
            ('prop5_rate_match', 'true' if self.rate_matches_bound else 'false'),
        ]
        return [f"{key} = {value}" for key, value in values]

    def to_text(self):
        return '\n'.join(self.to_lines()) + '\n'

    def to_dict(self):
        return {
            'code_id': self.code_id,
            'source_id': self.source_id,
            'q': self.q,
            'n': self.n,
            'k': self.k,
            'epsilon': self.epsilon,
            'source_entropy': self.source_entropy,
            'list_exponent': float(self.list_exponent),
            'mu_epsilon': float(self.mu_epsilon),
            'mu_zero': float(self.mu_zero),
            'per_symbol_leak': list(self.per_symbol_leak),
            'symbol_secrecy_bound': self.symbol_secrecy_bound,
            'leak_bound': self.leak_bound,
            'measured_total_leak': self.measured_total_leak,
            'rate_list_bound': self.rate_list_bound,
            'rate_matches_bound': self.rate_matches_bound,
            'bounds_hold': self.bounds_hold,
        }
