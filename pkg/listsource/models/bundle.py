"""
The two payloads of two-phase encryption.
"""

import struct
from dataclasses import dataclass
from typing import Optional, Tuple

from listsource.errors import DimensionMismatch
from listsource.models.listcode import Syndrome

SEED_ENVELOPE = struct.Struct('<Q')


@dataclass(frozen=True)
class TwoPhaseBundle:
    """
    Phase I is the key-independent syndrome H x, sent ahead of time.
    Phase II is Enc'(D x), sent once a key is in place; a prg-stream cipher
    prepends its 8-byte little-endian seed as `seed_envelope`.

    When x was pre-randomized, both phases are computed from
    x + keystream(pre_randomize_seed) and the seed follows the cipher's
    envelope as another 8 bytes.
    """

    phase1: Syndrome
    phase2: Tuple[int, ...]
    cipher_kind: str
    seed_envelope: Optional[bytes] = None
    pre_randomize_seed: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'phase2', tuple(int(v) for v in self.phase2))
        if len(self.phase2) != self.phase1.code.k:
            raise DimensionMismatch(
                f"phase II carries {len(self.phase2)} symbols, expected {self.phase1.code.k}")
        if self.seed_envelope is not None and len(self.seed_envelope) != SEED_ENVELOPE.size:
            raise DimensionMismatch(f"seed envelope must be {SEED_ENVELOPE.size} bytes")
        if self.pre_randomize_seed is not None and not 0 <= self.pre_randomize_seed < 1 << 64:
            raise DimensionMismatch(f"pre-randomize seed {self.pre_randomize_seed} is not a 64-bit word")

    @property
    def code(self):
        return self.phase1.code

    @property
    def envelope_seed(self):
        if self.seed_envelope is None:
            return None
        return SEED_ENVELOPE.unpack(self.seed_envelope)[0]

    @property
    def envelope(self):
        """Bytes written ahead of the Phase II symbols."""
        out = self.seed_envelope or b''
        if self.pre_randomize_seed is not None:
            out += SEED_ENVELOPE.pack(self.pre_randomize_seed)
        return out
