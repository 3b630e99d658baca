"""
Inner ciphers (Enc', Dec') for Phase II of two-phase encryption.

Both ciphers act on the k symbols D x by field addition. The prg-stream
cipher is a demonstrator and makes no security claim.
"""

import hashlib
import logging

from listsource.errors import KeyLengthMismatch, KeyReuse, UsageError
from listsource.models.bundle import SEED_ENVELOPE
from listsource.services.prg_service import MASK64, keystream

logger = logging.getLogger(__name__)

# Key ids that already encrypted a message in this process; see OneTimePad.encrypt.
_spent_key_ids = set()


def clear_spent_keys():
    """Forget every spent one-time pad key."""
    _spent_key_ids.clear()


class OneTimePad:
    """Adds a single-use key of k uniform field elements."""

    kind = 'otp'

    def __init__(self, field, key):
        self.field = field
        self.key = [field.element(v) for v in key]
        fingerprint = repr((int(field.kind), field.modulus, self.key)).encode('ascii')
        self.key_id = hashlib.sha256(fingerprint).hexdigest()[:16]

    @classmethod
    def generate(cls, field, length, rng):
        """Fresh key of `length` uniform symbols from a numpy Generator."""
        return cls(field, [int(v) for v in rng.integers(0, field.order, size=length)])

    def _check_length(self, message):
        if len(message) != len(self.key):
            raise KeyLengthMismatch(f"key has {len(self.key)} symbols, message has {len(message)}")

    def encrypt(self, message):
        self._check_length(message)
        # Single use across every pad built from the same key; not checked under -O.
        if __debug__:
            if self.key_id in _spent_key_ids:
                raise KeyReuse(f"one-time pad {self.key_id} already encrypted a message")
            _spent_key_ids.add(self.key_id)
        return self.field.add_vectors(message, self.key)

    def decrypt(self, ciphertext):
        self._check_length(ciphertext)
        return self.field.sub_vectors(ciphertext, self.key)

    def envelope(self):
        return None


class PrgStreamCipher:
    """Adds a splitmix64 keystream; the seed travels in the Phase II envelope."""

    kind = 'prg'

    def __init__(self, field, seed):
        self.field = field
        self.seed = int(seed) & MASK64

    @classmethod
    def from_envelope(cls, field, envelope):
        return cls(field, SEED_ENVELOPE.unpack(envelope)[0])

    def encrypt(self, message):
        return self.field.add_vectors(message, keystream(self.seed, self.field, len(message)))

    def decrypt(self, ciphertext):
        return self.field.sub_vectors(ciphertext, keystream(self.seed, self.field, len(ciphertext)))

    def envelope(self):
        return SEED_ENVELOPE.pack(self.seed)


def make_cipher(field, kind, key=None, seed=None):
    """Build a cipher by kind name ('otp' or 'prg')."""
    if kind == OneTimePad.kind:
        if key is None:
            raise UsageError("a one-time pad needs a key")
        return OneTimePad(field, key)
    if kind == PrgStreamCipher.kind:
        if seed is None:
            raise UsageError("a prg-stream cipher needs a seed")
        return PrgStreamCipher(field, seed)
    raise UsageError(f"unknown cipher kind {kind!r}")
