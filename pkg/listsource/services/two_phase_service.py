"""
Two-phase encryption with tunable secrecy.

Phase I ships the syndrome H x ahead of time; Phase II ships Enc'(D x).
Together they pin down x through the stacked system [H; D] x = (s, t).
"""

import logging

from listsource.errors import CipherMismatch, DimensionMismatch, TooFewBlocks
from listsource.models.bundle import TwoPhaseBundle
from listsource.models.listcode import Syndrome
from listsource.services.ciphers import PrgStreamCipher
from listsource.services.prg_service import MASK64, prg_derandomize, prg_randomize

logger = logging.getLogger(__name__)


class TwoPhaseService:
    """Service for the two-phase scheme and its chained-block extension."""

    def derive_complement(self, code):
        """k x n matrix D with rank([H; D]) = n, chosen greedily from the standard basis."""
        return code.h.complete_basis()

    @staticmethod
    def _check_message(code, x):
        x = [code.field.element(v) for v in x]
        if len(x) != code.n:
            raise DimensionMismatch(f"message of length {len(x)} for n = {code.n}")
        return x

    @staticmethod
    def _check_complement(code, d):
        if d.rows != code.k or d.cols != code.n:
            raise DimensionMismatch(f"complement is {d.rows}x{d.cols}, expected {code.k}x{code.n}")

    def two_phase_encrypt(self, x, code, d, cipher, pre_randomize_seed=None):
        """
        Phase I = H x, Phase II = Enc'(D x).

        With `pre_randomize_seed`, x is first replaced by x + keystream(seed)
        so that both phases describe a near-uniform vector.
        """
        x = self._check_message(code, x)
        self._check_complement(code, d)
        if pre_randomize_seed is not None:
            pre_randomize_seed &= MASK64
            x = prg_randomize(code.field, x, pre_randomize_seed)
        phase1 = Syndrome(code, code.h.mul_vec(x))
        phase2 = cipher.encrypt(d.mul_vec(x))
        return TwoPhaseBundle(phase1, tuple(phase2), cipher.kind, cipher.envelope(),
                              pre_randomize_seed)

    @staticmethod
    def _check_cipher(bundle, cipher):
        if bundle.cipher_kind != cipher.kind:
            raise CipherMismatch(
                f"bundle was encrypted with {bundle.cipher_kind!r}, not {cipher.kind!r}")

    def two_phase_decrypt(self, bundle, code, d, cipher):
        """Recover x from both phases by solving [H; D] x = (s, Dec'(e))."""
        self._check_complement(code, d)
        self._check_cipher(bundle, cipher)
        if bundle.code.h != code.h:
            raise DimensionMismatch("bundle belongs to a different code")
        t = cipher.decrypt(list(bundle.phase2))
        x = code.h.stack(d).solve_square(list(bundle.phase1.symbols) + list(t))
        if bundle.pre_randomize_seed is not None:
            x = prg_derandomize(code.field, x, bundle.pre_randomize_seed)
        return x

    def decrypt_with_envelope(self, bundle, code, d):
        """Decrypt a prg-stream bundle using the seed carried in Phase II."""
        if bundle.seed_envelope is None:
            raise DimensionMismatch("bundle carries no seed envelope")
        cipher = PrgStreamCipher.from_envelope(code.field, bundle.seed_envelope)
        return self.two_phase_decrypt(bundle, code, d, cipher)

    def rekey_phase2(self, bundle, code, d, old_cipher, new_cipher):
        """Re-encrypt Phase II under a new cipher; Phase I is reused as is."""
        self._check_complement(code, d)
        self._check_cipher(bundle, old_cipher)
        t = old_cipher.decrypt(list(bundle.phase2))
        logger.info("re-keying phase II of %s from %s to %s", code.code_id,
                    old_cipher.kind, new_cipher.kind)
        return TwoPhaseBundle(bundle.phase1, tuple(new_cipher.encrypt(t)), new_cipher.kind,
                              new_cipher.envelope(), bundle.pre_randomize_seed)

    def overlap_chain_encode(self, blocks, code2n):
        """Syndromes of consecutive block pairs: Y_i = H (x_i, x_{i+1})."""
        blocks = [list(b) for b in blocks]
        if len(blocks) < 2:
            raise TooFewBlocks(f"{len(blocks)} block(s); chaining needs at least 2")
        n = len(blocks[0])
        if code2n.n != 2 * n:
            raise DimensionMismatch(f"code length {code2n.n} for blocks of length {n}")
        for block in blocks:
            if len(block) != n:
                raise DimensionMismatch(f"block of length {len(block)}, expected {n}")
        syndromes = []
        for first, second in zip(blocks, blocks[1:]):
            pair = self._check_message(code2n, first + second)
            syndromes.append(Syndrome(code2n, code2n.h.mul_vec(pair)))
        return syndromes

    def check_overlap_chain(self, blocks, code2n, syndromes):
        """True iff every block pair lies in the coset named by its syndrome."""
        blocks = [list(b) for b in blocks]
        if len(syndromes) != len(blocks) - 1:
            return False
        for first, second, syndrome in zip(blocks, blocks[1:], syndromes):
            pair = first + second
            if len(pair) != code2n.n:
                return False
            if tuple(code2n.h.mul_vec(pair)) != tuple(syndrome.symbols):
                return False
        return True
