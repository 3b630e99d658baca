"""
splitmix64 keystreams over a finite field.

Not a cryptographic generator: it only makes pre-randomization and the
prg-stream cipher reproducible from a 64-bit seed.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """The reference splitmix64 generator."""

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_word(self):
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


def acceptance_limit(q):
    """Words at or above this bound are rejected: floor(2**64 / q) * q."""
    return ((1 << 64) // q) * q


def accepted_word_counts(q):
    """How many accepted 64-bit words reduce to each residue mod q."""
    limit = acceptance_limit(q)
    return [(limit - r + q - 1) // q for r in range(q)]


def keystream(seed, field, length):
    """`length` uniform field elements drawn by rejection sampling."""
    generator = SplitMix64(seed)
    q = field.order
    limit = acceptance_limit(q)
    out = []
    while len(out) < length:
        word = generator.next_word()
        if word < limit:
            out.append(word % q)
    return out


def prg_randomize(field, x, seed):
    """x + keystream(seed) componentwise."""
    return field.add_vectors(x, keystream(seed, field, len(x)))


def prg_derandomize(field, x, seed):
    """Inverse of prg_randomize."""
    return field.sub_vectors(x, keystream(seed, field, len(x)))
