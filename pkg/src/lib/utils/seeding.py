"""
Seed derivation for every random stream in the package.

All randomness flows from one integer seed. Each component derives its own
64-bit seed by hashing (seed, labels...) with BLAKE2b and feeds it to numpy's
PCG64 bit generator, so streams do not depend on call order or thread count.
"""

import hashlib

import numpy as np

STREAM_NAME = 'pcg64/blake2b-v1'

_MASK64 = (1 << 64) - 1


def derive_seed(seed, *labels):
    """
    Derive a 64-bit child seed from a parent seed and a label path.

    Examples:
        derive_seed(7, 'hyperplane', 3) → same value on every platform
        derive_seed(7, 'hyperplane', 3) != derive_seed(7, 'hyperplane', 4)

    Args:
        seed: Parent seed (any integer, reduced mod 2^64)
        *labels: Component names / indices identifying the stream

    Returns:
        int: Child seed in [0, 2^64)
    """
    text = ':'.join([str(int(seed) & _MASK64), *[str(label) for label in labels]])
    digest = hashlib.blake2b(text.encode('utf-8'), digest_size=8).digest()
    return int.from_bytes(digest, 'little')


def make_rng(seed, *labels):
    """Return a numpy Generator on the PCG64 stream for (seed, labels)."""
    return np.random.Generator(np.random.PCG64(derive_seed(seed, *labels)))


def coin(seed, *labels):
    """One fair bit keyed by (seed, labels); order-independent."""
    return derive_seed(seed, *labels) & 1
