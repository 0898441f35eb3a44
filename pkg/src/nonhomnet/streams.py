"""Reproducible random streams.

Each consumer derives its own counter-based stream from (master seed,
purpose tag, indices) so trials are independent, order-insensitive, and
bit-reproducible under parallel execution.
"""

from __future__ import annotations

import numpy as np

PURPOSE_TRIAL = 1
PURPOSE_DIAGNOSTIC = 2


def derive_stream(master_seed: int, purpose: int, *indices: int) -> np.random.Generator:
    """Return a Philox generator keyed by (master_seed, purpose, *indices)."""
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=(purpose, *indices))
    return np.random.Generator(np.random.Philox(seq))
