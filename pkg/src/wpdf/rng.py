"""Counter-based seed derivation.

Every random draw in the package comes from a PCG64 stream keyed by
``(master_seed, *key)`` through :class:`numpy.random.SeedSequence`.  Two
streams with different keys are independent, and a stream never depends on
which other streams were drawn before it, so results do not change with the
order or degree of parallel execution.
"""

from __future__ import annotations

import os
import struct

import numpy as np

SEED_ENV = "WPDF_SEED"
DEFAULT_SEED = 20200607


def default_seed() -> int:
    """Seed from ``$WPDF_SEED`` when set, else the package default."""
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_SEED
    return int(raw, 0)


def float_key(value: float) -> int:
    """Map a float to a stable non-negative integer usable in a spawn key."""
    return struct.unpack("<Q", struct.pack("<d", float(value)))[0]


def generator(seed: int, *key: int) -> np.random.Generator:
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.PCG64(ss))


def uniforms(seed: int, n: int, *key: int) -> np.ndarray:
    """``n`` uniforms on the half-open interval (0, 1]."""
    return 1.0 - generator(seed, *key).random(n)
