"""Deterministic seed management.

Every simulation unit (cell, trial) gets an independent RNG stream derived
from a single master seed via

    numpy.random.SeedSequence(master_seed, spawn_key=(cell_index, trial_index))

so no two units ever share a stream, results do not depend on scheduling
order or worker count, and a manifest that records the master seed plus the
(cell, trial) grid is sufficient to reproduce every output byte-for-byte.
"""

from __future__ import annotations

from typing import Union

import numpy as np

from .errors import ConfigError

Seed = Union[int, np.random.SeedSequence]


def as_seed_sequence(seed: Seed) -> np.random.SeedSequence:
    """Normalize an int or SeedSequence into a SeedSequence."""
    if isinstance(seed, np.random.SeedSequence):
        return seed
    if isinstance(seed, (int, np.integer)):
        return np.random.SeedSequence(int(seed))
    raise ConfigError(f"seed must be an int or SeedSequence, got {type(seed).__name__}")


def trial_seed(master_seed: int, cell: int, trial: int) -> np.random.SeedSequence:
    """Seed for one (cell, trial) unit of a run."""
    return np.random.SeedSequence(int(master_seed), spawn_key=(int(cell), int(trial)))


def describe_seed(seed: Seed):
    """JSON-friendly echo of a seed value."""
    if isinstance(seed, np.random.SeedSequence):
        return {
            "entropy": seed.entropy,
            "spawn_key": [int(k) for k in seed.spawn_key],
        }
    return int(seed)
