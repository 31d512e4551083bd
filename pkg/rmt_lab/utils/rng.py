"""
Per-trial random streams

Every trial gets its own counter-based Philox stream derived from
(seed, trial, *substream) through numpy's SeedSequence spawn keys, so
parallel trials never share generator state and a trial can be replayed
in isolation. Normal variates come from numpy's ziggurat sampler.
"""
import numpy as np


def trial_rng(seed: int, trial: int, *substream: int) -> np.random.Generator:
    """
    Independent generator for one Monte Carlo trial

    Args:
        seed: 64-bit unsigned experiment seed
        trial: Trial index (>= 0)
        substream: Extra key components (e.g. the step of a random walk)

    Returns:
        numpy Generator backed by a Philox bit generator
    """
    if seed < 0 or trial < 0 or any(s < 0 for s in substream):
        raise ValueError("seed, trial and substream keys must be nonnegative")
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(trial), *map(int, substream)))
    return np.random.Generator(np.random.Philox(sequence))
