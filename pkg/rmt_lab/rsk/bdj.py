"""
Random permutations and the Baik-Deift-Johansson edge statistic
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from rmt_lab.config import config
from rmt_lab.core.errors import ParameterError
from rmt_lab.core.monte_carlo import lattice_ks_distance, mean_and_stderr, run_trials
from rmt_lab.edge.tracy_widom import F2Table, f2_cdf
from rmt_lab.rsk.subsequences import lis
from rmt_lab.utils.rng import trial_rng

logger = logging.getLogger(__name__)

MIN_TRIALS = 100


@dataclass
class PermutationSample:
    """Uniform permutation of 1..n in one-line notation"""

    values: np.ndarray
    n: int
    seed: int
    trial: int

    def __post_init__(self):
        if sorted(self.values.tolist()) != list(range(1, self.n + 1)):
            raise ParameterError("Sample is not a permutation of 1..n")


def random_permutation(n: int, seed: Optional[int] = None, trial: int = 0) -> PermutationSample:
    """Fisher-Yates shuffle on the trial's own stream"""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    seed = config.sampling.default_seed if seed is None else seed
    values = trial_rng(seed, trial).permutation(n) + 1
    return PermutationSample(values=values, n=n, seed=seed, trial=trial)


@dataclass
class BdjSample:
    """Longest increasing subsequence lengths and their edge scaling"""

    n: int
    seed: int
    lengths: np.ndarray

    @property
    def values(self) -> np.ndarray:
        """(L_n - 2 sqrt(n)) / n^{1/6}"""
        return (self.lengths - 2.0 * math.sqrt(self.n)) / self.n ** (1.0 / 6.0)

    @property
    def mean_ratio(self) -> float:
        """E[L_n] / sqrt(n), which tends to 2"""
        return mean_and_stderr(self.lengths)[0] / math.sqrt(self.n)

    def ks_distance(self, table: F2Table) -> float:
        # L_n is an integer, so the statistic lives on a lattice of spacing n^{-1/6}
        spacing = self.n ** (-1.0 / 6.0)
        return lattice_ks_distance(
            self.values, lambda t: f2_cdf(table, t), spacing, offset=-2.0 * math.sqrt(self.n) * spacing
        )

    def to_rows(self) -> List[List]:
        return [["trial", "L", "statistic"]] + [
            [t, int(length), float(v)] for t, (length, v) in enumerate(zip(self.lengths, self.values))
        ]


def bdj_statistic_mc(n: int, trials: int, seed: Optional[int] = None, threads: Optional[int] = None) -> BdjSample:
    """
    Sample (L_n - 2 sqrt(n)) / n^{1/6} over uniform random permutations

    Args:
        n: Permutation size
        trials: Number of permutations, at least 100
        seed: Experiment seed (default from config)
        threads: Worker threads

    Returns:
        BdjSample in trial order
    """
    if trials < MIN_TRIALS:
        raise ParameterError(f"BDJ statistics need at least {MIN_TRIALS} trials, got {trials}")
    seed = config.sampling.default_seed if seed is None else seed
    lengths = run_trials(lambda t: lis(random_permutation(n, seed, t).values.tolist()), trials, threads)
    sample = BdjSample(n=n, seed=seed, lengths=np.asarray(lengths, dtype=float))
    logger.info(f"BDJ n={n}: {trials} permutations, E[L]/sqrt(n) = {sample.mean_ratio:.4f}")
    return sample
