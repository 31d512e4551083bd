"""
Monte Carlo plumbing - ordered parallel trials and summary statistics
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np
from scipy import stats

from rmt_lab.config import config

logger = logging.getLogger(__name__)

T = TypeVar("T")


def run_trials(fn: Callable[[int], T], trials: int, threads: Optional[int] = None) -> List[T]:
    """
    Evaluate fn(trial) for trial = 0..trials-1

    Results come back in trial order whatever the thread schedule, so a run
    is reproducible as long as fn is a pure function of its trial index.

    Args:
        fn: Per-trial function
        trials: Number of trials
        threads: Worker count (default: config / RMT_LAB_THREADS)

    Returns:
        List of per-trial results
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    workers = threads or config.worker_count()
    if workers == 1 or trials == 1:
        return [fn(t) for t in range(trials)]
    logger.debug(f"Running {trials} trials on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(trials)))


def mean_and_stderr(values: Sequence[float]) -> Tuple[float, float]:
    """Sample mean and its standard error"""
    arr = np.asarray(values, dtype=float)
    if arr.size < 2:
        raise ValueError("Need at least two values for a standard error")
    return float(arr.mean()), float(arr.std(ddof=1) / math.sqrt(arr.size))


def z_score(values: Sequence[float], expected: float) -> float:
    """Distance of the sample mean from expected, in standard errors"""
    mean, stderr = mean_and_stderr(values)
    if stderr == 0.0:
        return 0.0 if mean == expected else math.inf
    return (mean - expected) / stderr


def binomial_stderr(p: float, n: int) -> float:
    """Standard error of an empirical frequency"""
    return math.sqrt(max(p * (1.0 - p), 0.0) / n)


def ks_distance(sample: Sequence[float], cdf: Callable) -> float:
    """Kolmogorov-Smirnov distance between a sample and a continuous CDF"""
    return float(stats.kstest(np.asarray(sample, dtype=float), cdf).statistic)


def lattice_ks_distance(sample: Sequence[float], cdf: Callable, spacing: float, offset: float = 0.0) -> float:
    """
    KS distance for a statistic living on the lattice offset + spacing * Z

    The empirical CDF of a lattice variable jumps by whole atoms, so it is
    compared with the continuous CDF only at the midpoints between atoms.
    """
    arr = np.sort(np.asarray(sample, dtype=float))
    lo = math.floor((arr[0] - offset) / spacing) - 1
    hi = math.ceil((arr[-1] - offset) / spacing) + 1
    mids = offset + spacing * (np.arange(lo, hi + 1) + 0.5)
    empirical = np.searchsorted(arr, mids, side="right") / arr.size
    return float(np.max(np.abs(empirical - cdf(mids))))
