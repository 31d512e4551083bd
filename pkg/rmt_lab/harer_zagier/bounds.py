"""
Moment and largest-eigenvalue tail bounds, with their Monte Carlo counterparts
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from rmt_lab.combinatorics.catalan import catalan
from rmt_lab.core.errors import ParameterError
from rmt_lab.core.monte_carlo import binomial_stderr, run_trials
from rmt_lab.ensembles.ensemble_base import EnsembleKind, EnsembleSpec
from rmt_lab.ensembles.samplers import sample
from rmt_lab.spectral.eigensolvers import hermitian_eigenvalues

logger = logging.getLogger(__name__)


def _check_positive(**values) -> None:
    for name, value in values.items():
        if not value > 0:
            raise ParameterError(f"{name} must be positive, got {value}")


def moment_upper_bound(k: int, n: int) -> float:
    """E[tr A^{2k}] <= C_k exp(k^3 / (2N^2))"""
    _check_positive(k=k, n=n)
    return catalan(k) * math.exp(k**3 / (2.0 * n * n))


def lambda_max_tail(eps: float, k: int, n: int) -> float:
    """P(lambda_max >= 2 + eps) <= N (2+eps)^{-2k} 4^k k^{-3/2} exp(k^3/(2N^2))"""
    _check_positive(eps=eps, k=k, n=n)
    log_bound = (
        math.log(n) - 2 * k * math.log(2.0 + eps) + k * math.log(4.0) - 1.5 * math.log(k) + k**3 / (2.0 * n * n)
    )
    return math.exp(log_bound)


def lambda_max_tail_optimized(t: float, n: Optional[int] = None) -> float:
    """
    Tail bound at 2 + t N^{-2/3}

    For a given N the finite bound is taken at k = floor(N^{2/3} sqrt(t))
    (at least 1) and eps = t N^{-2/3}; with n=None the N -> infinity
    limit t^{-3/4} exp(-t^{3/2}/2) is returned.
    """
    _check_positive(t=t)
    if n is None:
        return t**-0.75 * math.exp(-0.5 * t**1.5)
    _check_positive(n=n)
    scale = n ** (2.0 / 3.0)
    k = max(1, math.floor(scale * math.sqrt(t)))
    return lambda_max_tail(t / scale, k, n)


def largest_eigenvalues(spec: EnsembleSpec, trials: int, threads: Optional[int] = None) -> np.ndarray:
    """lambda_max of each trial's matrix, in trial order"""
    return np.array(run_trials(lambda t: hermitian_eigenvalues(sample(spec, t))[-1], trials, threads))


@dataclass
class TailFrequency:
    """Empirical P(lambda_max >= 2 + t N^{-2/3}) next to its bound"""

    t: float
    threshold: float
    frequency: float
    stderr: float
    bound: float
    limit_bound: float

    @property
    def within_bound(self) -> bool:
        return self.frequency <= self.bound + 3.0 * self.stderr

    def to_row(self) -> List:
        return [self.t, self.threshold, self.frequency, self.stderr, self.bound, self.limit_bound]


TAIL_HEADER = ["t", "threshold", "frequency", "stderr", "bound", "limit_bound"]


def tail_frequencies(
    n: int, ts: Sequence[float], trials: int, seed: int, threads: Optional[int] = None
) -> List[TailFrequency]:
    """Monte Carlo tail frequencies of lambda_max for normalized GUE(N)"""
    spec = EnsembleSpec(EnsembleKind.GUE, n, seed=seed)
    top = largest_eigenvalues(spec, trials, threads)
    out = []
    for t in ts:
        threshold = 2.0 + t * n ** (-2.0 / 3.0)
        freq = float(np.mean(top >= threshold))
        out.append(
            TailFrequency(
                t=float(t),
                threshold=threshold,
                frequency=freq,
                stderr=binomial_stderr(freq, trials),
                bound=lambda_max_tail_optimized(t, n),
                limit_bound=lambda_max_tail_optimized(t),
            )
        )
    return out


def lambda_max_trend(
    sizes: Sequence[int], trials: int, seed: int, level: float = 2.2, threads: Optional[int] = None
) -> Dict[int, Dict[str, float]]:
    """Mean of lambda_max and P(lambda_max >= level) for each N"""
    trend = {}
    for n in sizes:
        top = largest_eigenvalues(EnsembleSpec(EnsembleKind.GUE, n, seed=seed), trials, threads)
        trend[n] = {"mean": float(top.mean()), "exceed": float(np.mean(top >= level))}
        logger.info(f"N={n}: mean lambda_max {trend[n]['mean']:.4f}, P(>= {level}) {trend[n]['exceed']:.4f}")
    return trend
