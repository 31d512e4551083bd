"""
Edge-scaled largest eigenvalue samples and rescaled Hermite functions
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from rmt_lab.core.errors import ParameterError
from rmt_lab.core.monte_carlo import ks_distance, mean_and_stderr
from rmt_lab.edge.tracy_widom import F2Table, f2_cdf
from rmt_lab.ensembles.ensemble_base import EnsembleSpec
from rmt_lab.harer_zagier.bounds import largest_eigenvalues
from rmt_lab.hermite.functions import hermite_function

logger = logging.getLogger(__name__)

MIN_TRIALS = 100
MAX_RESCALED_DEGREE = 10**4


@dataclass
class EdgeSample:
    """Trial-ordered values of N^{2/3}(lambda_max - 2)"""

    spec: EnsembleSpec
    values: np.ndarray

    @property
    def mean(self) -> float:
        return mean_and_stderr(self.values)[0]

    def ks_distance(self, table: F2Table) -> float:
        return ks_distance(self.values, lambda t: f2_cdf(table, t))

    def histogram_rows(self, bins: int = 60, value_range=(-6.0, 4.0)):
        counts, edges = np.histogram(self.values, bins=bins, range=value_range)
        density = counts / (self.values.size * np.diff(edges))
        return [["bin_left", "bin_right", "density"]] + [
            [float(a), float(b), float(d)] for a, b, d in zip(edges[:-1], edges[1:], density)
        ]


def edge_statistic_mc(spec: EnsembleSpec, trials: int, threads: Optional[int] = None) -> EdgeSample:
    """
    Sample N^{2/3}(lambda_max - 2) over independent trials

    Args:
        spec: Normalized Hermitian ensemble (GUE for the F2 comparison;
            other Wigner matrices for universality runs)
        trials: Number of matrices, at least 100
        threads: Worker threads

    Returns:
        EdgeSample, reproducible from spec.seed
    """
    if trials < MIN_TRIALS:
        raise ParameterError(f"Edge statistics need at least {MIN_TRIALS} trials, got {trials}")
    if not spec.is_hermitian:
        raise ParameterError(f"Edge statistics need a Hermitian ensemble, got {spec.kind.value}")
    top = largest_eigenvalues(spec, trials, threads)
    values = spec.n ** (2.0 / 3.0) * (top - 2.0)
    logger.info(f"Edge statistic for {spec.kind.value}({spec.n}): {trials} trials, mean {values.mean():.4f}")
    return EdgeSample(spec=spec, values=values)


def rescaled_hermite(n: int, x):
    """N^{1/12} Psi_N(2 sqrt(N) + x N^{-1/6}), which tends to Ai(x)"""
    if not 1 <= n <= MAX_RESCALED_DEGREE:
        raise ParameterError(f"N must lie in [1, {MAX_RESCALED_DEGREE}], got {n}")
    arr = np.asarray(x, dtype=float)
    out = n ** (1.0 / 12.0) * np.asarray(hermite_function(n, 2.0 * math.sqrt(n) + arr * n ** (-1.0 / 6.0)))
    return out if out.ndim else float(out)
