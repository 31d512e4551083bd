"""
Discretized Dyson random walks and their non-interacting comparison
"""
import logging
from typing import List

import numpy as np

from rmt_lab.core.errors import ParameterError
from rmt_lab.ensembles.ensemble_base import EnsembleKind, EnsembleSpec, MatrixSample
from rmt_lab.ensembles.samplers import draw_matrix
from rmt_lab.utils.rng import trial_rng

logger = logging.getLogger(__name__)


def _check(steps: int, increment: float) -> None:
    if steps < 1:
        raise ParameterError(f"Number of steps K must be >= 1, got {steps}")
    if not increment > 0:
        raise ParameterError(f"Increment must be positive, got {increment}")


def sample_dyson_walk(spec: EnsembleSpec, steps: int, increment: float, trial: int) -> List[MatrixSample]:
    """
    Partial sums A(k) = sum_{i<=k} increment * A^(i) of independent samples

    Step i draws from its own stream keyed by (seed, trial, i), so the walk
    is reproducible and its increments are independent.

    Args:
        spec: GUE or GOE specification
        steps: Number of steps K >= 1
        increment: Time increment (> 0)
        trial: Walk index

    Returns:
        K matrix samples, each exactly self-adjoint
    """
    if spec.kind not in (EnsembleKind.GUE, EnsembleKind.GOE):
        raise ParameterError(f"Dyson walks are defined for GUE/GOE, not {spec.kind.value}")
    _check(steps, increment)
    logger.debug(f"Dyson walk: N={spec.n}, K={steps}, increment={increment}, trial={trial}")

    walk: List[MatrixSample] = []
    current = None
    for step in range(steps):
        delta = increment * draw_matrix(spec, trial_rng(spec.seed, trial, step))
        current = delta if current is None else current + delta
        walk.append(MatrixSample(entries=current, spec=spec, trial=trial))
    return walk


def sample_independent_walks(n: int, steps: int, increment: float, seed: int, trial: int) -> np.ndarray:
    """
    N independent scalar walks sum_{i<=k} increment * x^(i), x standard Gaussian

    Returns:
        Array of shape (K, N); row k holds the positions after step k+1
    """
    if n < 1:
        raise ParameterError(f"Number of walks must be >= 1, got {n}")
    _check(steps, increment)
    rng = trial_rng(seed, trial)
    return np.cumsum(increment * rng.standard_normal((steps, n)), axis=0)
