"""
Non-intersection diagnostics for Dyson walks
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from rmt_lab.core.errors import ParameterError
from rmt_lab.core.monte_carlo import run_trials
from rmt_lab.ensembles.dyson_walk import sample_dyson_walk
from rmt_lab.ensembles.ensemble_base import EnsembleSpec, MatrixSample
from rmt_lab.spectral.eigensolvers import hermitian_eigenvalues

logger = logging.getLogger(__name__)


@dataclass
class CrossingReport:
    """Spacing statistics of an eigenvalue trajectory tracked in sorted order"""

    steps: int
    collisions: int
    min_spacing: float
    spacing_by_step: List[float]

    def to_dict(self):
        return {"steps": self.steps, "collisions": self.collisions, "min_spacing": self.min_spacing}


def walk_eigenvalues(walk: Sequence[MatrixSample]) -> np.ndarray:
    """(K, N) array of ascending eigenvalues, one row per step"""
    if not walk:
        raise ParameterError("Empty walk")
    return np.array([hermitian_eigenvalues(m) for m in walk])


def dyson_crossing_check(walk: Sequence[MatrixSample]) -> CrossingReport:
    """
    Smallest gap lambda_{i+1}(k) - lambda_i(k) along the walk

    A collision is a step at which two eigenvalues coincide; tracking by
    sorted order would need a swap there. N = 1 has no gaps.
    """
    eigs = walk_eigenvalues(walk)
    if eigs.shape[1] < 2:
        return CrossingReport(steps=len(eigs), collisions=0, min_spacing=math.inf, spacing_by_step=[math.inf] * len(eigs))
    gaps = np.diff(eigs, axis=1).min(axis=1)
    collisions = int(np.sum(gaps <= 0.0))
    if collisions:
        logger.warning(f"{collisions} step(s) with coinciding eigenvalues")
    return CrossingReport(
        steps=len(eigs),
        collisions=collisions,
        min_spacing=float(gaps.min()),
        spacing_by_step=[float(g) for g in gaps],
    )


def trajectory_rows(walk: Sequence[MatrixSample]) -> List[List]:
    """CSV rows step,lambda_1,...,lambda_N (steps counted from 1)"""
    eigs = walk_eigenvalues(walk)
    header = ["step"] + [f"lambda_{i + 1}" for i in range(eigs.shape[1])]
    return [header] + [[k + 1] + [float(v) for v in row] for k, row in enumerate(eigs)]


def mean_min_spacing(
    spec: EnsembleSpec, steps: int, increment: float, walks: int, threads: Optional[int] = None
) -> float:
    """Average over independent walks of the smallest gap seen along each walk"""
    reports = run_trials(
        lambda t: dyson_crossing_check(sample_dyson_walk(spec, steps, increment, t)).min_spacing, walks, threads
    )
    return float(np.mean(reports))
