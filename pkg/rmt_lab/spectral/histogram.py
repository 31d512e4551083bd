"""
Empirical spectral distribution histograms
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from rmt_lab.core.errors import ParameterError
from rmt_lab.core.monte_carlo import binomial_stderr
from rmt_lab.spectral.measures import SpectralMeasure


@dataclass
class Histogram:
    """Uniform-bin histogram; values outside the range are tallied in overflow"""

    edges: np.ndarray
    counts: np.ndarray
    overflow: int = 0
    mode: str = "density"

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.edges)

    @property
    def centers(self) -> np.ndarray:
        return (self.edges[:-1] + self.edges[1:]) / 2

    def values(self) -> np.ndarray:
        """Density (integrates to 1 over the range) or raw counts"""
        if self.mode == "count":
            return self.counts.astype(float)
        if self.total == 0:
            return np.zeros_like(self.widths)
        return self.counts / (self.total * self.widths)

    def probabilities(self) -> np.ndarray:
        return self.counts / self.total if self.total else np.zeros(len(self.counts))

    def l1_distance(self, measure: SpectralMeasure) -> float:
        """sum over bins of |empirical bin mass - measure bin mass|"""
        expected = np.array([measure.bin_mass(a, b) for a, b in zip(self.edges[:-1], self.edges[1:])])
        return float(np.sum(np.abs(self.probabilities() - expected)))

    def bin_zscores(self, measure: SpectralMeasure, min_expected: float = 5.0) -> np.ndarray:
        """
        |empirical - expected| bin frequency in binomial standard errors

        Frequencies are taken over all values, overflow included; bins whose
        expected count is below min_expected are skipped.
        """
        size = self.total + self.overflow
        scores = []
        for (a, b), count in zip(zip(self.edges[:-1], self.edges[1:]), self.counts):
            p = measure.bin_mass(a, b)
            if p * size >= min_expected:
                scores.append(abs(count / size - p) / binomial_stderr(p, size))
        return np.array(scores)

    def to_rows(self) -> List[List]:
        header = ["bin_left", "bin_right", "density" if self.mode == "density" else "count"]
        return [header] + [[a, b, v] for a, b, v in zip(self.edges[:-1], self.edges[1:], self.values())]


def esd_histogram(
    eigs: Sequence[float],
    bins: int,
    value_range: Optional[Tuple[float, float]] = None,
    mode: str = "density",
) -> Histogram:
    """
    Histogram of an eigenvalue list

    Args:
        eigs: Real eigenvalues (one or many matrices pooled)
        bins: Number of uniform bins (>= 1)
        value_range: (lo, hi) with lo < hi; defaults to the data range
        mode: "density" or "count"

    Returns:
        Histogram whose counts plus overflow partition the input
    """
    values = np.asarray(eigs, dtype=float).ravel()
    if values.size == 0:
        raise ParameterError("Cannot build a histogram of an empty eigenvalue list")
    if bins < 1:
        raise ParameterError(f"bins must be >= 1, got {bins}")
    if mode not in ("density", "count"):
        raise ParameterError(f"Unknown histogram mode: {mode}")
    if value_range is not None:
        lo, hi = float(value_range[0]), float(value_range[1])
        if not hi > lo:
            raise ParameterError(f"Histogram range must satisfy lo < hi, got ({lo}, {hi})")
    else:
        lo, hi = float(values.min()), float(values.max())
        # all values equal
        if not hi > lo:
            hi = lo + 1.0
    edges = np.linspace(lo, hi, bins + 1)
    inside = (values >= lo) & (values <= hi)
    counts, _ = np.histogram(values[inside], bins=edges)
    return Histogram(edges=edges, counts=counts, overflow=int(values.size - inside.sum()), mode=mode)
