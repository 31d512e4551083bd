"""
Stieltjes transforms and their numerical inversion
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

import numpy as np

from rmt_lab.config import config
from rmt_lab.core.errors import DomainError, ParameterError
from rmt_lab.spectral.measures import SpectralMeasure

logger = logging.getLogger(__name__)


def _require_upper(z: complex) -> complex:
    z = complex(z)
    if not z.imag > 0:
        raise DomainError(f"Stieltjes transform needs Im z > 0, got z = {z}")
    return z


def semicircle_stieltjes(z: complex) -> complex:
    """
    Root of S^2 + zS + 1 = 0 in the upper half-plane

    Both roots are formed without cancellation (the small one as the
    reciprocal of the large one, their product being 1) and the one with
    positive imaginary part is returned.
    """
    z = _require_upper(z)
    root = np.sqrt(z * z - 4.0)
    big = (-z - root) / 2.0 if abs(-z - root) >= abs(-z + root) else (-z + root) / 2.0
    small = 1.0 / big
    return complex(big if big.imag > 0 else small)


def stieltjes(measure: SpectralMeasure, z: complex) -> complex:
    """
    S(z) = int (t - z)^-1 dmu(t) for Im z > 0

    Args:
        measure: Any spectral measure
        z: Point of the upper half-plane

    Returns:
        Complex value of the transform
    """
    return measure.stieltjes(_require_upper(z))


@dataclass
class InversionResult:
    """Density recovered from a Stieltjes transform on a grid"""

    x: np.ndarray
    density: np.ndarray
    eps_schedule: List[float]
    # One row per epsilon: (1/pi) Im S(x + i eps)
    levels: np.ndarray
    flagged: bool = False
    flagged_points: List[float] = field(default_factory=list)

    def to_rows(self) -> List[List[float]]:
        return [["x", "density"]] + [[float(a), float(b)] for a, b in zip(self.x, self.density)]


def stieltjes_invert(
    transform: Callable[[complex], complex],
    a: float,
    b: float,
    eps_schedule: Optional[Sequence[float]] = None,
    grid: int = 101,
    tolerance: float = 1e-4,
) -> InversionResult:
    """
    Recover a density from its Stieltjes transform

    Evaluates (1/pi) Im S(x + i eps) along a decreasing eps schedule and
    extrapolates linearly in eps from the two smallest levels. A point is
    flagged when the differences between successive levels grow instead
    of shrinking, or when the extrapolated value is clearly negative;
    small negative values are clipped to zero.

    Args:
        transform: Function z -> S(z) on the upper half-plane
        a, b: Interval of interest
        eps_schedule: Decreasing positive values (default from config)
        grid: Number of grid points
        tolerance: Size below which oscillation and negativity are ignored

    Returns:
        InversionResult
    """
    schedule = sorted(eps_schedule or config.numerics.stieltjes_eps_schedule, reverse=True)
    if len(schedule) < 2 or schedule[-1] <= 0:
        raise ParameterError("Inversion needs at least two positive epsilon levels")
    if grid < 1 or not b >= a:
        raise ParameterError("Inversion needs grid >= 1 and a <= b")

    xs = np.linspace(a, b, grid)
    levels = np.array([[transform(complex(x, eps)).imag / math.pi for x in xs] for eps in schedule])
    e1, e2 = schedule[-2], schedule[-1]
    f1, f2 = levels[-2], levels[-1]
    density = f2 - e2 * (f1 - f2) / (e1 - e2)

    flagged_points = []
    diffs = np.abs(np.diff(levels, axis=0))
    for j, x in enumerate(xs):
        oscillating = diffs.shape[0] >= 2 and diffs[-1, j] > diffs[-2, j] and diffs[-1, j] > tolerance
        if oscillating or density[j] < -tolerance:
            flagged_points.append(float(x))
    density = np.where(density < 0.0, 0.0, density)
    if flagged_points:
        logger.warning(f"Stieltjes inversion did not settle at {len(flagged_points)} grid points")
    return InversionResult(
        x=xs,
        density=density,
        eps_schedule=list(schedule),
        levels=levels,
        flagged=bool(flagged_points),
        flagged_points=flagged_points,
    )


def stieltjes_growth(measure: SpectralMeasure, x: float, ys: Sequence[float]) -> float:
    """max_y y |S(x + iy)|; never exceeds the total mass"""
    return max(y * abs(stieltjes(measure, complex(x, y))) for y in ys)


def moment_series(moments: Sequence[float], z: complex) -> complex:
    """Expansion S(z) = -sum_n m_n / z^(n+1), valid for |z| beyond the support"""
    z = complex(z)
    return -sum(m / z ** (n + 1) for n, m in enumerate(moments))
