"""
Tracy-Widom F2 distribution from the Painleve II solution

    F2(t) = exp(-int_t^inf (x - t) q(x)^2 dx) = exp(-(B(t) - t A(t)))

with A, B the tail integrals carried by the Painleve solver. The table is
interpolated monotonically (PCHIP) between grid points.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Union

import numpy as np
from scipy import integrate, interpolate, optimize, special

from rmt_lab.core.errors import ParameterError
from rmt_lab.edge.airy import airy_pair
from rmt_lab.edge.painleve import PainleveSolution, painleve2_solve

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

T_MIN = -6.0
T_MAX = 5.0
T_STEP = 0.01


@dataclass
class F2Table:
    """F2 on an ascending t-grid plus the underlying Painleve solution"""

    t: np.ndarray
    values: np.ndarray
    solution: PainleveSolution

    def __post_init__(self):
        self._cdf = interpolate.PchipInterpolator(self.t, self.values, extrapolate=False)

    @property
    def step(self) -> float:
        return self.solution.step

    @property
    def x0(self) -> float:
        return self.solution.x0

    def covers(self, t: ArrayLike) -> bool:
        arr = np.asarray(t, dtype=float)
        return bool(np.all((arr >= self.t[0]) & (arr <= self.t[-1])))

    def to_rows(self) -> List[List]:
        return [["t", "F2"]] + [[float(a), float(b)] for a, b in zip(self.t, self.values)]


def build_f2_table(
    t_min: float = T_MIN,
    t_max: float = T_MAX,
    t_step: float = T_STEP,
    step: Optional[float] = None,
    x0: Optional[float] = None,
) -> F2Table:
    """Tabulate F2 on [t_min, t_max]"""
    if not t_min < t_max:
        raise ParameterError(f"Empty t-range [{t_min}, {t_max}]")
    solution = painleve2_solve(x0=x0, x_min=min(t_min, -6.0), step=step)
    if t_max > solution.x0:
        raise ParameterError(f"t_max={t_max} lies beyond the solver boundary {solution.x0}")
    t = np.round(np.arange(t_min, t_max + t_step / 2, t_step), 10)
    mass = interpolate.CubicSpline(solution.x, solution.tail_mass)(t)
    moment = interpolate.CubicSpline(solution.x, solution.tail_moment)(t)
    values = np.exp(-(moment - t * mass))
    # Monotone by construction; enforce it against rounding in the far tails
    values = np.clip(np.maximum.accumulate(values), 0.0, 1.0)
    logger.info(f"F2 table on [{t_min}, {t_max}] with solver step {solution.step}")
    return F2Table(t=t, values=values, solution=solution)


@lru_cache(maxsize=4)
def default_f2_table(step: Optional[float] = None) -> F2Table:
    return build_f2_table(step=step)


def f2_cdf(table: F2Table, t: ArrayLike) -> ArrayLike:
    """
    F2(t) by monotone interpolation

    Points outside the table are clamped to its ends and a warning is
    logged; use table.covers(t) to test for that beforehand.
    """
    arr = np.asarray(t, dtype=float)
    if not table.covers(arr):
        logger.warning(f"F2 requested outside [{table.t[0]}, {table.t[-1]}]; clamping")
    out = table._cdf(np.clip(arr, table.t[0], table.t[-1]))
    return out if out.ndim else float(out)


def f2_density(table: F2Table, t: ArrayLike) -> ArrayLike:
    arr = np.clip(np.asarray(t, dtype=float), table.t[0], table.t[-1])
    out = table._cdf.derivative()(arr)
    return out if out.ndim else float(out)


def f2_quantile(table: F2Table, p: float) -> float:
    if not table.values[0] < p < table.values[-1]:
        raise ParameterError(f"Quantile level {p} is outside the tabulated range")
    return float(optimize.brentq(lambda s: table._cdf(s) - p, table.t[0], table.t[-1], xtol=1e-12))


def f2_moments(table: F2Table):
    """(mean, variance) from the tabulated density"""
    density = f2_density(table, table.t)
    mean = float(integrate.trapezoid(table.t * density, table.t))
    second = float(integrate.trapezoid(table.t**2 * density, table.t))
    return mean, second - mean * mean


def tail_bound(t: float) -> float:
    """t^{-3/4} exp(-t^{3/2}/2), the limiting right-tail bound"""
    return t**-0.75 * math.exp(-0.5 * t**1.5)


def airy_kernel(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """A(x,y) = (Ai(x)Ai'(y) - Ai'(x)Ai(y))/(x - y), Ai'(x)^2 - x Ai(x)^2 on the diagonal"""
    ax, apx = airy_pair(x)
    ay, apy = airy_pair(y)
    diff = x - y
    diagonal = np.abs(diff) < 1e-12
    with np.errstate(divide="ignore", invalid="ignore"):
        off = (ax * apy - apx * ay) / diff
    return np.where(diagonal, apx * apx - x * ax * ax, off)


def fredholm_f2(t: float, order: Optional[int] = 3, nodes: int = 40, length: float = 12.0) -> float:
    """
    F2(t) as the Fredholm determinant of the Airy kernel on [t, t + length]

    With order=r the expansion sum_{j<=r} (-1)^j/j! int det(A(x_a, x_b)) is
    truncated (each term a Gauss-Legendre tensor sum); order=None takes the
    full discretized determinant det(I - W^{1/2} A W^{1/2}).
    """
    if t + length > 15.0:
        raise ParameterError(f"Quadrature range [t, t+{length}] leaves the Airy window")
    z, w = special.roots_legendre(nodes)
    x = t + (z + 1.0) * length / 2.0
    w = w * length / 2.0
    kernel = airy_kernel(x[:, None], x[None, :])
    root = np.sqrt(w)
    weighted = root[:, None] * kernel * root[None, :]
    if order is None:
        return float(np.linalg.det(np.eye(nodes) - weighted))
    if order < 0 or order > 3:
        raise ParameterError(f"Truncation order must be in 0..3, got {order}")
    # j-th term of the series equals e_j of the eigenvalues of the weighted kernel
    eig = np.linalg.eigvalsh((weighted + weighted.T) / 2.0)
    p1, p2, p3 = (float(np.sum(eig**k)) for k in (1, 2, 3))
    elementary = [1.0, p1, (p1 * p1 - p2) / 2.0, (p1**3 - 3.0 * p1 * p2 + 2.0 * p3) / 6.0]
    return float(sum((-1) ** j * elementary[j] for j in range(order + 1)))
