"""
Hastings-McLeod solution of Painleve II

    q'' = x q + 2 q^3,   q(x) ~ Ai(x) as x -> +infinity

Integrated from a right boundary x0 towards -infinity with DOP853. Two
running integrals ride along so that F2 needs no second quadrature:
    A(x) = int_x^{x0} q(s)^2 ds,   B(x) = int_x^{x0} s q(s)^2 ds
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
from scipy import integrate

from rmt_lab.config import config
from rmt_lab.core.errors import ConvergenceError, ParameterError
from rmt_lab.edge.airy import airy_pair

logger = logging.getLogger(__name__)

HALVING_TOLERANCE = 1e-6


@dataclass
class PainleveSolution:
    """q, q' and the tail integrals on an ascending grid"""

    x: np.ndarray
    q: np.ndarray
    qp: np.ndarray
    tail_mass: np.ndarray
    tail_moment: np.ndarray
    step: float
    x0: float
    metadata: Dict = field(default_factory=dict)

    def to_rows(self) -> List[List]:
        return [["x", "q"]] + [[float(a), float(b)] for a, b in zip(self.x, self.q)]

    def interpolate_q(self, points) -> np.ndarray:
        return np.interp(points, self.x, self.q)


def _rhs(x, y):
    q, qp, _, _ = y
    q2 = q * q
    return [qp, x * q + 2.0 * q2 * q, -q2, -x * q2]


def _integrate(x0: float, x_min: float, step: float) -> PainleveSolution:
    count = int(round((x0 - x_min) / step))
    grid = x0 - step * np.arange(count + 1)
    ai, aip = airy_pair(x0)
    result = integrate.solve_ivp(
        _rhs,
        (x0, grid[-1]),
        [ai, aip, 0.0, 0.0],
        method="DOP853",
        t_eval=grid,
        rtol=1e-12,
        atol=1e-20,
        max_step=step,
    )
    if not result.success:
        raise ConvergenceError(f"Painleve II integration failed: {result.message}", {"x0": x0, "step": step})
    q, qp, a, b = (row[::-1] for row in result.y)
    return PainleveSolution(
        x=result.t[::-1].copy(),
        q=q.copy(),
        qp=qp.copy(),
        tail_mass=a.copy(),
        tail_moment=b.copy(),
        step=step,
        x0=x0,
        metadata={"nfev": int(result.nfev), "method": "DOP853"},
    )


def painleve2_solve(
    x0: Optional[float] = None,
    x_min: Optional[float] = None,
    step: Optional[float] = None,
    verify: bool = False,
) -> PainleveSolution:
    """
    Solve Painleve II backwards from Airy data at x0

    Args:
        x0: Right boundary, in [8, 15] (default from config)
        x_min: Left end of the grid, <= -6
        step: Grid spacing and maximal solver step
        verify: Also solve with step/2 and require sup|q - q_half| <= 1e-6

    Returns:
        PainleveSolution on the ascending grid x_min..x0
    """
    x0 = config.numerics.painleve_boundary if x0 is None else x0
    x_min = config.numerics.painleve_left if x_min is None else x_min
    step = config.numerics.painleve_step if step is None else step
    if not 8.0 <= x0 <= 15.0:
        raise ParameterError(f"Right boundary must lie in [8, 15], got {x0}")
    if x_min > -6.0:
        raise ParameterError(f"Left end must be <= -6, got {x_min}")
    if not 0.0 < step <= 0.1:
        raise ParameterError(f"Step must lie in (0, 0.1], got {step}")

    solution = _integrate(x0, x_min, step)
    if np.any(solution.q <= 0.0):
        bad = float(solution.x[np.argmax(solution.q <= 0.0)])
        raise ConvergenceError("Painleve II solution lost positivity", {"x": bad, "step": step})

    if verify:
        finer = _integrate(x0, x_min, step / 2.0)
        diff = float(np.max(np.abs(finer.q[::2] - solution.q)))
        solution.metadata["halving_error"] = diff
        logger.debug(f"Painleve step-halving difference {diff:.3e}")
        if diff > HALVING_TOLERANCE:
            raise ConvergenceError(
                "Painleve II solution did not settle under step halving",
                {"step": step, "sup_difference": diff, "tolerance": HALVING_TOLERANCE},
            )
    return solution
