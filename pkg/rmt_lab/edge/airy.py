"""
Airy function Ai and its derivative on [-15, 15]

Three regimes:
  |x| <= 5   Maclaurin series Ai = c1 f(x) - c2 g(x)
  x > 5      asymptotic expansion in zeta = (2/3) x^{3/2}, summed to its smallest term
  x < -5     backward integration of u'' = x u from the series values at -5
"""
import logging
import math
from functools import lru_cache
from typing import Tuple, Union

import numpy as np
from scipy import integrate

from rmt_lab.core.errors import DomainError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

AI0 = 0.355028053887817  # Ai(0) = 3^{-2/3} / Gamma(2/3)
AIP0 = -0.258819403792807  # Ai'(0) = -3^{-1/3} / Gamma(1/3)

WINDOW = 15.0
SERIES_LIMIT = 5.0


def _series(x: float) -> Tuple[float, float]:
    """Maclaurin series for (Ai, Ai')"""
    x3 = x * x * x
    f, g = 1.0, x
    fp, gp = 0.0, 1.0
    t, u = 1.0, x
    k = 0
    while True:
        t *= x3 / ((3 * k + 2) * (3 * k + 3))
        u *= x3 / ((3 * k + 3) * (3 * k + 4))
        k += 1
        f += t
        g += u
        if x != 0.0:
            fp += 3 * k * t / x
            gp += (3 * k + 1) * u / x
        if abs(t) + abs(u) < 1e-18 * (abs(f) + abs(g)) and k > 2:
            break
    return AI0 * f + AIP0 * g, AI0 * fp + AIP0 * gp


def _asymptotic(x: float) -> Tuple[float, float]:
    """Ai(x) ~ exp(-zeta)/(2 sqrt(pi) x^{1/4}) sum (-1)^k u_k zeta^-k for large positive x"""
    zeta = 2.0 / 3.0 * x**1.5
    u = 1.0
    ai_sum, aip_sum = 1.0, 1.0
    last = math.inf
    k = 0
    while True:
        k += 1
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        term = u / zeta**k
        if term >= last or term < 1e-17:
            break
        last = term
        sign = (-1) ** k
        ai_sum += sign * term
        aip_sum += sign * term * (-(6 * k + 1) / (6 * k - 1))
    prefactor = math.exp(-zeta) / (2.0 * math.sqrt(math.pi))
    return prefactor * x**-0.25 * ai_sum, -prefactor * x**0.25 * aip_sum


@lru_cache(maxsize=1)
def _negative_branch():
    y0 = list(_series(-SERIES_LIMIT))
    return integrate.solve_ivp(
        lambda x, y: [y[1], x * y[0]],
        (-SERIES_LIMIT, -WINDOW),
        y0,
        method="DOP853",
        rtol=1e-13,
        atol=1e-15,
        dense_output=True,
    )


def _scalar(x: float) -> Tuple[float, float]:
    if not -WINDOW <= x <= WINDOW:
        raise DomainError(f"Airy evaluation is limited to [-{WINDOW}, {WINDOW}], got {x}")
    if abs(x) <= SERIES_LIMIT:
        return _series(x)
    if x > 0:
        return _asymptotic(x)
    ai, aip = _negative_branch().sol(x)
    return float(ai), float(aip)


def airy_pair(x: ArrayLike) -> Tuple[ArrayLike, ArrayLike]:
    """(Ai(x), Ai'(x)), elementwise for arrays"""
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0:
        return _scalar(float(arr))
    values = np.array([_scalar(float(v)) for v in arr.ravel()]).reshape(arr.shape + (2,))
    return values[..., 0], values[..., 1]


def airy(x: ArrayLike) -> ArrayLike:
    """Ai(x) on [-15, 15], absolute error below 1e-8"""
    return airy_pair(x)[0]


def airy_prime(x: ArrayLike) -> ArrayLike:
    """Ai'(x) on [-15, 15]"""
    return airy_pair(x)[1]
