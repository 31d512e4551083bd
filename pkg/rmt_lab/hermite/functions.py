"""
Monic Hermite polynomials and Hermite functions

H_k are the monic polynomials orthogonal for the weight exp(-x^2/2):
    x H_k = H_{k+1} + k H_{k-1},   H_0 = 1, H_1 = x
The Hermite functions
    Psi_k(x) = (2 pi)^-1/4 (k!)^-1/2 exp(-x^2/4) H_k(x)
are orthonormal in L^2(R). Both are evaluated by forward recursion; the
normalized form never builds k! and carries a running log-scale so that
exp(-x^2/4) can not underflow before the polynomial part has grown.
"""
import logging
import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy import special

from rmt_lab.core.errors import ParameterError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

# Above this degree the monic recursion is run in normalized form
NAIVE_MAX_DEGREE = 150

_RESCALE = 1e150
_LOG_RESCALE = math.log(_RESCALE)


def _check_degree(k: int) -> None:
    if k < 0:
        raise ParameterError(f"Hermite degree must be >= 0, got {k}")


def _normalized_recursion(k: int, x: np.ndarray):
    """
    h_k = H_k / sqrt(k!) as mantissa and log-scale: h_k = m * exp(s)

    Uses h_{j+1} = (x h_j - sqrt(j) h_{j-1}) / sqrt(j+1).
    """
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    scale = np.zeros_like(x)
    for j in range(k):
        prev, cur = cur, (x * cur - math.sqrt(j) * prev) / math.sqrt(j + 1)
        big = np.abs(cur) > _RESCALE
        if np.any(big):
            cur = np.where(big, cur / _RESCALE, cur)
            prev = np.where(big, prev / _RESCALE, prev)
            scale = scale + big * _LOG_RESCALE
    return cur, scale


def _resolve(mantissa: np.ndarray, scale: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.sign(mantissa) * np.exp(scale + np.log(np.abs(mantissa)))


def hermite_poly(k: int, x: ArrayLike, normalized: bool = False) -> ArrayLike:
    """
    Monic Hermite polynomial H_k(x), or H_k(x)/sqrt(k!) when normalized

    Degrees above NAIVE_MAX_DEGREE switch to the normalized recursion and
    rescale at the end; a ParameterError is raised if H_k itself overflows.
    """
    _check_degree(k)
    arr = np.asarray(x, dtype=float)
    if normalized or k > NAIVE_MAX_DEGREE:
        mantissa, scale = _normalized_recursion(k, arr)
        log_factor = scale if normalized else scale + 0.5 * special.gammaln(k + 1)
        with np.errstate(over="ignore"):
            out = mantissa * np.exp(log_factor)
        if not np.all(np.isfinite(out)):
            raise ParameterError(f"H_{k} overflows at the requested points; use normalized=True")
    else:
        prev, out = np.zeros_like(arr), np.ones_like(arr)
        for j in range(k):
            prev, out = out, arr * out - j * prev
    return out if out.ndim else float(out)


def hermite_function(k: int, x: ArrayLike) -> ArrayLike:
    """Psi_k(x), orthonormal Hermite function"""
    _check_degree(k)
    arr = np.asarray(x, dtype=float)
    mantissa, scale = _normalized_recursion(k, arr)
    log_gauss = -arr * arr / 4.0 - 0.25 * math.log(2.0 * math.pi)
    out = _resolve(mantissa, scale + log_gauss)
    return out if out.ndim else float(out)


def hermite_functions_upto(n: int, x: ArrayLike) -> np.ndarray:
    """
    Rows Psi_0(x) .. Psi_n(x), shape (n + 1,) + x.shape

    One recursion pass; each row is resolved from its mantissa and
    log-scale as soon as it is produced.
    """
    _check_degree(n)
    arr = np.asarray(x, dtype=float)
    log_gauss = -arr * arr / 4.0 - 0.25 * math.log(2.0 * math.pi)
    table = np.empty((n + 1,) + arr.shape)
    prev = np.zeros_like(arr)
    cur = np.ones_like(arr)
    scale = log_gauss.copy()
    table[0] = np.exp(scale)
    for j in range(n):
        prev, cur = cur, (arr * cur - math.sqrt(j) * prev) / math.sqrt(j + 1)
        big = np.abs(cur) > _RESCALE
        if np.any(big):
            cur = np.where(big, cur / _RESCALE, cur)
            prev = np.where(big, prev / _RESCALE, prev)
            scale = scale + big * _LOG_RESCALE
        table[j + 1] = _resolve(cur, scale)
    return table


def hermite_function_derivative(k: int, x: ArrayLike) -> ArrayLike:
    """Psi_k'(x) = -(x/2) Psi_k(x) + sqrt(k) Psi_{k-1}(x)"""
    _check_degree(k)
    arr = np.asarray(x, dtype=float)
    out = -0.5 * arr * np.asarray(hermite_function(k, arr))
    if k > 0:
        out = out + math.sqrt(k) * np.asarray(hermite_function(k - 1, arr))
    return out if out.ndim else float(out)


@dataclass
class HermiteEvaluator:
    """Table evaluator for degrees 0..n_max in polynomial or function mode"""

    n_max: int
    mode: str = "function"

    def __post_init__(self):
        _check_degree(self.n_max)
        if self.mode not in ("polynomial", "function"):
            raise ParameterError(f"Unknown Hermite mode: {self.mode}")

    def evaluate(self, k: int, x: ArrayLike) -> ArrayLike:
        if k > self.n_max:
            raise ParameterError(f"Degree {k} exceeds n_max = {self.n_max}")
        if self.mode == "function":
            return hermite_function(k, x)
        return hermite_poly(k, x)

    def table(self, x: ArrayLike) -> np.ndarray:
        if self.mode == "function":
            return hermite_functions_upto(self.n_max, x)
        return np.stack([np.asarray(hermite_poly(k, x)) for k in range(self.n_max + 1)])

    def recursion_residual(self, x: ArrayLike) -> float:
        """
        Largest relative defect of the three-term recursion over the table

        Polynomial mode checks x H_k = H_{k+1} + k H_{k-1}; function mode
        checks x Psi_k = sqrt(k+1) Psi_{k+1} + sqrt(k) Psi_{k-1}.
        """
        arr = np.asarray(x, dtype=float)
        rows = self.table(arr)
        worst = 0.0
        for k in range(1, self.n_max):
            if self.mode == "function":
                lhs = arr * rows[k]
                rhs = math.sqrt(k + 1) * rows[k + 1] + math.sqrt(k) * rows[k - 1]
            else:
                lhs = arr * rows[k]
                rhs = rows[k + 1] + k * rows[k - 1]
            scale = np.maximum.reduce([np.abs(lhs), np.abs(rhs), np.abs(rows[k + 1]), np.full_like(arr, 1e-300)])
            worst = max(worst, float(np.max(np.abs(lhs - rhs) / scale)))
        return worst
