"""
Resolvent traces: variance bound, self-consistent equation and perturbation checks
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from rmt_lab.core.errors import DomainError, ParameterError
from rmt_lab.core.monte_carlo import run_trials
from rmt_lab.ensembles.ensemble_base import EnsembleSpec
from rmt_lab.ensembles.samplers import sample
from rmt_lab.spectral.eigensolvers import hermitian_eigenvalues

logger = logging.getLogger(__name__)


def resolvent_trace(a: np.ndarray, z: complex) -> complex:
    """tr[(A - z)^-1] = (1/N) Tr, via the eigenvalues of a Hermitian A"""
    eigs = hermitian_eigenvalues(a)
    return complex(np.mean(1.0 / (eigs - complex(z))))


def resolvent(a: np.ndarray, z: complex) -> np.ndarray:
    return np.linalg.inv(a - complex(z) * np.eye(a.shape[0]))


@dataclass
class ResolventStats:
    """Monte Carlo statistics of tr R_A(z)"""

    n: int
    z: complex
    trials: int
    mean: complex
    variance: float
    bound: float
    residual: float

    def to_dict(self):
        return {
            "n": self.n,
            "z": [self.z.real, self.z.imag],
            "trials": self.trials,
            "mean": [self.mean.real, self.mean.imag],
            "variance": self.variance,
            "bound": self.bound,
            "residual": self.residual,
        }


def resolvent_trace_variance(
    spec: EnsembleSpec, z: complex, trials: int, threads: Optional[int] = None
) -> ResolventStats:
    """
    Empirical variance of tr R_A(z) next to the bound 32 / (N (Im z)^4)

    Also reports |S^2 + zS + 1| for the Monte Carlo mean S, the residual
    of the semicircle's self-consistent equation.

    Args:
        spec: Ensemble (GOE in the classical statement)
        z: Point with Im z > 0
        trials: Number of matrices (>= 100)

    Returns:
        ResolventStats
    """
    z = complex(z)
    if not z.imag > 0:
        raise DomainError(f"Resolvent statistics need Im z > 0, got {z}")
    if trials < 100:
        raise ParameterError(f"Need at least 100 trials, got {trials}")
    values = np.array(run_trials(lambda t: resolvent_trace(sample(spec, t).operator(), z), trials, threads))
    mean = complex(values.mean())
    variance = float(np.sum(np.abs(values - mean) ** 2) / (trials - 1))
    bound = 32.0 / (spec.n * z.imag**4)
    residual = float(abs(mean * mean + z * mean + 1.0))
    logger.info(f"N={spec.n} z={z}: Var(tr R)={variance:.3e} (bound {bound:.3e}), residual={residual:.3e}")
    return ResolventStats(spec.n, z, trials, mean, variance, bound, residual)


def resolvent_perturbation_gap(x: np.ndarray, y: np.ndarray, z: complex):
    """
    |tr R_X(z) - tr R_{X+Y}(z)| and its bound (Im z)^-2 sqrt(tr Y^2)

    The bound follows from R_X - R_{X+Y} = R_X Y R_{X+Y} and the norm bound
    ||R(z)|| <= 1 / Im z.

    Returns:
        (gap, bound)
    """
    z = complex(z)
    if not z.imag > 0:
        raise DomainError(f"Resolvent needs Im z > 0, got {z}")
    gap = abs(resolvent_trace(x, z) - resolvent_trace(x + y, z))
    tr_y2 = float(np.real(np.trace(y @ y))) / y.shape[0]
    return gap, np.sqrt(tr_y2) / z.imag**2


def resolvent_entry_derivative(a: np.ndarray, z: complex, i: int, j: int, l: int, k: int) -> complex:
    """
    d[R_A(z)]_lk / dx_ij for a real symmetric A with x_ij = x_ji

    -R_li R_ik on the diagonal, -R_li R_jk - R_lj R_ik off it.
    """
    r = resolvent(a, z)
    if i == j:
        return complex(-r[l, i] * r[i, k])
    return complex(-r[l, i] * r[j, k] - r[l, j] * r[i, k])
