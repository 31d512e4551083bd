"""
Hermite and Ginibre kernels, exact averaged eigenvalue densities
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Union

import numpy as np
from scipy import integrate, special

from rmt_lab.config import config
from rmt_lab.core.errors import ParameterError
from rmt_lab.hermite.functions import hermite_functions_upto

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

# Below this separation the Christoffel-Darboux quotient is replaced by its limit
CONFLUENT_THRESHOLD = 1e-6


def _check_n(n: int) -> None:
    if n < 1:
        raise ParameterError(f"N must be >= 1, got {n}")


def _scalar_or_array(out: np.ndarray):
    return out if out.ndim else float(out)


def hermite_kernel(n: int, x: ArrayLike, y: ArrayLike, method: str = "christoffel-darboux") -> ArrayLike:
    """
    K_N(x, y) = sum_{k<N} Psi_k(x) Psi_k(y)

    Args:
        n: Number of terms N
        x, y: Points (broadcast against each other)
        method: "sum" for the direct sum, "christoffel-darboux" for
            sqrt(N) (Psi_N(x) Psi_{N-1}(y) - Psi_{N-1}(x) Psi_N(y)) / (x - y)
            with the confluent limit
            N Psi_{N-1}^2 - sqrt(N(N-1)) Psi_N Psi_{N-2}
            at the midpoint when |x - y| < CONFLUENT_THRESHOLD

    Returns:
        Kernel values; symmetric in (x, y) in both methods
    """
    _check_n(n)
    xs, ys = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    if method == "sum":
        return _scalar_or_array(np.sum(hermite_functions_upto(n - 1, xs) * hermite_functions_upto(n - 1, ys), axis=0))
    if method != "christoffel-darboux":
        raise ParameterError(f"Unknown kernel method: {method}")

    px = hermite_functions_upto(n, xs)
    py = hermite_functions_upto(n, ys)
    diff = xs - ys
    confluent = np.abs(diff) < CONFLUENT_THRESHOLD
    with np.errstate(divide="ignore", invalid="ignore"):
        off = math.sqrt(n) * (px[n] * py[n - 1] - px[n - 1] * py[n]) / diff

    pm = hermite_functions_upto(n, (xs + ys) / 2.0)
    below = pm[n - 2] if n >= 2 else np.zeros_like(pm[0])
    on = n * pm[n - 1] ** 2 - math.sqrt(n * (n - 1)) * pm[n] * below
    return _scalar_or_array(np.where(confluent, on, off))


def gue_density_exact(n: int, x: ArrayLike, normalized: bool = True) -> ArrayLike:
    """
    Averaged eigenvalue density of GUE(N)

    Unnormalized (entries of variance 1): p_N(mu) = K_N(mu, mu) / N.
    Normalized (entries of variance 1/N): q_N(lam) = sqrt(N) p_N(sqrt(N) lam),
    whose support approaches [-2, 2].
    """
    _check_n(n)
    arr = np.asarray(x, dtype=float)
    mu = arr * math.sqrt(n) if normalized else arr
    density = np.sum(hermite_functions_upto(n - 1, mu) ** 2, axis=0) / n
    if normalized:
        density = density * math.sqrt(n)
    return _scalar_or_array(density)


def ginibre_density_exact(n: int, z: Union[complex, np.ndarray], normalized: bool = True) -> ArrayLike:
    """
    Averaged eigenvalue density of the complex Ginibre ensemble

    p_N(z) = (1/(N pi)) exp(-|z|^2) sum_{k<N} |z|^{2k}/k!, the partial
    exponential sum being the regularized upper incomplete gamma Q(N, |z|^2).
    Normalized: q_N(z) = N p_N(sqrt(N) z) = Q(N, N|z|^2) / pi.
    """
    _check_n(n)
    r2 = np.abs(np.asarray(z, dtype=complex)) ** 2
    if normalized:
        out = special.gammaincc(n, n * r2) / math.pi
    else:
        out = special.gammaincc(n, r2) / (n * math.pi)
    return _scalar_or_array(np.asarray(out, dtype=float))


def ginibre_kernel(n: int, z: complex, w: complex) -> complex:
    """K_N(z, w) = (1/pi) exp(-(|z|^2 + |w|^2)/2) sum_{k<N} (z conj(w))^k / k!"""
    _check_n(n)
    z, w = complex(z), complex(w)
    u = z * w.conjugate()
    term, total = 1.0 + 0j, 1.0 + 0j
    for k in range(1, n):
        term *= u / k
        total += term
    return complex(math.exp(-(abs(z) ** 2 + abs(w) ** 2) / 2.0) * total / math.pi)


@dataclass
class KernelDensity:
    """Exact averaged density of GUE(N) ("gue") or Ginibre(N) ("ginibre")"""

    kind: str
    n: int
    normalized: bool = True

    def __post_init__(self):
        _check_n(self.n)
        if self.kind not in ("gue", "ginibre"):
            raise ParameterError(f"Unknown kernel density kind: {self.kind}")

    def evaluate(self, x):
        if self.kind == "gue":
            return gue_density_exact(self.n, x, self.normalized)
        return ginibre_density_exact(self.n, x, self.normalized)

    def radius(self) -> float:
        """Half-width (GUE) or radius (Ginibre) past which the density is negligible"""
        cutoff = math.sqrt(-2.0 * math.log(config.numerics.gaussian_cutoff))
        if self.kind == "gue":
            half = 2.0 * math.sqrt(self.n) + cutoff
            return half / math.sqrt(self.n) if self.normalized else half
        radius = math.sqrt(self.n) + cutoff
        return radius / math.sqrt(self.n) if self.normalized else radius

    def total_mass(self) -> float:
        """Integral over R (GUE) or over C in polar form (Ginibre)"""
        tol = config.numerics.quadrature_tolerance
        r = self.radius()
        if self.kind == "gue":
            edge = 2.0 if self.normalized else 2.0 * math.sqrt(self.n)
            cuts = [-r, -edge, 0.0, edge, r]
            return sum(
                integrate.quad(self.evaluate, a, b, epsabs=tol, epsrel=tol, limit=500)[0]
                for a, b in zip(cuts[:-1], cuts[1:])
            )
        # radially symmetric: int 2 pi rho q(rho) d rho
        edge = 1.0 if self.normalized else math.sqrt(self.n)
        radial = lambda rho: 2.0 * math.pi * rho * self.evaluate(rho)
        return sum(
            integrate.quad(radial, a, b, epsabs=tol, epsrel=tol, limit=500)[0] for a, b in ((0.0, edge), (edge, r))
        )

    def to_rows(self, grid: Sequence) -> List[List]:
        """CSV rows: x,density for GUE or re,im,density for Ginibre"""
        values = np.atleast_1d(self.evaluate(np.asarray(grid)))
        if self.kind == "gue":
            return [["x", "density"]] + [[float(x), float(v)] for x, v in zip(grid, values)]
        return [["re", "im", "density"]] + [[complex(z).real, complex(z).imag, float(v)] for z, v in zip(grid, values)]
