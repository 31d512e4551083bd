"""
Spectral measures with a uniform evaluate / sample / moment / Stieltjes interface
"""
import logging
import math
from abc import ABC, abstractmethod
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import integrate, interpolate

from rmt_lab.config import config
from rmt_lab.core.errors import DomainError, ParameterError

logger = logging.getLogger(__name__)


def _quad(f, a: float, b: float, points: Optional[Sequence[float]] = None) -> float:
    tol = config.numerics.quadrature_tolerance
    # Split at breakpoints; quad rejects `points` on infinite ranges
    cuts = [a] + sorted({p for p in (points or []) if a < p < b}) + [b]
    return sum(
        integrate.quad(f, lo, hi, epsabs=tol, epsrel=tol, limit=500)[0] for lo, hi in zip(cuts[:-1], cuts[1:])
    )


class SpectralMeasure(ABC):
    """
    A probability measure on the real line (or the plane for complex variants)

    Absolutely continuous variants implement `evaluate`; the generic moment,
    CDF and Stieltjes transform then come from adaptive quadrature.
    """

    name: str = "measure"
    mass: float = 1.0
    is_real: bool = True

    @abstractmethod
    def support(self) -> Tuple[float, float]:
        """Interval carrying the measure (quadrature range)"""

    def evaluate(self, x):
        raise ParameterError(f"{self.name} measure has no density")

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        raise ParameterError(f"Sampling is not available for the {self.name} measure")

    def moment(self, k: int) -> float:
        if k < 0:
            raise ParameterError("Moment order must be >= 0")
        a, b = self.support()
        return _quad(lambda t: t**k * self.evaluate(t), a, b, self.breakpoints())

    def cdf(self, x):
        a, b = self.support()
        x_arr = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.array([0.0 if xi <= a else (self.mass if xi >= b else _quad(self.evaluate, a, xi)) for xi in x_arr])
        return out if np.ndim(x) else float(out[0])

    def bin_mass(self, left: float, right: float) -> float:
        """Measure of [left, right]"""
        return float(self.cdf(right) - self.cdf(left))

    def breakpoints(self) -> Sequence[float]:
        return []

    def stieltjes(self, z: complex) -> complex:
        """S(z) = int (t - z)^-1 dmu(t), by quadrature of real and imaginary parts"""
        z = complex(z)
        a, b = self.support()
        points = list(self.breakpoints())
        if a < z.real < b:
            points.append(z.real)
        re = _quad(lambda t: (self.evaluate(t) / (t - z)).real, a, b, points)
        im = _quad(lambda t: (self.evaluate(t) / (t - z)).imag, a, b, points)
        return complex(re, im)

    def __repr__(self):
        return f"<{self.__class__.__name__}>"


class EmpiricalMeasure(SpectralMeasure):
    """Uniform probability measure on a list of real eigenvalues"""

    name = "empirical"

    def __init__(self, eigenvalues: Sequence[float]):
        values = np.sort(np.asarray(eigenvalues, dtype=float))
        if values.size == 0:
            raise ParameterError("Empirical measure needs at least one eigenvalue")
        self.eigenvalues = values

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    def support(self):
        return float(self.eigenvalues[0]), float(self.eigenvalues[-1])

    def sample(self, rng, size):
        return rng.choice(self.eigenvalues, size=size, replace=True)

    def moment(self, k):
        return float(np.mean(self.eigenvalues**k))

    def cdf(self, x):
        counts = np.searchsorted(self.eigenvalues, x, side="right")
        return counts / self.n

    def stieltjes(self, z):
        return complex(np.mean(1.0 / (self.eigenvalues - complex(z))))


class EmpiricalComplexMeasure(SpectralMeasure):
    """Uniform measure on complex eigenvalues; its transform is the Cauchy transform"""

    name = "empirical-complex"
    is_real = False

    def __init__(self, eigenvalues: Sequence[complex]):
        values = np.asarray(eigenvalues, dtype=complex)
        if values.size == 0:
            raise ParameterError("Empirical measure needs at least one eigenvalue")
        self.eigenvalues = values

    def support(self):
        r = float(np.max(np.abs(self.eigenvalues)))
        return -r, r

    def sample(self, rng, size):
        return rng.choice(self.eigenvalues, size=size, replace=True)

    def moment(self, k):
        return complex(np.mean(self.eigenvalues**k))

    def radial_cdf(self, r: float) -> float:
        """Fraction of eigenvalues with |z| <= r"""
        return float(np.mean(np.abs(self.eigenvalues) <= r))

    def stieltjes(self, z):
        return complex(np.mean(1.0 / (self.eigenvalues - complex(z))))


class SemicircleMeasure(SpectralMeasure):
    """Density (2 pi)^-1 sqrt(4 - x^2) on [-2, 2]"""

    name = "semicircle"

    def support(self):
        return -2.0, 2.0

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        out = np.sqrt(np.clip(4.0 - x * x, 0.0, None)) / (2.0 * math.pi)
        return out if out.ndim else float(out)

    def cdf(self, x):
        x = np.clip(np.asarray(x, dtype=float), -2.0, 2.0)
        out = 0.5 + x * np.sqrt(4.0 - x * x) / (4.0 * math.pi) + np.arcsin(x / 2.0) / math.pi
        return out if out.ndim else float(out)

    def sample(self, rng, size):
        # x-coordinate of a uniform point in the disc of radius 2
        r = 2.0 * np.sqrt(rng.random(size))
        return r * np.cos(2.0 * math.pi * rng.random(size))

    def stieltjes(self, z):
        from rmt_lab.spectral.stieltjes import semicircle_stieltjes

        return semicircle_stieltjes(z)


class MarchenkoPasturMeasure(SpectralMeasure):
    """Limit spectrum of X X* with X N x p, entries of variance 1/p, c = N/p in (0, 1]"""

    name = "marchenko-pastur"

    def __init__(self, c: float):
        if not 0.0 < c <= 1.0:
            raise ParameterError(f"Marchenko-Pastur ratio must lie in (0, 1], got {c}")
        self.c = float(c)
        self.lower = (1.0 - math.sqrt(c)) ** 2
        self.upper = (1.0 + math.sqrt(c)) ** 2
        self._inverse_cdf = None

    def support(self):
        return self.lower, self.upper

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            inside = (x > self.lower) & (x < self.upper)
            root = np.sqrt(np.clip((self.upper - x) * (x - self.lower), 0.0, None))
            out = np.where(inside, root / (2.0 * math.pi * self.c * np.where(x > 0, x, 1.0)), 0.0)
        return out if out.ndim else float(out)

    def stieltjes_closed_form(self, z: complex) -> complex:
        """Root of c z S^2 + (z - 1 + c) S + 1 = 0 lying in the upper half-plane"""
        z = complex(z)
        if z.imag <= 0:
            raise DomainError("Stieltjes transform needs Im z > 0")
        b = z - 1.0 + self.c
        disc = np.sqrt(b * b - 4.0 * self.c * z)
        roots = ((-b + disc) / (2.0 * self.c * z), (-b - disc) / (2.0 * self.c * z))
        return max(roots, key=lambda s: s.imag)

    def sample(self, rng, size):
        if self._inverse_cdf is None:
            grid = np.linspace(self.lower, self.upper, 2001)
            values = np.concatenate([[0.0], np.cumsum([self.bin_mass(a, b) for a, b in zip(grid[:-1], grid[1:])])])
            values /= values[-1]
            keep = np.concatenate([[True], np.diff(values) > 0])
            self._inverse_cdf = interpolate.PchipInterpolator(values[keep], grid[keep])
        return self._inverse_cdf(rng.random(size))

    def bin_mass(self, left, right):
        a, b = max(left, self.lower), min(right, self.upper)
        return _quad(self.evaluate, a, b) if b > a else 0.0

    def cdf(self, x):
        x_arr = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.array([self.bin_mass(self.lower, xi) for xi in x_arr])
        return out if np.ndim(x) else float(out[0])


class CircularUniformMeasure(SpectralMeasure):
    """Uniform distribution on the unit disc, density 1/pi"""

    name = "circular"
    is_real = False

    def support(self):
        return -1.0, 1.0

    def evaluate(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.where(np.abs(z) <= 1.0, 1.0 / math.pi, 0.0)
        return out if out.ndim else float(out)

    def moment(self, k):
        return 1.0 if k == 0 else 0.0

    def radial_cdf(self, r: float) -> float:
        return float(min(max(r, 0.0), 1.0) ** 2)

    def sample(self, rng, size):
        r = np.sqrt(rng.random(size))
        return r * np.exp(2j * math.pi * rng.random(size))

    def stieltjes(self, z):
        z = complex(z)
        return -z.conjugate() if abs(z) <= 1.0 else -1.0 / z


class FiniteNKernelMeasure(SpectralMeasure):
    """Averaged eigenvalue density of GUE(N) from the Hermite kernel"""

    name = "finite-n-kernel"

    def __init__(self, n: int, normalized: bool = True):
        if n < 1:
            raise ParameterError(f"N must be >= 1, got {n}")
        self.n = n
        self.normalized = normalized

    def support(self):
        cutoff = math.sqrt(-2.0 * math.log(config.numerics.gaussian_cutoff))
        half = 2.0 * math.sqrt(self.n) + cutoff
        if self.normalized:
            half /= math.sqrt(self.n)
        return -half, half

    def evaluate(self, x):
        from rmt_lab.hermite.kernels import gue_density_exact

        return gue_density_exact(self.n, x, normalized=self.normalized)

    def breakpoints(self):
        edge = 2.0 if self.normalized else 2.0 * math.sqrt(self.n)
        return [-edge, 0.0, edge]


def measure_from_name(name: str, **params) -> SpectralMeasure:
    """Closed-form measure by CLI name"""
    if name == "semicircle":
        return SemicircleMeasure()
    if name in ("mp", "marchenko-pastur"):
        return MarchenkoPasturMeasure(params.get("c", 1.0))
    if name == "circular":
        return CircularUniformMeasure()
    if name in ("kernel", "finite-n-kernel"):
        return FiniteNKernelMeasure(params.get("n", 1), params.get("normalized", True))
    raise ParameterError(f"Unknown measure: {name}")
