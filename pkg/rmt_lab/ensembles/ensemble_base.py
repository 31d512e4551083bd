"""
Ensemble specifications and matrix samples
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from rmt_lab.config import config
from rmt_lab.core.errors import ParameterError


class EnsembleKind(str, Enum):
    """Matrix ensemble types"""

    GOE = "goe"
    GUE = "gue"
    GINIBRE = "ginibre"
    WIGNER = "wigner"
    WISHART = "wishart"


class Normalization(str, Enum):
    """Entry scaling: variance ~1/N (normalized) or ~1 (unnormalized)"""

    NORMALIZED = "normalized"
    UNNORMALIZED = "unnormalized"


class EntryLaw(str, Enum):
    """Distribution of the i.i.d. entries (mean 0, variance 1 where defined)"""

    GAUSS = "gauss"
    RADEMACHER = "rademacher"
    UNIFORM_SYMMETRIC = "uniform"
    CAUCHY_STD = "cauchy"


class DiagonalMode(str, Enum):
    """Diagonal treatment of self-adjoint kinds"""

    STANDARD = "standard"  # GOE: 2/N, others: 1/N
    UNIT = "unit"  # same variance as off-diagonal entries
    ZERO = "zero"


HERMITIAN_KINDS = (EnsembleKind.GOE, EnsembleKind.GUE, EnsembleKind.WIGNER)


@dataclass(frozen=True)
class EnsembleSpec:
    """Everything needed to reproduce a matrix sample from a trial index"""

    kind: EnsembleKind
    n: int
    p: Optional[int] = None
    normalization: Normalization = Normalization.NORMALIZED
    entry_law: EntryLaw = EntryLaw.GAUSS
    diagonal: DiagonalMode = DiagonalMode.STANDARD
    complex_entries: bool = False
    seed: int = field(default_factory=lambda: config.sampling.default_seed)

    def __post_init__(self):
        # Accept plain strings from the CLI
        object.__setattr__(self, "kind", EnsembleKind(self.kind))
        object.__setattr__(self, "normalization", Normalization(self.normalization))
        object.__setattr__(self, "entry_law", EntryLaw(self.entry_law))
        object.__setattr__(self, "diagonal", DiagonalMode(self.diagonal))
        self.validate()

    def validate(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ParameterError(f"Dimension N must be a positive integer, got {self.n!r}")
        if self.kind == EnsembleKind.WISHART:
            if self.p is None or self.p < 1:
                raise ParameterError("Wishart ensembles need a second dimension p >= 1")
        elif self.p is not None:
            raise ParameterError(f"Second dimension p is only meaningful for Wishart, not {self.kind.value}")
        if self.kind in (EnsembleKind.GOE, EnsembleKind.GUE) and self.entry_law != EntryLaw.GAUSS:
            raise ParameterError(f"{self.kind.value.upper()} entries are Gaussian by definition")
        if self.seed < 0 or self.seed >= 2**64:
            raise ParameterError("Seed must be a 64-bit unsigned integer")

    @property
    def is_hermitian(self) -> bool:
        return self.kind in HERMITIAN_KINDS

    @property
    def has_variance(self) -> bool:
        """False for Cauchy entries; moment checks are skipped then"""
        return self.entry_law != EntryLaw.CAUCHY_STD

    @property
    def scale(self) -> float:
        """Multiplier applied to variance-1 entries"""
        if self.normalization == Normalization.UNNORMALIZED:
            return 1.0
        if self.kind == EnsembleKind.WISHART:
            return 1.0 / np.sqrt(self.p)
        return 1.0 / np.sqrt(self.n)

    @property
    def ratio(self) -> Optional[float]:
        """c = N/p for Wishart"""
        return self.n / self.p if self.kind == EnsembleKind.WISHART else None


@dataclass
class MatrixSample:
    """One realization of an ensemble"""

    entries: np.ndarray
    spec: EnsembleSpec
    trial: int

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def operator(self) -> np.ndarray:
        """
        Square matrix whose spectrum is studied

        The entries themselves for square kinds; X X* for Wishart, symmetrized
        so the result is exactly self-adjoint.
        """
        if self.spec.kind != EnsembleKind.WISHART:
            return self.entries
        w = self.entries @ self.entries.conj().T
        return (w + w.conj().T) / 2

    @property
    def is_hermitian(self) -> bool:
        return self.spec.is_hermitian or self.spec.kind == EnsembleKind.WISHART

    def trace_power(self, m: int) -> float:
        """Normalized trace tr(A^m) = (1/N) Tr(A^m)"""
        a = self.operator()
        return float(np.real(np.trace(np.linalg.matrix_power(a, m)))) / a.shape[0]
