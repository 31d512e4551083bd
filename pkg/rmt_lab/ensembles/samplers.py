"""
Seed-reproducible samplers for all matrix ensembles

Complex Gaussian entries are (x + iy)/sqrt(2) with x, y independent real
standard normals. Real normals come from numpy's ziggurat method on a
per-trial Philox stream, so sample(spec, trial) is a pure function of its
arguments and safe to call from many threads.
"""
import math

import numpy as np

from rmt_lab.core.errors import ParameterError
from rmt_lab.ensembles.ensemble_base import (
    DiagonalMode,
    EnsembleKind,
    EnsembleSpec,
    EntryLaw,
    MatrixSample,
)
from rmt_lab.utils.rng import trial_rng

SQRT3 = math.sqrt(3.0)


def real_entries(law: EntryLaw, rng: np.random.Generator, size) -> np.ndarray:
    """I.i.d. real entries with mean 0 and variance 1 (Cauchy: no variance)"""
    if law == EntryLaw.GAUSS:
        return rng.standard_normal(size)
    if law == EntryLaw.RADEMACHER:
        return rng.integers(0, 2, size=size).astype(float) * 2.0 - 1.0
    if law == EntryLaw.UNIFORM_SYMMETRIC:
        return rng.uniform(-SQRT3, SQRT3, size=size)
    if law == EntryLaw.CAUCHY_STD:
        return rng.standard_cauchy(size)
    raise ParameterError(f"Unknown entry law: {law}")


def complex_entries(law: EntryLaw, rng: np.random.Generator, size) -> np.ndarray:
    """(x + iy)/sqrt(2) with x, y i.i.d. from the entry law"""
    x = real_entries(law, rng, size)
    y = real_entries(law, rng, size)
    return (x + 1j * y) / math.sqrt(2.0)


def _diagonal_scale(spec: EnsembleSpec) -> float:
    if spec.diagonal == DiagonalMode.ZERO:
        return 0.0
    if spec.kind == EnsembleKind.GOE and spec.diagonal == DiagonalMode.STANDARD:
        return math.sqrt(2.0)
    return 1.0


def _self_adjoint(upper: np.ndarray, diag: np.ndarray) -> np.ndarray:
    """Mirror the strict upper triangle; the result is Hermitian bit for bit"""
    a = np.triu(upper, 1)
    a = a + a.conj().T
    a[np.diag_indices_from(a)] = diag
    return a


def draw_matrix(spec: EnsembleSpec, rng: np.random.Generator) -> np.ndarray:
    """
    Draw the entries of one sample from a generator

    Args:
        spec: Ensemble specification
        rng: Source of randomness

    Returns:
        N x N array (N x p for Wishart)
    """
    n, s = spec.n, spec.scale
    if spec.kind == EnsembleKind.GUE:
        upper = complex_entries(EntryLaw.GAUSS, rng, (n, n)) * s
        diag = rng.standard_normal(n) * (s * _diagonal_scale(spec))
        return _self_adjoint(upper, diag)
    if spec.kind == EnsembleKind.GOE:
        upper = rng.standard_normal((n, n)) * s
        diag = rng.standard_normal(n) * (s * _diagonal_scale(spec))
        return _self_adjoint(upper, diag)
    if spec.kind == EnsembleKind.WIGNER:
        if spec.complex_entries:
            upper = complex_entries(spec.entry_law, rng, (n, n)) * s
        else:
            upper = real_entries(spec.entry_law, rng, (n, n)) * s
        diag = real_entries(spec.entry_law, rng, n) * (s * _diagonal_scale(spec))
        return _self_adjoint(upper, diag)
    if spec.kind == EnsembleKind.GINIBRE:
        if spec.entry_law == EntryLaw.GAUSS or spec.complex_entries:
            return complex_entries(spec.entry_law, rng, (n, n)) * s
        return real_entries(spec.entry_law, rng, (n, n)) * s
    if spec.kind == EnsembleKind.WISHART:
        shape = (n, spec.p)
        if spec.complex_entries:
            return complex_entries(spec.entry_law, rng, shape) * s
        return real_entries(spec.entry_law, rng, shape) * s
    raise ParameterError(f"Unknown ensemble kind: {spec.kind}")


def sample(spec: EnsembleSpec, trial: int) -> MatrixSample:
    """
    One realization of the ensemble for a trial index

    Args:
        spec: Ensemble specification (carries the seed)
        trial: Trial index >= 0

    Returns:
        MatrixSample, identical across runs and thread schedules
    """
    if trial < 0:
        raise ParameterError(f"Trial index must be >= 0, got {trial}")
    return MatrixSample(entries=draw_matrix(spec, trial_rng(spec.seed, trial)), spec=spec, trial=trial)
