"""
Spectrum recipes: raw samples, empirical spectral distributions,
exact finite-N densities and the circular law
"""
import argparse
import logging
import math

import numpy as np

from rmt_lab.core.errors import ParameterError
from rmt_lab.core.experiment_base import Experiment, ExperimentOutput
from rmt_lab.core.experiment_runner import positive_float, positive_int
from rmt_lab.core.monte_carlo import run_trials
from rmt_lab.core.tolerance_check import Check
from rmt_lab.ensembles.ensemble_base import EnsembleKind, EnsembleSpec, Normalization
from rmt_lab.ensembles.samplers import sample
from rmt_lab.experiments.arguments import add_ensemble_arguments, spec_from_args
from rmt_lab.hermite.kernels import KernelDensity, ginibre_density_exact
from rmt_lab.spectral.eigensolvers import eigen_residuals, general_eigenvalues, hermitian_eigenvalues
from rmt_lab.spectral.histogram import esd_histogram
from rmt_lab.spectral.measures import (
    EmpiricalComplexMeasure,
    FiniteNKernelMeasure,
    MarchenkoPasturMeasure,
    SemicircleMeasure,
)

logger = logging.getLogger(__name__)

CIRCULAR_RADII = (0.5, 0.8, 1.0)


def _eigenvalues(spec: EnsembleSpec, trial: int, method: str = "lapack") -> np.ndarray:
    m = sample(spec, trial)
    if m.is_hermitian:
        return hermitian_eigenvalues(m.operator(), method=method)
    return general_eigenvalues(m.operator(), method=method)


def _limit_measure(spec: EnsembleSpec):
    """Semicircle / Marchenko-Pastur for normalized ensembles with finite variance, else None"""
    if spec.normalization != Normalization.NORMALIZED or not spec.has_variance:
        return None
    if spec.is_hermitian:
        return SemicircleMeasure()
    if spec.kind == EnsembleKind.WISHART and spec.ratio <= 1.0:
        return MarchenkoPasturMeasure(spec.ratio)
    return None


class SampleExperiment(Experiment):
    name = "sample"
    description = "Eigenvalues of individual ensemble samples (GOE, GUE, Wigner, Ginibre, Wishart)"
    reproduces = "Gaussian and Wishart ensemble definitions"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_ensemble_arguments(parser, default_n=10)
        parser.add_argument(
            "--method",
            choices=["lapack", "householder", "hessenberg-qr"],
            default="lapack",
            help="Eigensolver: library routine or the built-in reductions",
        )

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        spec = spec_from_args(args)
        real = spec.is_hermitian or spec.kind == EnsembleKind.WISHART
        if real and args.method == "hessenberg-qr" or not real and args.method == "householder":
            raise ParameterError(f"Method {args.method} does not apply to {spec.kind.value}")
        rows = [["trial", "index", "eigenvalue"] if real else ["trial", "index", "re", "im"]]
        worst = 0.0
        for trial in range(args.trials):
            eigs = _eigenvalues(spec, trial, args.method)
            worst = max(worst, float(np.max(eigen_residuals(sample(spec, trial).operator(), eigs))))
            for i, v in enumerate(eigs):
                rows.append([trial, i, float(v)] if real else [trial, i, complex(v).real, complex(v).imag])
        return ExperimentOutput(
            rows=rows,
            headline={"eigenvalues": len(rows) - 1, "max_residual": worst},
            checks=[Check("max_residual", worst, 1e-8, note="relative eigen residual")],
        )


class EsdExperiment(Experiment):
    name = "esd"
    description = "Empirical spectral distribution histogram against the semicircle or Marchenko-Pastur law"
    reproduces = "Wigner semicircle law and Marchenko-Pastur law"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_ensemble_arguments(
            parser, kinds=(EnsembleKind.GOE, EnsembleKind.GUE, EnsembleKind.WIGNER, EnsembleKind.WISHART)
        )
        parser.add_argument("--bins", type=positive_int, default=60)
        parser.add_argument("--tolerance", type=positive_float, default=0.08, help="Bound on the L1 bin distance")

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        spec = spec_from_args(args)
        eigs = np.concatenate(run_trials(lambda t: _eigenvalues(spec, t), args.trials, args.threads))
        measure = _limit_measure(spec)
        value_range = measure.support() if measure is not None else None
        hist = esd_histogram(eigs, args.bins, value_range)
        headline = {"eigenvalues": int(eigs.size), "overflow": hist.overflow}
        checks = []
        if measure is not None:
            headline["limit"] = measure.name
            headline["l1_distance"] = hist.l1_distance(measure)
            checks.append(Check("l1_distance", headline["l1_distance"], args.tolerance))
            if spec.kind == EnsembleKind.WISHART:
                lo, hi = measure.support()
                inside = float(np.mean((eigs >= lo - 0.1) & (eigs <= hi + 0.1)))
                headline["support_fraction"] = inside
                checks.append(Check("support_fraction", inside, 0.99, relation="ge"))
        else:
            logger.info("No limit law for this configuration; histogram only")
        return ExperimentOutput(rows=hist.to_rows(), headline=headline, checks=checks)


class DensityExperiment(Experiment):
    name = "density"
    description = "Exact finite-N eigenvalue density from the Hermite (GUE) or Ginibre kernel"
    reproduces = "Hermite kernel density of GUE and Ginibre kernel density"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--kind", choices=["gue", "ginibre"], default="gue")
        parser.add_argument("--n", type=positive_int, default=5)
        parser.add_argument("--grid", type=positive_int, default=201, help="Grid points per axis")
        parser.add_argument("--unnormalized", action="store_true", help="Variance-1 entries instead of 1/N")
        parser.add_argument(
            "--trials", type=int, default=0, help="GUE matrices for a Monte Carlo per-bin comparison (0: none)"
        )
        parser.add_argument("--bins", type=positive_int, default=24)

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        density = KernelDensity(args.kind, args.n, normalized=not args.unnormalized)
        r = density.radius()
        if args.kind == "gue":
            grid = np.linspace(-r, r, args.grid)
        else:
            axis = np.linspace(-r, r, args.grid)
            grid = (axis[None, :] + 1j * axis[:, None]).ravel()
        mass = density.total_mass()
        headline = {"total_mass": mass}
        checks = [Check("mass_error", mass - 1.0, 1e-6, relation="abs_le")]

        if args.trials:
            if args.kind != "gue" or args.trials < 1:
                raise ParameterError("The Monte Carlo comparison needs --kind gue and --trials >= 1")
            spec = EnsembleSpec(
                EnsembleKind.GUE,
                args.n,
                normalization=Normalization.UNNORMALIZED if args.unnormalized else Normalization.NORMALIZED,
                seed=args.seed,
            )
            eigs = np.concatenate(run_trials(lambda t: _eigenvalues(spec, t), args.trials, args.threads))
            hist = esd_histogram(eigs, args.bins, (-r, r), mode="count")
            scores = hist.bin_zscores(FiniteNKernelMeasure(args.n, normalized=not args.unnormalized))
            headline["max_bin_z"] = float(scores.max()) if scores.size else 0.0
            checks.append(Check("max_bin_z", headline["max_bin_z"], 5.0))
        return ExperimentOutput(rows=density.to_rows(grid), headline=headline, checks=checks)


class CircularExperiment(Experiment):
    name = "circular"
    description = "Complex eigenvalues of normalized Ginibre matrices and the circular law"
    reproduces = "circular law for Ginibre matrices"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_ensemble_arguments(parser, kinds=(EnsembleKind.GINIBRE,), default_kind=EnsembleKind.GINIBRE, default_n=500)
        parser.add_argument("--tolerance", type=positive_float, default=0.03, help="Bound on |fraction - r^2|")

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        spec = spec_from_args(args)
        eigs = run_trials(lambda t: _eigenvalues(spec, t), args.trials, args.threads)
        rows = [["trial", "re", "im"]]
        for trial, values in enumerate(eigs):
            rows.extend([trial, complex(z).real, complex(z).imag] for z in values)
        measure = EmpiricalComplexMeasure(np.concatenate(eigs))
        headline = {"eigenvalues": len(rows) - 1}
        checks = []
        if spec.normalization == Normalization.NORMALIZED:
            for r in CIRCULAR_RADII:
                fraction = measure.radial_cdf(r)
                headline[f"fraction_r{r}"] = fraction
                checks.append(Check(f"fraction_r{r}", fraction - r * r, args.tolerance, relation="abs_le"))
            headline["kernel_density_at_0"] = float(np.real(ginibre_density_exact(spec.n, 0.0)))
            checks.append(
                Check("kernel_density_at_0", headline["kernel_density_at_0"] - 1.0 / math.pi, 1e-3, relation="abs_le")
            )
        return ExperimentOutput(rows=rows, headline=headline, checks=checks)
