"""
Edge recipes: the Tracy-Widom table, rescaled largest eigenvalues and longest increasing subsequences
"""
import argparse
import logging

import numpy as np

from rmt_lab.core.experiment_base import Experiment, ExperimentOutput
from rmt_lab.core.experiment_runner import float_list, positive_float, positive_int
from rmt_lab.core.tolerance_check import Check
from rmt_lab.edge.painleve import painleve2_solve
from rmt_lab.edge.statistics import edge_statistic_mc
from rmt_lab.edge.tracy_widom import build_f2_table, default_f2_table, f2_cdf, f2_moments, f2_quantile, fredholm_f2
from rmt_lab.ensembles.ensemble_base import HERMITIAN_KINDS, EnsembleKind
from rmt_lab.experiments.arguments import add_ensemble_arguments, spec_from_args
from rmt_lab.rsk.bdj import bdj_statistic_mc

logger = logging.getLogger(__name__)


def painleve_residual(solution, lo: float = -6.0, hi: float = 6.0) -> float:
    """sup |q'' - x q - 2 q^3| on [lo, hi], q'' by differencing q'"""
    qpp = np.gradient(solution.qp, solution.x)
    residual = np.abs(qpp - solution.x * solution.q - 2.0 * solution.q**3)
    inside = (solution.x >= lo) & (solution.x <= hi)
    return float(residual[inside].max())


class TracyWidomExperiment(Experiment):
    name = "tracy-widom"
    description = "Tracy-Widom F2 from the Hastings-McLeod solution of Painleve II"
    reproduces = "Tracy-Widom law via Painleve II"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--t-min", type=float, default=-6.0)
        parser.add_argument("--t-max", type=float, default=5.0)
        parser.add_argument("--t-step", type=positive_float, default=0.01)
        parser.add_argument("--step", type=positive_float, default=None, help="Painleve solver step")
        parser.add_argument("--x0", type=float, default=None, help="Right boundary of the solver")
        parser.add_argument("--solution", action="store_true", help="Write q(x) instead of the F2 table")
        parser.add_argument(
            "--fredholm", type=float_list, default=[-3.0, -2.0, 0.0, 2.0], help="Points for the determinant check"
        )

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        table = build_f2_table(args.t_min, args.t_max, args.t_step, step=args.step, x0=args.x0)
        checked = painleve2_solve(x0=args.x0, step=args.step, verify=True)
        mean, variance = f2_moments(table)
        residual = painleve_residual(table.solution)
        headline = {
            "mean": mean,
            "variance": variance,
            "median": f2_quantile(table, 0.5),
            "halving_error": checked.metadata["halving_error"],
            "painleve_residual": residual,
        }
        checks = [
            Check("painleve_residual", residual, 1e-4),
            Check("monotone", float(np.all(np.diff(table.values) >= 0.0)), 1.0, relation="ge"),
        ]
        if table.covers(-6.0):
            checks.append(Check("F2(-6)", f2_cdf(table, -6.0), 0.01))
        if table.covers(5.0):
            checks.append(Check("F2(5)", f2_cdf(table, 5.0), 0.999, relation="ge"))
        points = [t for t in args.fredholm if table.covers(t)]
        if points:
            worst = max(abs(fredholm_f2(t, order=None) - f2_cdf(table, t)) for t in points)
            headline["fredholm_difference"] = worst
            checks.append(Check("fredholm_difference", worst, 1e-6))
        rows = table.solution.to_rows() if args.solution else table.to_rows()
        return ExperimentOutput(rows=rows, headline=headline, checks=checks)


class EdgeMonteCarloExperiment(Experiment):
    name = "edge-mc"
    description = "N^{2/3}(lambda_max - 2) for Wigner matrices against Tracy-Widom F2"
    reproduces = "Tracy-Widom law at the GUE edge"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_ensemble_arguments(parser, kinds=HERMITIAN_KINDS, default_n=200, default_trials=1000)
        parser.add_argument("--bins", type=positive_int, default=60)
        parser.add_argument("--tolerance", type=positive_float, default=0.06, help="Bound on the KS distance")

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        spec = spec_from_args(args)
        sample = edge_statistic_mc(spec, args.trials, args.threads)
        headline = {"mean": sample.mean}
        checks = []
        if spec.kind != EnsembleKind.GOE:
            # GOE has its own edge law
            table = default_f2_table()
            headline["ks_distance"] = sample.ks_distance(table)
            checks.append(Check("ks_distance", headline["ks_distance"], args.tolerance))
        return ExperimentOutput(rows=sample.histogram_rows(args.bins), headline=headline, checks=checks)


class BdjExperiment(Experiment):
    name = "bdj"
    description = "Longest increasing subsequence of uniform permutations, (L_n - 2 sqrt(n))/n^{1/6} against F2"
    reproduces = "Baik-Deift-Johansson theorem"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n", type=positive_int, default=1000)
        parser.add_argument("--trials", type=positive_int, default=5000)
        parser.add_argument("--tolerance", type=positive_float, default=0.10, help="Bound on the KS distance")

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        sample = bdj_statistic_mc(args.n, args.trials, args.seed, args.threads)
        ks = sample.ks_distance(default_f2_table())
        return ExperimentOutput(
            rows=sample.to_rows(),
            headline={"mean_ratio": sample.mean_ratio, "ks_distance": ks},
            checks=[
                Check("ratio_gap", 2.0 - sample.mean_ratio, 0.18, relation="abs_le", note="E[L]/sqrt(n) -> 2"),
                Check("ks_distance", ks, args.tolerance),
            ],
        )
