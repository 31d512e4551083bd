"""
Determinantal path recipes: Dyson walks, Karlin-McGregor and Gessel-Viennot
"""
import argparse
import logging
from fractions import Fraction

import numpy as np

from rmt_lab.core.errors import ParameterError
from rmt_lab.core.experiment_base import Experiment, ExperimentOutput
from rmt_lab.core.experiment_runner import int_list, nonnegative_int, positive_float, positive_int
from rmt_lab.core.monte_carlo import run_trials
from rmt_lab.core.tolerance_check import Check
from rmt_lab.ensembles.dyson_walk import sample_dyson_walk, sample_independent_walks
from rmt_lab.ensembles.ensemble_base import EnsembleSpec
from rmt_lab.paths.dag import catalan_lattice_dag, gv_determinant, gv_path_weights, gv_vertex_disjoint_sum, random_dag
from rmt_lab.paths.determinants import catalan_hankel_det
from rmt_lab.paths.dyson import dyson_crossing_check, trajectory_rows
from rmt_lab.paths.walks import (
    WalkSpec,
    km_brute_force,
    km_determinant,
    km_enumerate,
    noncrossing_probability,
    transition_matrix,
)
from rmt_lab.utils.rng import trial_rng

logger = logging.getLogger(__name__)


class DysonExperiment(Experiment):
    name = "dyson"
    description = "Eigenvalue trajectories of GUE/GOE random walks: ordered paths that never collide"
    reproduces = "Dyson Brownian motion as non-intersecting paths"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--ensemble", choices=["gue", "goe"], default="gue")
        parser.add_argument("--n", type=positive_int, default=5)
        parser.add_argument("--steps", type=positive_int, default=200)
        parser.add_argument("--increment", type=positive_float, default=0.1)
        parser.add_argument("--trials", type=positive_int, default=20, help="Independent walks")

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        spec = EnsembleSpec(args.ensemble, args.n, seed=args.seed)
        reports = run_trials(
            lambda t: dyson_crossing_check(sample_dyson_walk(spec, args.steps, args.increment, t)),
            args.trials,
            args.threads,
        )
        collisions = sum(r.collisions for r in reports)
        spacings = [r.min_spacing for r in reports]
        headline = {"collisions": collisions, "min_spacing": min(spacings)}
        if args.n > 1:
            headline["mean_min_spacing"] = float(np.mean(spacings))
            # N scalar walks with the same increments cross freely
            independent = [
                float(np.min(np.diff(np.sort(w, axis=1), axis=1)))
                for w in (
                    sample_independent_walks(args.n, args.steps, args.increment, args.seed, t)
                    for t in range(args.trials)
                )
            ]
            headline["independent_mean_min_spacing"] = float(np.mean(independent))
        rows = trajectory_rows(sample_dyson_walk(spec, args.steps, args.increment, 0))
        return ExperimentOutput(rows=rows, headline=headline, checks=[Check("collisions", collisions, 0)])


class KarlinMcGregorExperiment(Experiment):
    name = "km"
    description = "Karlin-McGregor determinant of nearest-neighbour walks against exact path enumeration"
    reproduces = "Karlin-McGregor formula"
    default_format = "json"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--starts", type=int_list, default=[2, 0], help="Strictly decreasing start sites")
        parser.add_argument("--ends", type=int_list, default=[2, 0], help="Distinct target sites")
        parser.add_argument("--horizon", type=nonnegative_int, default=2)
        parser.add_argument("--up", type=Fraction, default=Fraction(1, 2), help="Up-step probability, e.g. 1/2")

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        spec = WalkSpec(tuple(args.starts), tuple(args.ends), args.horizon, args.up)
        det = km_determinant(spec)
        enumerated = km_enumerate(spec)
        payload = {
            "transition_matrix": transition_matrix(spec),
            "determinant": det,
            "enumeration": enumerated,
            "noncrossing_probability": noncrossing_probability(spec),
        }
        if spec.n * spec.horizon <= 16:
            payload["brute_force"] = km_brute_force(spec)
        rows = [["quantity", "value"]] + [[k, v] for k, v in payload.items() if k != "transition_matrix"]
        headline = {"determinant": str(det), "enumeration": str(enumerated)}
        checks = [Check("det_minus_enumeration", float(det - enumerated), 0.0, relation="abs_le")]
        return ExperimentOutput(rows=rows, payload=payload, headline=headline, checks=checks)


class GesselViennotExperiment(Experiment):
    name = "gv"
    description = "Gessel-Viennot lemma on weighted DAGs and the Catalan Hankel determinants"
    reproduces = "Gessel-Viennot lemma and Catalan Hankel determinants"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--mode", choices=["catalan", "random", "hankel"], default="catalan")
        parser.add_argument("--n", type=nonnegative_int, default=3, help="Lattice / Hankel order")
        parser.add_argument("--size", type=positive_int, default=9, help="Vertices of each random DAG")
        parser.add_argument("--density", type=float, default=0.4)
        parser.add_argument("--paths", type=positive_int, default=2, help="Sources per random DAG")
        parser.add_argument("--trials", type=positive_int, default=20, help="Random DAGs")

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        if args.mode == "hankel":
            rows = [["n", "determinant"]] + [[n, catalan_hankel_det(n)] for n in range(args.n + 1)]
            bad = sum(1 for _, d in rows[1:] if d != 1)
            return ExperimentOutput(rows=rows, headline={"orders": args.n + 1}, checks=[Check("not_one", bad, 0)])
        if args.mode == "catalan":
            dag, sources, sinks = catalan_lattice_dag(args.n)
            weights = gv_path_weights(dag, sources, sinks)
            det = gv_determinant(dag, sources, sinks)
            disjoint = gv_vertex_disjoint_sum(dag, sources, sinks)
            rows = [["i"] + [f"b{j}" for j in range(len(sinks))]] + [[i] + list(r) for i, r in enumerate(weights)]
            return ExperimentOutput(
                rows=rows,
                headline={"determinant": str(det), "disjoint_sum": str(disjoint)},
                checks=[Check("det_minus_disjoint", float(det - disjoint), 0.0, relation="abs_le")],
            )
        if args.paths * 2 > args.size:
            raise ParameterError("Random DAGs need at least two vertices per path")
        sources = list(range(args.paths))
        sinks = list(range(args.size - args.paths, args.size))
        rows = [["trial", "determinant", "disjoint_sum"]]
        mismatches = 0
        for trial in range(args.trials):
            dag = random_dag(trial_rng(args.seed, trial), args.size, args.density)
            det = gv_determinant(dag, sources, sinks)
            disjoint = gv_vertex_disjoint_sum(dag, sources, sinks)
            mismatches += det != disjoint
            rows.append([trial, det, disjoint])
        return ExperimentOutput(rows=rows, headline={"mismatches": mismatches}, checks=[Check("mismatches", mismatches, 0)])
