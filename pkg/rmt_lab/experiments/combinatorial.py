"""
Combinatorial recipes: genus expansion, freeness and the Harer-Zagier recursion
"""
import argparse
import itertools
import logging

from rmt_lab.combinatorics.catalan import catalan
from rmt_lab.combinatorics.freeness import MonteCarloMomentOracle, four_letter_residual, mixed_gue_moment_limit
from rmt_lab.combinatorics.moments import gue_moment_exact, monte_carlo_trace_moments
from rmt_lab.core.errors import ParameterError
from rmt_lab.core.experiment_base import Experiment, ExperimentOutput
from rmt_lab.core.experiment_runner import float_list, int_list, nonnegative_int, positive_int
from rmt_lab.core.monte_carlo import z_score
from rmt_lab.core.tolerance_check import Check
from rmt_lab.ensembles.ensemble_base import EnsembleKind, EnsembleSpec
from rmt_lab.harer_zagier.bounds import TAIL_HEADER, lambda_max_trend, moment_upper_bound, tail_frequencies
from rmt_lab.harer_zagier.recursion import hz_moment_polynomial, hz_sequence

logger = logging.getLogger(__name__)


class MomentsExperiment(Experiment):
    name = "moments"
    description = "Genus expansion of E tr(A^m) for GUE by summing over pairings, with a Monte Carlo check"
    reproduces = "genus expansion of GUE moments"
    default_format = "json"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--m", type=nonnegative_int, required=True, help="Moment order")
        parser.add_argument("--n", type=positive_int, default=30, help="N for the Monte Carlo comparison")
        parser.add_argument("--trials", type=nonnegative_int, default=0, help="GUE(N) matrices (0: exact only)")

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        poly = gue_moment_exact(args.m)
        payload = {
            "m": args.m,
            "genus_coeffs": list(poly.genus_coeffs),
            "polynomial": str(poly),
            "pairings": poly.total(),
        }
        headline = {"genus_coeffs": list(poly.genus_coeffs)}
        checks = []
        if args.trials:
            if args.trials < 2:
                raise ParameterError("The Monte Carlo comparison needs at least two trials")
            if args.m == 0:
                raise ParameterError("The Monte Carlo comparison needs m >= 1")
            spec = EnsembleSpec(EnsembleKind.GUE, args.n, seed=args.seed)
            values = monte_carlo_trace_moments(spec, [args.m], args.trials, args.threads)[args.m]
            exact = float(poly.evaluate(args.n))
            z = z_score(values, exact)
            payload["monte_carlo"] = {"n": args.n, "mean": float(values.mean()), "exact": exact, "z": z}
            headline["z"] = z
            checks.append(Check("z", z, 5.0, relation="abs_le", note=f"GUE({args.n}), {args.trials} trials"))
        rows = [["genus", "count"]] + [[g, c] for g, c in enumerate(poly.genus_coeffs)]
        return ExperimentOutput(rows=rows, payload=payload, headline=headline, checks=checks)


class FreenessExperiment(Experiment):
    name = "freeness"
    description = "Asymptotic freeness of independent GUEs: four-letter factorization and E tr(A1 A2 A1 A2)"
    reproduces = "asymptotic freeness of independent GUEs"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--max-power", type=positive_int, default=3, help="Powers 1..max in the factorization")
        parser.add_argument("--n", type=positive_int, default=300)
        parser.add_argument("--trials", type=nonnegative_int, default=200, help="Matrix pairs (0: exact only)")
        parser.add_argument("--tolerance", type=float, default=0.05)

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        oracle = mixed_gue_moment_limit
        rows = [["p1", "q1", "p2", "q2", "moment", "residual"]]
        worst = 0
        for p1, q1, p2, q2 in itertools.product(range(1, args.max_power + 1), repeat=4):
            residual = four_letter_residual(oracle, p1, q1, p2, q2)
            moment = oracle((1,) * p1 + (2,) * q1 + (1,) * p2 + (2,) * q2)
            rows.append([p1, q1, p2, q2, moment, residual])
            worst = max(worst, abs(residual))
        headline = {"max_exact_residual": worst}
        checks = [Check("max_exact_residual", worst, 0, relation="abs_le")]
        if args.trials:
            mc = MonteCarloMomentOracle(args.n, args.trials, args.seed, colors=(1, 2), threads=args.threads)
            mean, stderr = mc.estimate((1, 2, 1, 2))
            headline.update({"alternating_moment": mean, "alternating_stderr": stderr})
            checks.append(Check("alternating_moment", mean, args.tolerance, relation="abs_le"))
        return ExperimentOutput(rows=rows, headline=headline, checks=checks)


class HarerZagierExperiment(Experiment):
    name = "hz"
    description = "Harer-Zagier recursion, moment bounds and largest-eigenvalue tails of GUE"
    reproduces = "Harer-Zagier recursion and largest-eigenvalue tail bounds"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--mode", choices=["sequence", "tail", "trend"], default="sequence")
        parser.add_argument("--k-max", type=positive_int, default=10)
        parser.add_argument("--verify", type=nonnegative_int, default=6, help="Compare with pairing sums up to k")
        parser.add_argument("--n", type=positive_int, default=100)
        parser.add_argument("--t", type=float_list, default=[1.0, 2.0, 4.0], help="Edge offsets for --mode tail")
        parser.add_argument("--sizes", type=int_list, default=[100, 200, 400], help="N values for --mode trend")
        parser.add_argument("--trials", type=positive_int, default=1000)

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        if args.mode == "tail":
            return self._tail(args)
        if args.mode == "trend":
            return self._trend(args)
        b = hz_sequence(args.k_max, args.n)
        rows = [["k", "b_k", "moment", "moment_bound"]]
        for k in range(1, args.k_max + 1):
            rows.append([k, b[k], catalan(k) * b[k], moment_upper_bound(k, args.n)])
        mismatches = [k for k in range(1, args.verify + 1) if hz_moment_polynomial(k) != gue_moment_exact(2 * k)]
        if mismatches:
            logger.error(f"Recursion and pairing sums disagree at k = {mismatches}")
        headline = {"b_k_max": b[args.k_max], "verified_up_to": args.verify}
        checks = [Check("mismatches", len(mismatches), 0)]
        checks += [
            Check(f"bound_k{row[0]}", float(row[2]) - row[3], 0.0, note="C_k b_k <= bound") for row in rows[1:]
        ]
        return ExperimentOutput(rows=rows, headline=headline, checks=checks)

    def _tail(self, args) -> ExperimentOutput:
        freqs = tail_frequencies(args.n, args.t, args.trials, args.seed, args.threads)
        rows = [TAIL_HEADER] + [f.to_row() for f in freqs]
        checks = [
            Check(f"tail_t{f.t}", f.frequency, f.bound + 3.0 * f.stderr, note="3 binomial standard errors")
            for f in freqs
        ]
        return ExperimentOutput(rows=rows, headline={f"frequency_t{f.t}": f.frequency for f in freqs}, checks=checks)

    def _trend(self, args) -> ExperimentOutput:
        if len(args.sizes) < 2 or any(n < 1 for n in args.sizes):
            raise ParameterError("--sizes needs at least two positive values")
        trend = lambda_max_trend(sorted(args.sizes), args.trials, args.seed, threads=args.threads)
        rows = [["n", "mean", "exceed"]] + [[n, v["mean"], v["exceed"]] for n, v in trend.items()]
        gaps = [abs(v["mean"] - 2.0) for v in trend.values()]
        shrinking = all(a > b for a, b in zip(gaps, gaps[1:]))
        return ExperimentOutput(
            rows=rows,
            headline={"gaps": gaps},
            checks=[Check("gap_shrinking", float(shrinking), 1.0, relation="ge")],
        )
