"""
RSK recipes: tableau pairs, the sum-of-squares census and the Erdos-Szekeres scan
"""
import argparse
import logging
import math

from rmt_lab.core.experiment_base import Experiment, ExperimentOutput
from rmt_lab.core.experiment_runner import int_list, nonnegative_int
from rmt_lab.core.tolerance_check import Check
from rmt_lab.rsk.correspondence import rsk, rsk_inverse
from rmt_lab.rsk.subsequences import erdos_szekeres_scan, lds, lis, min_sorting_moves
from rmt_lab.rsk.tableaux import tableau_census

logger = logging.getLogger(__name__)


class RskExperiment(Experiment):
    name = "rsk"
    description = "Robinson-Schensted-Knuth tableaux, longest monotone subsequences and tableau counts"
    reproduces = "Robinson-Schensted-Knuth correspondence and Erdos-Szekeres theorem"
    default_format = "json"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--mode", choices=["tableaux", "census", "erdos-szekeres"], default="tableaux")
        parser.add_argument(
            "--perm", type=int_list, default=[4, 2, 3, 6, 5, 1, 7], help="Permutation of 1..n in one-line notation"
        )
        parser.add_argument("--n", type=nonnegative_int, default=5, help="Size for census / Erdos-Szekeres")

    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        if args.mode == "census":
            return self._census(args.n)
        if args.mode == "erdos-szekeres":
            return self._erdos_szekeres(args.n)
        p, q = rsk(args.perm)
        recovered = list(rsk_inverse(p, q))
        payload = {
            "permutation": list(args.perm),
            "P": p.to_list(),
            "Q": q.to_list(),
            "shape": list(p.shape),
            "lis": lis(args.perm),
            "lds": lds(args.perm),
            "min_sorting_moves": min_sorting_moves(args.perm),
        }
        rows = [["quantity", "value"]] + [[k, v] for k, v in payload.items()]
        checks = [
            Check("inverse_mismatch", int(recovered != list(args.perm)), 0),
            Check("lis_minus_first_row", payload["lis"] - p.first_row_length, 0, relation="abs_le"),
            Check("lds_minus_rows", payload["lds"] - len(p.shape), 0, relation="abs_le"),
        ]
        headline = {"shape": payload["shape"], "lis": payload["lis"]}
        return ExperimentOutput(rows=rows, payload=payload, headline=headline, checks=checks)

    def _census(self, n: int) -> ExperimentOutput:
        census = tableau_census(n)
        payload = {
            "n": n,
            "counts": {" ".join(map(str, s)): c for s, c in census.counts.items()},
            "square_sum": census.square_sum,
            "factorial": math.factorial(n),
        }
        return ExperimentOutput(
            rows=census.to_rows(),
            payload=payload,
            headline={"shapes": len(census.counts), "square_sum": census.square_sum},
            checks=[Check("square_sum_minus_factorial", census.square_sum - math.factorial(n), 0, relation="abs_le")],
        )

    def _erdos_szekeres(self, n: int) -> ExperimentOutput:
        violations = erdos_szekeres_scan(n)
        payload = {"n": n, "size": n * n + 1, "violations": violations}
        return ExperimentOutput(
            rows=[["n", "size", "violations"], [n, n * n + 1, violations]],
            payload=payload,
            headline={"violations": violations},
            checks=[Check("violations", violations, 0)],
        )
