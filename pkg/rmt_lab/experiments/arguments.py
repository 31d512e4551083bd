"""
Shared ensemble flags for the CLI recipes
"""
import argparse
from typing import Sequence

from rmt_lab.core.experiment_runner import positive_int
from rmt_lab.ensembles.ensemble_base import DiagonalMode, EnsembleKind, EnsembleSpec, EntryLaw, Normalization


def add_ensemble_arguments(
    parser: argparse.ArgumentParser,
    kinds: Sequence[EnsembleKind] = tuple(EnsembleKind),
    default_kind: EnsembleKind = EnsembleKind.GUE,
    default_n: int = 100,
    default_trials: int = 1,
) -> None:
    parser.add_argument(
        "--ensemble", choices=[k.value for k in kinds], default=default_kind.value, help="Matrix ensemble"
    )
    parser.add_argument("--n", type=positive_int, default=default_n, help=f"Dimension N (default: {default_n})")
    parser.add_argument("--p", type=positive_int, default=None, help="Second dimension p (Wishart only)")
    parser.add_argument(
        "--normalization", choices=[v.value for v in Normalization], default=Normalization.NORMALIZED.value
    )
    parser.add_argument("--entries", choices=[v.value for v in EntryLaw], default=EntryLaw.GAUSS.value)
    parser.add_argument("--diagonal", choices=[v.value for v in DiagonalMode], default=DiagonalMode.STANDARD.value)
    parser.add_argument("--complex-entries", action="store_true", help="Complex i.i.d. entries (Wigner, Wishart)")
    parser.add_argument(
        "--trials", type=positive_int, default=default_trials, help=f"Number of matrices (default: {default_trials})"
    )


def spec_from_args(args: argparse.Namespace) -> EnsembleSpec:
    """EnsembleSpec from the shared flags; validation errors surface as ParameterError"""
    return EnsembleSpec(
        kind=args.ensemble,
        n=args.n,
        p=args.p,
        normalization=args.normalization,
        entry_law=args.entries,
        diagonal=args.diagonal,
        complex_entries=args.complex_entries,
        seed=args.seed,
    )
