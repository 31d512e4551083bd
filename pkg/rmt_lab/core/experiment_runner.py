"""
Experiment runner - Parses the command line, runs one experiment and writes its output
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Type

from rmt_lab.config import config
from rmt_lab.core.errors import ParameterError, RMTLabError
from rmt_lab.core.experiment_base import Experiment, ExperimentOutput, ExperimentResult
from rmt_lab.core.output_writer import dumps, write_csv, write_json
from rmt_lab.core.tolerance_check import ToleranceChecker

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json")


def int_list(text: str) -> List[int]:
    """argparse type for comma separated integers, e.g. "4,2,3" """
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated numbers, got {text!r}")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {value}")
    return value


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed",
        type=nonnegative_int,
        default=None,
        help=f"Experiment seed (default: RMT_LAB_SEED or {config.sampling.default_seed})",
    )
    common.add_argument("--output", type=Path, default=None, help="Output file (default: <output_dir>/<command>.<format>)")
    common.add_argument("--format", choices=FORMATS, default=None, help="Output format (default depends on command)")
    common.add_argument("--threads", type=positive_int, default=None, help="Worker threads (default: RMT_LAB_THREADS)")
    common.add_argument("--verbose", action="store_true", help="Enable verbose logging")
    return common


class ExperimentRunner:
    """
    Registry of experiments plus the run loop behind the CLI

    Writes exactly one output file per run and prints a one-line JSON
    summary to stdout. Errors map to exit codes through their class.
    """

    def __init__(self, experiments: Iterable[Type[Experiment]], stdout: Optional[TextIO] = None):
        self.experiments: Dict[str, Experiment] = {}
        for cls in experiments:
            experiment = cls()
            if experiment.name in self.experiments:
                raise ValueError(f"Duplicate experiment name: {experiment.name}")
            self.experiments[experiment.name] = experiment
        self.stdout = stdout

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="rmt-lab",
            description="RMT-Lab: exact and Monte Carlo random matrix statistics",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
Examples:
  # Genus expansion of E tr(A^8) for GUE
  python main.py moments --m 8

  # Semicircle law for one 3000 x 3000 GUE matrix
  python main.py esd --ensemble gue --n 3000 --trials 1 --bins 60

  # Circular law, written to a custom file
  python main.py circular --n 3000 --trials 1 --output ./circular.csv
""",
        )
        common = _common_arguments()
        sub = parser.add_subparsers(dest="command", metavar="command")
        sub.required = True
        for name, experiment in self.experiments.items():
            text = experiment.help_text()
            p = sub.add_parser(name, parents=[common], help=text, description=text)
            experiment.add_arguments(p)
        return parser

    def _output_path(self, args: argparse.Namespace, fmt: str) -> Path:
        if args.output is not None:
            return Path(args.output)
        return Path(config.output.output_dir) / f"{args.command}.{fmt}"

    def _write(self, experiment: Experiment, output: ExperimentOutput, args: argparse.Namespace) -> Path:
        fmt = args.format or experiment.default_format
        path = self._output_path(args, fmt)
        if fmt == "csv":
            if output.rows is None:
                raise ParameterError(f"'{experiment.name}' has no tabular output; use --format json")
            return write_csv(path, output.rows)
        if output.payload is not None:
            return write_json(path, output.payload)
        header, *body = output.rows
        return write_json(path, [dict(zip(header, row)) for row in body])

    def execute(self, args: argparse.Namespace) -> ExperimentResult:
        """Run an already parsed command and write its output file"""
        if args.seed is None:
            args.seed = config.sampling.default_seed
        config.validate()
        experiment = self.experiments[args.command]
        logger.info(f"Running {experiment.name} with seed {args.seed}")
        output = experiment.execute(args)
        path = self._write(experiment, output, args)
        report = experiment.evaluate(output.checks)
        if output.checks:
            log = logger.info if report.passed else logger.warning
            log("\n" + report.aggregated_text.rstrip())
            worst = ToleranceChecker.worst(report.checks)
            if worst is not None:
                logger.warning(f"Worst check: {worst.name} = {worst.value:.6g} against {worst.bound:.6g}")
        return ExperimentResult(
            command=experiment.name,
            inputs=experiment.inputs(args),
            headline=output.headline,
            output_file=str(path),
            checks=[c.to_dict() for c in report.checks],
            passed=report.passed if output.checks else None,
        )

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Parse argv, run the command and print the JSON summary

        Returns:
            0 on success, 2 for parameter errors (usage errors included),
            3 for exhausted budgets, 1 for anything else
        """
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return int(e.code or 0)

        configure_logging(args.verbose)
        out = self.stdout or sys.stdout
        try:
            result = self.execute(args)
        except RMTLabError as e:
            logger.error(f"{type(e).__name__}: {e}")
            return e.exit_code
        except KeyboardInterrupt:
            logger.warning(f"{args.command} interrupted by user")
            return 1
        except Exception as e:
            logger.exception(f"Unexpected failure in {args.command}: {e}")
            return 1
        out.write(dumps(result.to_dict()) + "\n")
        out.flush()
        return 0


def configure_logging(verbose: bool = False) -> None:
    """Configure root logging once; records go to stderr"""
    if verbose:
        level, fmt = logging.DEBUG, "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    else:
        level = getattr(logging, str(config.output.log_level).upper(), logging.INFO)
        fmt = "%(asctime)s - %(levelname)s - %(message)s"
    logging.basicConfig(level=level, format=fmt, stream=sys.stderr, force=True)
