"""
RMT-Lab: Random Matrix Theory Laboratory
Main CLI entry point
"""
import sys
from typing import Optional, Sequence, TextIO

from rmt_lab.core.experiment_runner import ExperimentRunner
from rmt_lab.experiments import ALL_EXPERIMENTS


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Run one subcommand and return its exit code"""
    return ExperimentRunner(ALL_EXPERIMENTS, stdout=stdout).run(argv)


def main():
    """Main CLI entry point"""
    sys.exit(run())


if __name__ == '__main__':
    main()
