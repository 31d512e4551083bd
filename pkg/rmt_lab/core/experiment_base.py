"""
Base classes for all experiments in RMT-Lab
"""
import argparse
from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from rmt_lab.config import config
from rmt_lab.core.tolerance_check import Check, ToleranceChecker, ToleranceReport


@dataclass
class ExperimentResult:
    """Outcome of one experiment run, echoed as the JSON summary line"""

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    headline: Dict[str, Any] = field(default_factory=dict)
    output_file: Optional[str] = None
    checks: List[Dict[str, Any]] = field(default_factory=list)
    passed: Optional[bool] = None
    schema: int = field(default_factory=lambda: config.output.schema_version)

    def to_dict(self) -> Dict[str, Any]:
        """Convert result to dictionary for JSON serialization"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentResult":
        """Create ExperimentResult from dictionary"""
        return cls(**data)


@dataclass
class ExperimentOutput:
    """What an experiment hands back to the runner before anything is written"""

    # Either CSV rows (header first) or a JSON-able payload
    rows: Optional[List[List[Any]]] = None
    payload: Optional[Any] = None
    headline: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)


class Experiment(ABC):
    """
    Abstract base class for all CLI experiments

    Subclasses declare a subcommand name, a help line naming the result they
    reproduce, their own arguments, and the computation itself.
    """

    name: str = ""
    description: str = ""
    # Named result the recipe reproduces, shown in --help
    reproduces: str = ""
    default_format: str = "csv"

    def __init__(self):
        self.checker = ToleranceChecker(title=self.name.upper())

    def help_text(self) -> str:
        if not self.reproduces:
            return self.description
        return f"{self.description} (reproduces: {self.reproduces})"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Register subcommand-specific flags"""

    @abstractmethod
    def execute(self, args: argparse.Namespace) -> ExperimentOutput:
        """
        Run the experiment

        Args:
            args: Parsed command-line arguments (common flags included)

        Returns:
            ExperimentOutput with the data to write and the headline statistics
        """
        pass

    def inputs(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Echo of the parsed inputs for the summary line"""
        skip = {"command", "verbose", "output", "format", "handler"}
        return {k: v for k, v in sorted(vars(args).items()) if k not in skip}

    def evaluate(self, checks: List[Check]) -> ToleranceReport:
        return self.checker.collect(checks)

    def __repr__(self):
        return f"<{self.__class__.__name__}(name='{self.name}')>"
