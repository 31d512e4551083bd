"""
Tolerance checks - Aggregates headline statistics and determines pass/fail
"""
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional


@dataclass
class Check:
    """One headline statistic compared against a bound"""

    name: str
    value: float
    bound: float
    # "le": value <= bound, "ge": value >= bound, "abs_le": |value| <= bound
    relation: str = "le"
    note: str = ""

    def __post_init__(self):
        if self.relation not in ("le", "ge", "abs_le"):
            raise ValueError(f"Unknown relation: {self.relation}")

    @property
    def passed(self) -> bool:
        if math.isnan(self.value):
            return False
        if self.relation == "le":
            return self.value <= self.bound
        if self.relation == "ge":
            return self.value >= self.bound
        return abs(self.value) <= self.bound

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "value": self.value,
            "bound": self.bound,
            "relation": self.relation,
            "passed": self.passed,
        }


@dataclass
class ToleranceReport:
    """Result of a round of checks"""

    passed: bool
    checks: List[Check] = field(default_factory=list)
    failing_checks: List[str] = field(default_factory=list)
    aggregated_text: str = ""

    def to_dict(self) -> Dict:
        return {
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "failing_checks": list(self.failing_checks),
        }


class ToleranceChecker:
    """
    Collects checks from an experiment and determines whether the run passes

    A run passes only if every single check passes.
    """

    def __init__(self, title: Optional[str] = None):
        self.title = title or "TOLERANCE CHECKS"

    def collect(self, checks: List[Check]) -> ToleranceReport:
        """
        Aggregate a list of checks

        Args:
            checks: Checks produced by an experiment (may be empty)

        Returns:
            ToleranceReport with pass/fail determination and a text summary
        """
        failing = [c.name for c in checks if not c.passed]
        passed = not failing
        return ToleranceReport(
            passed=passed,
            checks=list(checks),
            failing_checks=failing,
            aggregated_text=self._aggregate(checks, passed),
        )

    def _aggregate(self, checks: List[Check], passed: bool) -> str:
        result = f"=== {self.title} ===\n"
        result += f"STATUS: {'PASS' if passed else 'FAIL'}\n"
        symbols = {"le": "<=", "ge": ">=", "abs_le": "|.| <="}
        for c in checks:
            mark = "ok " if c.passed else "BAD"
            result += f"{mark} [{c.name}] {c.value:.6g} {symbols[c.relation]} {c.bound:.6g}"
            result += f"  ({c.note})\n" if c.note else "\n"
        return result

    @staticmethod
    def worst(checks: List[Check]) -> Optional[Check]:
        """Failing check with the largest relative excess, if any"""
        failing = [c for c in checks if not c.passed]
        if not failing:
            return None

        def excess(c: Check) -> float:
            scale = abs(c.bound) or 1.0
            v = abs(c.value) if c.relation == "abs_le" else c.value
            return abs(v - c.bound) / scale

        return max(failing, key=excess)
