"""
Configuration management for RMT-Lab
"""
import os
from dataclasses import dataclass, field
from typing import Dict, Tuple
from pathlib import Path
from dotenv import load_dotenv

from rmt_lab.core.errors import ParameterError

# Load environment variables from .env file
load_dotenv()

DEFAULT_SEED = 20240601


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"{name} must be an integer, got {raw!r}")


@dataclass
class SamplingConfig:
    """Random streams and parallelism for Monte Carlo runs"""

    # Never time-based: identical configs must give identical output files
    default_seed: int = field(default_factory=lambda: _env_int("RMT_LAB_SEED", DEFAULT_SEED))
    threads: int = field(
        default_factory=lambda: _env_int("RMT_LAB_THREADS", min(8, os.cpu_count() or 1))
    )


@dataclass
class NumericsConfig:
    """Tolerances and solver settings"""

    eigen_tolerance: float = 1e-10
    sweep_cap_factor: int = 50
    quadrature_tolerance: float = 1e-8
    stieltjes_eps_schedule: Tuple[float, ...] = (1e-1, 1e-2, 1e-3, 1e-4)
    painleve_boundary: float = 8.0
    painleve_left: float = -6.0
    painleve_step: float = 1e-3
    gaussian_cutoff: float = 1e-16


@dataclass
class BudgetConfig:
    """Enumeration budgets; exceeding one raises BudgetExceededError"""

    max_pairing_order: int = 24
    # Pairings actually enumerated; (m-1)!! passes it for m >= 22
    max_pairing_count: int = 10**9
    max_partition_order: int = 12
    km_max_horizon: int = 30
    km_max_walkers: int = 5
    gv_max_paths: int = 4
    es_max_n: int = 3
    census_max_n: int = 8
    hankel_max_n: int = 12
    max_path_count: int = 200_000


@dataclass
class OutputConfig:
    """Output and logging settings"""

    output_dir: Path = field(default_factory=lambda: Path(os.getenv("RMT_LAB_OUTPUT", "./output")))
    log_level: str = field(default_factory=lambda: os.getenv("RMT_LAB_LOG_LEVEL", "INFO"))
    schema_version: int = 1


@dataclass
class RMTLabConfig:
    """Main configuration container"""

    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    numerics: NumericsConfig = field(default_factory=NumericsConfig)
    budgets: BudgetConfig = field(default_factory=BudgetConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    @classmethod
    def from_dict(cls, config_dict: Dict) -> "RMTLabConfig":
        """Create config from dictionary"""
        return cls(
            sampling=SamplingConfig(**config_dict.get("sampling", {})),
            numerics=NumericsConfig(**config_dict.get("numerics", {})),
            budgets=BudgetConfig(**config_dict.get("budgets", {})),
            output=OutputConfig(**config_dict.get("output", {})),
        )

    def worker_count(self) -> int:
        """Number of Monte Carlo worker threads (RMT_LAB_THREADS caps it)"""
        return max(1, int(self.sampling.threads))

    def validate(self) -> bool:
        """Validate that every numeric setting is usable"""
        positive = {
            "sampling.threads": self.sampling.threads,
            "numerics.eigen_tolerance": self.numerics.eigen_tolerance,
            "numerics.sweep_cap_factor": self.numerics.sweep_cap_factor,
            "numerics.quadrature_tolerance": self.numerics.quadrature_tolerance,
            "numerics.painleve_step": self.numerics.painleve_step,
            "budgets.max_pairing_order": self.budgets.max_pairing_order,
            "budgets.max_path_count": self.budgets.max_path_count,
        }
        bad = [name for name, value in positive.items() if not value > 0]
        if self.sampling.default_seed < 0:
            bad.append("sampling.default_seed")
        if bad:
            raise ParameterError(f"Invalid configuration values: {', '.join(bad)}")
        return True


# Global config instance
config = RMTLabConfig()
