"""
Test configuration, tolerance checks, output formatting and result serialization
"""
import json
import math
from fractions import Fraction

import numpy as np
import pytest

from rmt_lab.config import RMTLabConfig
from rmt_lab.core.errors import BudgetExceededError, InputError, ParameterError, RMTLabError
from rmt_lab.core.experiment_base import ExperimentResult
from rmt_lab.core.monte_carlo import lattice_ks_distance, mean_and_stderr, run_trials
from rmt_lab.core.output_writer import dumps, format_number, read_csv, to_jsonable, write_csv, write_json
from rmt_lab.core.tolerance_check import Check, ToleranceChecker
from rmt_lab.utils.rng import trial_rng


def test_experiment_result_serialization():
    """ExperimentResult survives a trip through JSON"""
    result = ExperimentResult(
        command="moments",
        inputs={"m": 8, "seed": 3},
        headline={"genus_coeffs": [14, 70, 21]},
        output_file="output/moments.json",
        checks=[{"name": "z", "value": 0.4, "bound": 5.0, "relation": "abs_le", "passed": True}],
        passed=True,
    )
    loaded = ExperimentResult.from_dict(json.loads(dumps(result.to_dict())))
    assert loaded == result
    assert loaded.schema == 1


def test_result_file_operations(tmp_path):
    result = ExperimentResult(command="km", headline={"determinant": "3/16"})
    path = write_json(tmp_path / "runs" / "km_summary.json", result.to_dict())
    loaded = ExperimentResult.from_dict(json.loads(path.read_text(encoding="utf-8")))
    assert loaded.command == "km"
    assert loaded.headline["determinant"] == "3/16"
    assert loaded.passed is None


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("RMT_LAB_SEED", "77")
    monkeypatch.setenv("RMT_LAB_THREADS", "3")
    monkeypatch.setenv("RMT_LAB_OUTPUT", "/tmp/rmt-out")
    cfg = RMTLabConfig()
    assert cfg.sampling.default_seed == 77
    assert cfg.worker_count() == 3
    assert str(cfg.output.output_dir) == "/tmp/rmt-out"
    assert cfg.validate()


def test_bad_env_value(monkeypatch):
    monkeypatch.setenv("RMT_LAB_SEED", "tomorrow")
    with pytest.raises(ParameterError, match="RMT_LAB_SEED"):
        RMTLabConfig()


def test_validate_rejects_nonpositive_settings():
    cfg = RMTLabConfig.from_dict({"sampling": {"threads": 0}, "numerics": {"painleve_step": -1.0}})
    with pytest.raises(ParameterError) as info:
        cfg.validate()
    assert "sampling.threads" in str(info.value)
    assert "numerics.painleve_step" in str(info.value)


def test_from_dict_keeps_defaults():
    cfg = RMTLabConfig.from_dict({"budgets": {"es_max_n": 4}})
    assert cfg.budgets.es_max_n == 4
    assert cfg.budgets.census_max_n == 8
    assert cfg.output.schema_version == 1


def test_error_exit_codes():
    assert ParameterError("x").exit_code == 2
    assert InputError("x").exit_code == 2
    assert BudgetExceededError("x").exit_code == 3
    assert RMTLabError("x").exit_code == 1
    # usable where plain ValueError is expected
    assert isinstance(InputError("x"), ValueError)


def test_check_relations():
    assert Check("a", 0.5, 1.0).passed
    assert not Check("a", 1.5, 1.0).passed
    assert Check("b", 0.99, 0.9, relation="ge").passed
    assert Check("c", -0.02, 0.03, relation="abs_le").passed
    assert not Check("c", -0.04, 0.03, relation="abs_le").passed
    assert not Check("d", math.nan, 1.0).passed
    with pytest.raises(ValueError):
        Check("e", 0.0, 1.0, relation="lt")


def test_checker_aggregates():
    checker = ToleranceChecker(title="ESD")
    report = checker.collect([Check("l1", 0.02, 0.08), Check("support", 0.5, 0.99, relation="ge")])
    assert not report.passed
    assert report.failing_checks == ["support"]
    assert report.aggregated_text.startswith("=== ESD ===\nSTATUS: FAIL")
    assert "BAD [support]" in report.aggregated_text
    assert checker.collect([]).passed


def test_worst_check():
    checks = [Check("a", 1.1, 1.0), Check("b", 3.0, 1.0), Check("c", 0.1, 1.0)]
    assert ToleranceChecker.worst(checks).name == "b"
    assert ToleranceChecker.worst(checks[2:]) is None


def test_format_number_is_stable():
    assert format_number(True) == "1"
    assert format_number(np.int64(7)) == "7"
    assert format_number(Fraction(3, 16)) == "3/16"
    assert format_number(0.1) == "0.1"
    assert format_number(np.float32(0.5)) == "0.5"
    assert format_number(math.inf) == "inf"
    assert format_number(math.nan) == "nan"


def test_to_jsonable():
    data = {1: np.arange(3), "f": Fraction(1, 2), "z": 1 + 2j, "bad": -math.inf}
    assert to_jsonable(data) == {"1": [0, 1, 2], "f": "1/2", "z": [1.0, 2.0], "bad": "-inf"}


def test_csv_round_trip(tmp_path):
    rows = [["k", "value"], [1, Fraction(1, 3)], [2, 0.25]]
    path = write_csv(tmp_path / "out" / "t.csv", rows)
    assert read_csv(path) == [["k", "value"], ["1", "1/3"], ["2", "0.25"]]
    assert path.read_bytes().endswith(b"\n")


def test_trial_streams():
    a = trial_rng(5, 0).standard_normal(4)
    assert np.array_equal(a, trial_rng(5, 0).standard_normal(4))
    assert not np.array_equal(a, trial_rng(5, 1).standard_normal(4))
    assert not np.array_equal(a, trial_rng(5, 0, 1).standard_normal(4))
    with pytest.raises(ValueError):
        trial_rng(-1, 0)


def test_run_trials_order_independent_of_threads():
    fn = lambda t: float(trial_rng(9, t).standard_normal())
    assert run_trials(fn, 17, threads=1) == run_trials(fn, 17, threads=5)
    with pytest.raises(ValueError):
        run_trials(fn, 0)


def test_mean_and_stderr():
    mean, stderr = mean_and_stderr([1.0, 2.0, 3.0, 4.0])
    assert mean == 2.5
    assert stderr == pytest.approx(math.sqrt(5 / 3) / 2)
    with pytest.raises(ValueError):
        mean_and_stderr([1.0])


def test_lattice_ks_of_exact_lattice_law():
    # fair die on 1..6 against the CDF of the uniform law on [0.5, 6.5]
    sample = np.repeat(np.arange(1, 7), 100)
    cdf = lambda x: np.clip((x - 0.5) / 6.0, 0.0, 1.0)
    assert lattice_ks_distance(sample, cdf, spacing=1.0) < 1e-12
