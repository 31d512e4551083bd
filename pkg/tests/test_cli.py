"""
Test the command-line surface: output files, summary line and exit codes
"""
import io
import json

import pytest

from rmt_lab.core.output_writer import read_csv
from rmt_lab.main import run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    lines = out.getvalue().splitlines()
    return code, json.loads(lines[0]) if lines else None


def test_moments_genus_coefficients(tmp_output):
    code, summary = invoke("moments", "--m", "8")
    assert code == 0
    assert summary["schema"] == 1
    assert summary["command"] == "moments"
    assert summary["headline"]["genus_coeffs"] == [14, 70, 21]
    payload = json.loads((tmp_output / "moments.json").read_text(encoding="utf-8"))
    assert payload["genus_coeffs"] == [14, 70, 21]
    assert payload["pairings"] == 105


def test_summary_echoes_inputs(tmp_output):
    code, summary = invoke("km", "--seed", "11")
    assert code == 0
    assert summary["inputs"]["seed"] == 11
    assert summary["inputs"]["starts"] == [2, 0]
    assert summary["inputs"]["up"] == "1/2"
    assert summary["output_file"].endswith("km.json")


def test_km_example(tmp_output):
    code, summary = invoke("km")
    assert code == 0
    assert summary["passed"] is True
    payload = json.loads((tmp_output / "km.json").read_text(encoding="utf-8"))
    assert payload["determinant"] == "3/16"
    assert payload["enumeration"] == "3/16"
    assert payload["transition_matrix"] == [["1/2", "1/4"], ["1/4", "1/2"]]


def test_rsk_default_permutation(tmp_output):
    code, summary = invoke("rsk")
    assert code == 0
    assert summary["passed"] is True
    payload = json.loads((tmp_output / "rsk.json").read_text(encoding="utf-8"))
    assert payload["P"] == [[1, 3, 5, 7], [2, 6], [4]]
    assert payload["Q"] == [[1, 3, 4, 7], [2, 5], [6]]
    assert (payload["lis"], payload["lds"], payload["min_sorting_moves"]) == (4, 3, 3)


def test_rsk_census_csv(tmp_output):
    code, _ = invoke("rsk", "--mode", "census", "--n", "4", "--format", "csv")
    assert code == 0
    rows = read_csv(tmp_output / "rsk.csv")
    assert rows[0] == ["shape", "count"]
    assert sum(int(c) ** 2 for _, c in rows[1:]) == 24


def test_gv_hankel_rows(tmp_output):
    code, summary = invoke("gv", "--mode", "hankel", "--n", "6")
    assert code == 0
    assert summary["passed"] is True
    rows = read_csv(tmp_output / "gv.csv")
    assert rows[0] == ["n", "determinant"]
    assert [r[1] for r in rows[1:]] == ["1"] * 7


def test_json_format_for_tabular_commands(tmp_output):
    code, _ = invoke("gv", "--mode", "hankel", "--n", "2", "--format", "json")
    assert code == 0
    records = json.loads((tmp_output / "gv.json").read_text(encoding="utf-8"))
    assert records == [{"n": 0, "determinant": 1}, {"n": 1, "determinant": 1}, {"n": 2, "determinant": 1}]


def test_custom_output_path(tmp_output):
    target = tmp_output / "nested" / "sample.csv"
    code, summary = invoke("sample", "--n", "4", "--trials", "2", "--output", str(target))
    assert code == 0
    assert summary["output_file"] == str(target)
    rows = read_csv(target)
    assert rows[0] == ["trial", "index", "eigenvalue"]
    assert len(rows) == 1 + 8


@pytest.mark.parametrize(
    "argv",
    [
        ("km", "--starts", "0,2", "--ends", "0,2"),
        ("sample", "--ensemble", "wishart", "--n", "5"),
        ("stieltjes", "--mode", "concentration", "--trials", "10"),
        ("rsk", "--perm", "1,1,2"),
        ("sample", "--ensemble", "gue", "--entries", "rademacher"),
    ],
)
def test_parameter_errors_exit_2(tmp_output, argv):
    code, summary = invoke(*argv)
    assert code == 2
    assert summary is None


@pytest.mark.parametrize(
    "argv",
    [
        ("moments", "--m", "30"),
        ("gv", "--mode", "hankel", "--n", "13"),
        ("rsk", "--mode", "census", "--n", "9"),
        ("rsk", "--mode", "erdos-szekeres", "--n", "4"),
        ("km", "--horizon", "40"),
    ],
)
def test_budget_errors_exit_3(tmp_output, argv):
    code, summary = invoke(*argv)
    assert code == 3
    assert summary is None


def test_usage_errors_exit_2(tmp_output):
    assert invoke("moments", "--m", "4", "--bogus")[0] == 2
    assert invoke("moments")[0] == 2
    assert invoke("no-such-command")[0] == 2
    assert invoke("sample", "--n", "0")[0] == 2


def test_failed_check_still_exits_0(tmp_output):
    code, summary = invoke("esd", "--n", "20", "--trials", "1", "--tolerance", "1e-9")
    assert code == 0
    assert summary["passed"] is False
    assert any(c["name"] == "l1_distance" and not c["passed"] for c in summary["checks"])


def test_failed_run_names_worst_check(tmp_output, capsys):
    code, _ = invoke("esd", "--n", "20", "--trials", "1", "--tolerance", "1e-9")
    assert code == 0
    assert "Worst check: l1_distance" in capsys.readouterr().err


def test_identical_runs_identical_bytes(tmp_output):
    first, second = tmp_output / "a.csv", tmp_output / "b.csv"
    assert invoke("esd", "--n", "40", "--trials", "3", "--seed", "5", "--threads", "1", "--output", str(first))[0] == 0
    assert invoke("esd", "--n", "40", "--trials", "3", "--seed", "5", "--threads", "3", "--output", str(second))[0] == 0
    assert first.read_bytes() == second.read_bytes()


def test_seed_changes_output(tmp_output):
    first, second = tmp_output / "a.csv", tmp_output / "b.csv"
    invoke("sample", "--n", "5", "--seed", "1", "--output", str(first))
    invoke("sample", "--n", "5", "--seed", "2", "--output", str(second))
    assert first.read_bytes() != second.read_bytes()


def test_every_command_has_help(capsys):
    from rmt_lab.core.experiment_runner import ExperimentRunner
    from rmt_lab.experiments import ALL_EXPERIMENTS

    runner = ExperimentRunner(ALL_EXPERIMENTS)
    assert len(runner.experiments) == 15
    assert run(["--help"]) == 0
    text = capsys.readouterr().out
    for name in runner.experiments:
        assert name in text


@pytest.mark.parametrize(
    "command, result",
    [
        ("moments", "genus expansion of GUE moments"),
        ("tracy-widom", "Tracy-Widom law via Painleve II"),
        ("km", "Karlin-McGregor formula"),
        ("bdj", "Baik-Deift-Johansson theorem"),
        ("circular", "circular law for Ginibre matrices"),
    ],
)
def test_subcommand_help_names_result(capsys, command, result):
    assert run([command, "--help"]) == 0
    # argparse rewraps the text, hyphens included
    text = "".join(capsys.readouterr().out.split())
    assert "".join(f"(reproduces: {result})".split()) in text


def test_every_subcommand_names_a_result(capsys):
    from rmt_lab.experiments import ALL_EXPERIMENTS

    for cls in ALL_EXPERIMENTS:
        experiment = cls()
        assert experiment.reproduces
        assert run([experiment.name, "--help"]) == 0
        text = "".join(capsys.readouterr().out.split())
        assert "".join(experiment.help_text().split()) in text


@pytest.mark.parametrize(
    "argv",
    [
        ("stieltjes",),
        ("density", "--n", "3", "--grid", "101"),
        ("hz", "--k-max", "6", "--verify", "4"),
        ("freeness", "--trials", "0", "--max-power", "2"),
        ("gv",),
        ("gv", "--mode", "random", "--trials", "5"),
        ("rsk", "--mode", "erdos-szekeres", "--n", "2"),
        ("km", "--starts", "4,2,0", "--ends", "4,2,0", "--horizon", "4"),
    ],
)
def test_exact_recipes_pass(tmp_output, argv):
    code, summary = invoke(*argv)
    assert code == 0
    assert summary["passed"] is True


def test_dyson_trajectory(tmp_output):
    code, summary = invoke("dyson", "--n", "3", "--steps", "20", "--trials", "3")
    assert code == 0
    assert summary["headline"]["collisions"] == 0
    rows = read_csv(tmp_output / "dyson.csv")
    assert rows[0] == ["step", "lambda_1", "lambda_2", "lambda_3"]
    assert len(rows) == 21
    assert all(float(r[1]) < float(r[2]) < float(r[3]) for r in rows[1:])


def test_tracy_widom_table(tmp_output):
    code, summary = invoke("tracy-widom")
    assert code == 0
    assert summary["passed"] is True
    assert -1.85 <= summary["headline"]["median"] <= -1.75
    rows = read_csv(tmp_output / "tracy-widom.csv")
    assert rows[0] == ["t", "F2"]


def test_stieltjes_mp_compares_closed_form(tmp_output):
    code, summary = invoke("stieltjes", "--measure", "mp", "--a", "0.1", "--b", "2.8", "--grid", "21")
    assert code == 0
    assert summary["headline"]["closed_form_gap"] <= 1e-6
    assert any(c["name"] == "closed_form_gap" and c["passed"] for c in summary["checks"])


def test_concentration_checks_resolvent_identities(tmp_output):
    code, summary = invoke("stieltjes", "--mode", "concentration", "--n", "20", "--trials", "100")
    assert code == 0
    checks = {c["name"]: c for c in summary["checks"]}
    assert checks["perturbation_gap"]["passed"] and checks["derivative_error"]["passed"]
    assert summary["headline"]["perturbation_gap"] <= summary["headline"]["perturbation_bound"]
