"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                            CLI Tests                                             │
│                                                                                                  │
│  Description: End-to-end runs of the trapset command through click's test runner.                │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import json

import pytest
from click.testing import CliRunner

from main import cli
from services.tanner_core import regularity
from utils.alist import parse_alist, write_alist
from utils.formula_io import parse_formula, write_formula


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def formula_file(tmp_path, repeated_clause):
    path = tmp_path / "phi.txt"
    path.write_text(write_formula(repeated_clause), encoding="utf-8")
    return str(path)


@pytest.fixture
def k33_file(tmp_path, k33):
    path = tmp_path / "k33.alist"
    path.write_text(write_alist(k33), encoding="utf-8")
    return str(path)


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "1.0.0" in result.output


# reduce


def test_reduce_min_a_lets_to_stdout(runner, formula_file):
    result = runner.invoke(cli, ["reduce", formula_file, "--target", "min-a-lets"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[0] == "15 27"
    assert parse_alist(result.stdout).n_var == 15


def test_reduce_min_b_writes_artifact_trace_and_summary(runner, formula_file, tmp_path):
    out, trace, summary = tmp_path / "g.alist", tmp_path / "trace.json", tmp_path / "s.json"
    result = runner.invoke(
        cli,
        [
            "reduce",
            formula_file,
            "--target",
            "min-b-lets",
            "--alpha",
            "3",
            "--beta",
            "3",
            "--out",
            str(out),
            "--trace",
            str(trace),
            "--summary",
            str(summary),
        ],
    )
    assert result.exit_code == 0, result.output
    graph = parse_alist(out.read_text(encoding="utf-8"))
    report = regularity(graph)
    assert (report.d_v, report.d_c) == (3, 3)
    data = json.loads(summary.read_text(encoding="utf-8"))
    assert data["b"] == 0
    assert data["n_var"] == graph.n_var
    assert data["a"] * 3 == 2 * graph.n_chk
    assert json.loads(trace.read_text(encoding="utf-8"))


def test_reduce_step1_writes_a_formula(runner, formula_file):
    result = runner.invoke(cli, ["reduce", formula_file, "--target", "step1", "--beta", "4"])
    assert result.exit_code == 0, result.output
    upsilon = parse_formula(result.stdout)
    assert (upsilon.n_vars, upsilon.n_clauses, upsilon.beta) == (4, 3, 4)


def test_reduce_missing_parameter_is_a_usage_error(runner, formula_file):
    result = runner.invoke(cli, ["reduce", formula_file, "--target", "step1"])
    assert result.exit_code == 2
    assert "needs --beta" in result.output


def test_malformed_formula_exits_2_with_line(runner, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("p monotone 3 1\nx x y\n", encoding="utf-8")
    result = runner.invoke(cli, ["reduce", str(path), "--target", "step4"])
    assert result.exit_code == 2
    assert "line 2" in result.output


# search


def test_search_min_b(runner, k33_file):
    result = runner.invoke(cli, ["search", k33_file, "--problem", "min-b", "-a", "2"])
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["status"] == "found"
    assert data["b"] == 0
    assert data["witness"] == [0, 1]


def test_search_infeasible_exits_0(runner, k33_file):
    result = runner.invoke(cli, ["search", k33_file, "-a", "1"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["status"] == "infeasible"


def test_search_budget_exceeded_exits_3(runner, k33_file):
    result = runner.invoke(cli, ["search", k33_file, "-a", "2", "--max-nodes", "1"])
    assert result.exit_code == 3
    assert json.loads(result.stdout)["status"] == "budget_exceeded"


def test_search_min_a_needs_b(runner, k33_file):
    result = runner.invoke(cli, ["search", k33_file, "--problem", "min-a"])
    assert result.exit_code == 2
    assert "needs -b" in result.output


def test_search_min_a_with_size_bound(runner, k33_file):
    bounded = runner.invoke(cli, ["search", k33_file, "--problem", "min-a", "-b", "0", "-a", "1"])
    assert bounded.exit_code == 0, bounded.output
    assert json.loads(bounded.stdout)["status"] == "infeasible"
    result = runner.invoke(cli, ["search", k33_file, "--problem", "min-a", "-b", "0", "-a", "2"])
    data = json.loads(result.stdout)
    assert (data["status"], data["a"]) == ("found", 2)


def test_search_enumerate_to_file(runner, k33_file, tmp_path):
    out = tmp_path / "sets.json"
    result = runner.invoke(
        cli,
        ["search", k33_file, "--problem", "enumerate", "-a", "3", "-b", "3", "--json", str(out)],
    )
    assert result.exit_code == 0, result.output
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["status"] == "found"
    assert [entry["a"] for entry in data["entries"]] == [2, 2, 2]


# sat


def test_sat_solve(runner, formula_file):
    result = runner.invoke(cli, ["sat", "solve", formula_file, "--all"])
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["satisfiable"] is True
    assert data["assignment"] == {"x": False, "x'": False, "x''": True}
    assert data["solutions"] == ["FFT", "FTF", "TFF"]


@pytest.mark.parametrize("true_names,gamma,code", [("x", 1, 0), ("x,x'", 1, 1), ("x,x'", 2, 0)])
def test_sat_check(runner, formula_file, true_names, gamma, code):
    result = runner.invoke(
        cli, ["sat", "check", formula_file, "--gamma", str(gamma), "--true", true_names]
    )
    assert result.exit_code == code


def test_sat_check_unknown_name(runner, formula_file):
    result = runner.invoke(cli, ["sat", "check", formula_file, "--true", "w"])
    assert result.exit_code == 2
    assert "unknown variables: w" in result.output


def test_sat_validate(runner, formula_file):
    ok = runner.invoke(cli, ["sat", "validate", formula_file, "--beta", "3", "--cubic"])
    assert ok.exit_code == 0
    assert json.loads(ok.stdout)["valid"] is True
    bad = runner.invoke(cli, ["sat", "validate", formula_file, "--beta", "4"])
    assert bad.exit_code == 1
    assert json.loads(bad.stdout)["violations"]


def test_sat_generate_and_find_unsat(runner, tmp_path):
    generated = runner.invoke(cli, ["sat", "generate", "--vars", "6", "--cubic", "--seed", "1"])
    assert generated.exit_code == 0, generated.output
    formula = parse_formula(generated.stdout)
    assert (formula.n_vars, formula.alpha, formula.beta) == (6, 3, 3)

    out = tmp_path / "unsat.txt"
    found = runner.invoke(cli, ["sat", "find-unsat", "--vars", "6", "--out", str(out)])
    assert found.exit_code == 0, found.output
    solved = runner.invoke(cli, ["sat", "solve", str(out)])
    assert json.loads(solved.stdout)["satisfiable"] is False


# verify and runs


def test_verify_step1_to_json_file(runner, formula_file, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(
        cli, ["verify", "1", "--formula", formula_file, "--beta", "4", "--json", str(out)]
    )
    assert result.exit_code == 0, result.output
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["passed"] is True
    assert report["pipeline"] == "step1"
    assert report["instance"]["params"]["beta"] == 4


def test_verify_default_instance(runner):
    result = runner.invoke(cli, ["verify", "thm2"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["instance"]["source"] == "repeated-clause"
    assert report["passed"] is True


def test_verify_archive_and_runs(runner, tmp_path):
    url = f"sqlite:///{tmp_path}/runs.db"
    result = runner.invoke(cli, ["verify", "4", "--archive", "--archive-url", url])
    assert result.exit_code == 0, result.output

    listing = runner.invoke(cli, ["runs", "--archive-url", url])
    assert listing.exit_code == 0, listing.output
    runs = json.loads(listing.stdout)
    assert [r["pipeline"] for r in runs] == ["step4"]

    shown = runner.invoke(cli, ["runs", "--archive-url", url, "--show", str(runs[0]["id"])])
    assert json.loads(shown.stdout)["pipeline"] == "step4"

    missing = runner.invoke(cli, ["runs", "--archive-url", url, "--show", "99"])
    assert missing.exit_code == 2
    assert "no archived run #99" in missing.output
