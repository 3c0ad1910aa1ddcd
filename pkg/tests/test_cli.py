# tests/test_cli.py

import json

import pytest
from click.testing import CliRunner

from src.core.formats import emit_graph6
from src.core.graph import Graph
from src.main import EXIT_INCONSISTENT, EXIT_INPUT, EXIT_OK, EXIT_USAGE, cli
from src.models.outputs import DecisionResult, Verdict


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def invoke(runner: CliRunner, *args: str):
    return runner.invoke(cli, list(args))


def write_g6(path, g: Graph) -> str:
    path.write_bytes(emit_graph6(g) + b"\n")
    return str(path)


class TestGenerate:
    def test_complete_graph_to_stdout(self, runner):
        result = invoke(runner, "generate", "--complete", "4")
        assert result.exit_code == EXIT_OK
        assert result.stdout == "C~\n"

    def test_counterexample_with_sidecar_and_dot(self, runner, tmp_path):
        out, dot = tmp_path / "ce.g6", tmp_path / "ce.dot"
        result = invoke(
            runner, "generate", "--counterexample", "--d", "2", "--n", "8",
            "--out", str(out), "--dot", str(dot),
        )
        assert result.exit_code == EXIT_OK
        assert (tmp_path / "ce.roles.json").exists()
        assert '0 [role="CoreHub", owner=0];' in dot.read_text()
        assert out.read_bytes().endswith(b"\n")

    def test_parameter_violation(self, runner):
        result = invoke(runner, "generate", "--counterexample", "--d", "2", "--n", "7")
        assert result.exit_code == EXIT_INPUT
        assert "n < d(d+2)" in result.stderr

    def test_two_families_is_a_usage_error(self, runner):
        result = invoke(runner, "generate", "--complete", "4", "--cycle", "5")
        assert result.exit_code == EXIT_USAGE

    def test_unknown_option_is_a_usage_error(self, runner):
        assert invoke(runner, "generate", "--bogus").exit_code == EXIT_USAGE


class TestVerify:
    def test_small_counterexample_is_confirmed(self, runner):
        result = invoke(runner, "verify", "--counterexample", "--d", "2", "--n", "8", "--no-timing")
        assert result.exit_code == EXIT_OK
        report = json.loads(result.stdout)
        assert report["status"] == "ok"
        verification = report["results"]["verification"]
        assert verification["verdict"] == "CONFIRMED"
        assert verification["spanning_trees"] == "9"
        assert verification["trees_with_degree_two_internal"] == "9"
        assert "wall_time_seconds" not in report

    def test_reports_are_byte_stable(self, runner):
        args = ("verify", "--counterexample", "--d", "3", "--n", "15", "--no-timing")
        assert invoke(runner, *args).stdout == invoke(runner, *args).stdout

    def test_sidecar_labels_are_picked_up(self, runner, tmp_path):
        out = tmp_path / "ce.g6"
        invoke(runner, "generate", "--counterexample", "--d", "2", "--n", "8", "--out", str(out))
        report = json.loads(invoke(runner, "verify", "--input", str(out)).stdout)
        assert report["results"]["verification"]["methods"]["certificate"] == "true"

    def test_complete_graph_is_refuted(self, runner, tmp_path, k4):
        result = invoke(runner, "verify", "--input", write_g6(tmp_path / "k4.g6", k4))
        assert result.exit_code == EXIT_OK
        report = json.loads(result.stdout)
        assert report["status"] == "refuted"
        assert report["fingerprint"] == "C~"
        assert report["results"]["verification"]["hist_witness"] == [[0, 1], [0, 2], [0, 3]]

    def test_disconnected_input(self, runner, tmp_path, disconnected):
        result = invoke(runner, "verify", "--input", write_g6(tmp_path / "g.g6", disconnected))
        assert result.exit_code == EXIT_INPUT
        assert "not connected" in result.stderr

    def test_malformed_input(self, runner, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_bytes(b"C~~\n")
        assert invoke(runner, "verify", "--input", str(path)).exit_code == EXIT_INPUT

    def test_missing_source_is_a_usage_error(self, runner):
        assert invoke(runner, "verify").exit_code == EXIT_USAGE

    def test_inconsistency_exit_code(self, runner, monkeypatch):
        def wrong_decision(graph, k, budget=None, workers=1):
            return DecisionResult(k=k, verdict=Verdict.TRUE, witness=[])

        monkeypatch.setattr("src.nodes.decision.exists_tree_all_internal_at_least", wrong_decision)
        result = invoke(runner, "verify", "--counterexample", "--d", "2", "--n", "8")
        assert result.exit_code == EXIT_INCONSISTENT
        assert "INTERNAL INCONSISTENCY" in result.stderr
        assert json.loads(result.stdout)["status"] == "inconsistent"

    def test_report_file_and_render(self, runner, tmp_path):
        path = tmp_path / "report.json"
        result = invoke(
            runner, "verify", "--counterexample", "--d", "2", "--n", "8", "--report", str(path)
        )
        assert result.exit_code == EXIT_OK
        assert json.loads(path.read_text())["status"] == "ok"

        rendered = invoke(runner, "report", str(path))
        assert rendered.exit_code == EXIT_OK
        assert "CONFIRMED" in rendered.stdout

    def test_report_of_missing_file(self, runner, tmp_path):
        assert invoke(runner, "report", str(tmp_path / "none.json")).exit_code == EXIT_INPUT


class TestSolve:
    def test_count(self, runner):
        result = invoke(runner, "solve", "--counterexample", "--d", "4", "--n", "24", "--count")
        assert result.exit_code == EXIT_OK
        assert json.loads(result.stdout)["results"]["count"]["spanning_trees"] == "3906250000"

    def test_mmid(self, runner, tmp_path, k4):
        result = invoke(runner, "solve", "--input", write_g6(tmp_path / "k4.g6", k4), "--mmid")
        report = json.loads(result.stdout)
        assert report["status"] == "ok"
        assert report["results"]["mmid"]["value"] == 3
        assert report["results"]["mmid"]["exhaustive"] is True

    def test_hist(self, runner):
        result = invoke(runner, "solve", "--counterexample", "--d", "3", "--n", "15", "--hist", "3")
        hist = json.loads(result.stdout)["results"]["hist"]
        assert hist["verdict"] == "false"
        assert hist["witness"] is None

    def test_hist_budget_is_indeterminate(self, runner):
        result = invoke(
            runner, "solve", "--counterexample", "--d", "3", "--n", "15",
            "--hist", "3", "--budget-nodes", "1",
        )
        assert result.exit_code == EXIT_OK
        assert json.loads(result.stdout)["status"] == "indeterminate"

    def test_starfactor_time_budget_is_indeterminate(self, runner):
        result = invoke(
            runner, "solve", "--counterexample", "--d", "4", "--n", "24",
            "--starfactor", "--budget-seconds", "0.5", "--workers", "2",
        )
        assert result.exit_code == EXIT_OK
        report = json.loads(result.stdout)
        assert report["status"] == "indeterminate"
        assert report["results"]["star_factor"]["usage"]["exhausted"] == "time"

    def test_hist_rejects_small_k(self, runner):
        result = invoke(runner, "solve", "--counterexample", "--d", "2", "--n", "8", "--hist", "1")
        assert result.exit_code == EXIT_INPUT

    def test_starfactor(self, runner):
        result = invoke(runner, "solve", "--counterexample", "--d", "2", "--n", "8", "--starfactor")
        results = json.loads(result.stdout)["results"]
        assert results["star_factor"]["value"] == 3
        assert [star["center"] for star in results["star_factor"]["witness"]] == [2, 5]
        assert results["bound"]["optimum"] == 3
        assert results["bound"]["bound"] == pytest.approx(1.42364, abs=1e-5)

    def test_maxleaf(self, runner, tmp_path, c6):
        result = invoke(runner, "solve", "--input", write_g6(tmp_path / "c6.g6", c6), "--maxleaf")
        assert json.loads(result.stdout)["results"]["max_leaf"]["leaf_count"] == 2

    def test_solver_flag_required(self, runner):
        result = invoke(runner, "solve", "--counterexample", "--d", "2", "--n", "8")
        assert result.exit_code == EXIT_USAGE

    def test_mmid_on_counterexample(self, runner):
        result = invoke(runner, "solve", "--counterexample", "--d", "3", "--n", "15", "--mmid")
        mmid = json.loads(result.stdout)["results"]["mmid"]
        assert mmid["value"] == 2
        assert mmid["exhaustive"] is True

    def test_starfactor_on_cycle(self, runner, tmp_path, c6):
        result = invoke(runner, "solve", "--input", write_g6(tmp_path / "c6.g6", c6), "--starfactor")
        results = json.loads(result.stdout)["results"]
        assert results["star_factor"]["value"] == 2
        assert len(results["star_factor"]["witness"]) == 2
        assert results["bound"]["min_degree"] == 2
