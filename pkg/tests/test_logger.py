# tests/test_logger.py

from click.testing import CliRunner
from structlog.contextvars import get_contextvars

from src.main import cli
from src.utils.logger import bind_run_context


class TestRunContext:
    def test_binds_graph_and_mode(self):
        run_id = bind_run_context("solve", mode="mmid", n=15, d=3, workers=2)
        context = get_contextvars()
        assert context == {
            "run_id": run_id,
            "command": "solve",
            "mode": "mmid",
            "n": 15,
            "d": 3,
            "workers": 2,
        }

    def test_rebinding_replaces_previous_run(self):
        first = bind_run_context("solve", mode="count", n=8, d=2)
        second = bind_run_context("verify", n=24)
        assert first != second
        context = get_contextvars()
        assert context["run_id"] == second
        assert "mode" not in context
        assert "d" not in context

    def test_verify_binds_counterexample_context(self):
        result = CliRunner().invoke(
            cli, ["verify", "--counterexample", "--d", "2", "--n", "8", "--no-timing"]
        )
        assert result.exit_code == 0
        context = get_contextvars()
        assert context["command"] == "verify"
        assert (context["n"], context["d"]) == (8, 2)

