import json

import pytest
from typer.testing import CliRunner

from lil_audit import EXIT_OK, EXIT_USAGE, EXIT_VERDICT_FAIL, app, main
from tools import __version__

runner = CliRunner()


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.setenv("LILAUDIT_WORKERS", "1")


def test_version():
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_tables_command(tmp_path):
    result = runner.invoke(app, ["tables", "--count", "1", "--out", str(tmp_path)])
    assert result.exit_code == 0, result.stdout
    assert (tmp_path / "tables" / "weak_probabilities.csv").exists()


def test_invalid_alpha_is_usage_error(tmp_path):
    assert main(["tables", "--alpha", "0.5", "--out", str(tmp_path)]) == EXIT_USAGE


def test_unknown_command_is_usage_error():
    assert main(["bogus"]) == EXIT_USAGE


def test_evaluate_without_traces(tmp_path):
    assert main(["evaluate", "--out", str(tmp_path)]) == EXIT_USAGE


def test_config_file_feeds_run(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"checkpoint_count": 2, "m": 100, "out": str(tmp_path / "out")}))
    assert main(["run", "--config", str(config)]) == EXIT_OK
    report = json.loads((tmp_path / "out" / "report" / "report.json").read_text(encoding="utf-8"))
    assert report["verdict"] == "PASS"


def test_biased_run_exits_with_verdict_failure(tmp_path):
    code = main([
        "run", "--generator", "biased-wrapper", "--m", "100", "--count", "2",
        "--workers", "1", "--out", str(tmp_path),
    ])
    assert code == EXIT_VERDICT_FAIL


def test_step_by_step_commands(tmp_path):
    common = ["--m", "100", "--count", "2", "--out", str(tmp_path)]
    assert runner.invoke(app, ["generate", "--hash", "sha256", *common]).exit_code == 0
    assert runner.invoke(app, ["analyze", *common]).exit_code == 0
    result = runner.invoke(app, ["evaluate", *common])
    assert result.exit_code == 0, result.stdout
    assert "PASS" in result.stdout
