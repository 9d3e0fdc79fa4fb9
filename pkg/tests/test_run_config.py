import json

import pytest

from stages.run_config import RunConfig
from tools.errors import ConfigError


def test_base_exponent_depends_on_command():
    assert RunConfig(command="tables").base_exp == 26
    assert RunConfig(command="generate").base_exp == 16
    assert RunConfig(command="generate", checkpoint_base_exp=20).base_exp == 20


def test_desk_defaults():
    config = RunConfig(command="run")
    assert config.m == 1000
    assert config.theta == pytest.approx(0.9)
    assert config.checkpoints().points == tuple(1 << e for e in range(16, 25))
    assert config.sequence_bits == 1 << 24
    assert config.score_alphas() == (0.1, 0.05)
    assert RunConfig(command="run", alpha=0.05).score_alphas() == (0.05, 0.1)


def test_layering_env_file_flags(tmp_path, monkeypatch):
    monkeypatch.setenv("LILAUDIT_OUTPUT_DIR", str(tmp_path / "from-env"))
    monkeypatch.setenv("LILAUDIT_WORKERS", "3")
    config = RunConfig.from_sources("generate")
    assert config.out == str(tmp_path / "from-env")
    assert config.workers == 3

    path = tmp_path / "config.json"
    path.write_text(json.dumps({"out": str(tmp_path / "from-file"), "m": 20}))
    config = RunConfig.from_sources("generate", config_file=str(path))
    assert config.out == str(tmp_path / "from-file")
    assert config.m == 20

    config = RunConfig.from_sources("generate", config_file=str(path), m=7, alpha=None)
    assert config.m == 7
    assert config.alpha == pytest.approx(0.1)


@pytest.mark.parametrize(
    "overrides",
    [
        {"alpha": 0.5},
        {"alpha": 0.0},
        {"checkpoint_count": 0},
        {"generator": "lcg"},
        {"hash": "md5"},
        {"workers": 0},
        {"ideal_method": "exact"},
        {"bits_each": 1 << 10},
        {"checkpoint_base_exp": 10},
        {"colour": "blue"},
    ],
)
def test_invalid_settings_raise_config_error(overrides, monkeypatch):
    monkeypatch.setenv("LILAUDIT_WORKERS", "1")
    with pytest.raises(ConfigError):
        RunConfig.from_sources("generate", **overrides)


def test_bad_config_files(tmp_path, monkeypatch):
    monkeypatch.setenv("LILAUDIT_WORKERS", "1")
    with pytest.raises(ConfigError):
        RunConfig.from_sources("tables", config_file=str(tmp_path / "missing.json"))
    path = tmp_path / "list.json"
    path.write_text("[1, 2]")
    with pytest.raises(ConfigError):
        RunConfig.from_sources("tables", config_file=str(path))
    path.write_text(json.dumps({"unknown_key": 1}))
    with pytest.raises(ConfigError):
        RunConfig.from_sources("tables", config_file=str(path))


def test_bad_environment(monkeypatch):
    monkeypatch.setenv("LILAUDIT_WORKERS", "many")
    with pytest.raises(ConfigError):
        RunConfig.from_sources("tables")


def test_provenance_records_resolved_checkpoints():
    config = RunConfig(command="tables", checkpoint_count=2)
    provenance = config.provenance()
    assert provenance["config"]["checkpoints"] == [1 << 26, 1 << 27]
    assert provenance["config"]["resolved_base_exp"] == 26
    assert provenance["version"]
    assert config.with_command("evaluate").command == "evaluate"
