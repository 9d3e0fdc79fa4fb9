import json
import shutil

import pytest

from stages import RunConfig, audit_pipeline, run_analyze, run_evaluate, run_generate, run_tables
from stages.analyze_stage import TRACES_NAME, load_traces
from tools.generator_tool import MANIFEST_NAME, sequence_filename
from tools.lilstat_tool import s_lil
from tools.table_tool import read_csv


def _config(tmp_path, **kwargs):
    values = {"command": "run", "checkpoint_count": 3, "m": 120, "out": str(tmp_path / "out")}
    values.update(kwargs)
    return RunConfig(**values)


def test_tables_single_checkpoint(tmp_path):
    result = run_tables(RunConfig(command="tables", checkpoint_count=1, out=str(tmp_path)))
    assert result["status"] == "success"
    names = sorted(p.split("/")[-1] for p in result["files"])
    assert names == ["mu_u.csv", "tables.json", "weak_probabilities.csv"]

    rows = read_csv(tmp_path / "tables" / "weak_probabilities.csv")
    assert [row["alpha"] for row in rows] == ["0.1", "0.05"]
    assert float(rows[0]["ℵ0"]) == pytest.approx(0.03044, abs=5e-5)
    assert float(rows[1]["ℵ0"]) == pytest.approx(0.02234, abs=5e-5)

    mu = read_csv(tmp_path / "tables" / "mu_u.csv")
    assert len(mu) == 21
    assert mu[0]["cell"] == "[0.00,0.05)"
    assert float(mu[0]["2^26"]) == pytest.approx(0.047854, abs=5e-6)

    data = json.loads((tmp_path / "tables" / "tables.json").read_text(encoding="utf-8"))
    assert data["weak"]["0.1"]["0,0"]["published"] == 0.03044
    assert data["triples"] == [] and data["strong"] == []


def test_tables_off_published_grid_have_no_reference(tmp_path):
    result = run_tables(RunConfig(command="tables", checkpoint_base_exp=20, checkpoint_count=2, out=str(tmp_path)))
    cell = result["tables"]["weak"]["0.1"]["0,1"]
    assert cell["published"] is None
    assert 0 < cell["value"] < 1


@pytest.mark.slow
def test_tables_full_grid(tmp_path):
    result = run_tables(RunConfig(command="tables", out=str(tmp_path)))
    tables = result["tables"]
    for entry in tables["triples"]:
        assert entry["value"] == pytest.approx(entry["published"], abs=2e-4)
    for entry in tables["strong"]:
        assert entry["value"] == pytest.approx(entry["published"], abs=1e-5)
    (bracket,) = tables["four_point"]
    assert bracket["lower"] == pytest.approx(bracket["published"][0], abs=2e-4)
    assert bracket["upper"] == pytest.approx(bracket["published"][1], abs=2e-4)
    kinds = [row["kind"] for row in read_csv(tmp_path / "tables" / "examples.csv")]
    assert kinds.count("triple") == 5 and kinds.count("four-point") == 1 and kinds.count("strong") == 2
    assert float(result["tables"]["mu_u"]["2^27"][22]) == pytest.approx(0.047464, abs=5e-6)


def test_generate_writes_corpus(tmp_path):
    config = _config(tmp_path, m=5)
    result = run_generate(config)
    assert result["status"] == "success"
    files = sorted(config.corpus_path.glob("seq_*.bin"))
    assert len(files) == 5
    assert all(path.stat().st_size == (1 << 18) // 8 for path in files)

    (config.corpus_path / sequence_filename(3)).unlink()
    seen = []
    run_generate(config, progress=seen.append)
    assert [r["index"] for r in seen] == [3]


def test_analyze_shape_and_determinism(tmp_path):
    config = _config(tmp_path, m=6)
    run_generate(config)
    result = run_analyze(config)
    assert result["status"] == "success"
    assert result["traces"] == 6
    first = (config.analysis_path / TRACES_NAME).read_bytes()
    rows = read_csv(config.analysis_path / TRACES_NAME)
    assert len(rows) == 6 * 3
    assert {int(row["checkpoint"]) for row in rows} == {1 << 16, 1 << 17, 1 << 18}
    for row in rows:
        assert float(row["s_lil"]) == s_lil(int(row["ones"]), int(row["checkpoint"]))

    snapshot = read_csv(config.analysis_path / "snapshot_2^16.csv")
    assert len(snapshot) == 42
    assert sum(int(row["count"]) for row in snapshot) == 6
    plot = read_csv(config.analysis_path / "plot_data.csv")
    assert {int(row["n"]) for row in plot} == {10000 * k * k for k in range(1, 6)}

    run_analyze(config)
    assert (config.analysis_path / TRACES_NAME).read_bytes() == first
    traces = load_traces(config.analysis_path / TRACES_NAME)
    assert sorted(traces) == list(range(6))


def test_analyze_reports_short_files(tmp_path):
    config = _config(tmp_path, checkpoint_count=1, corpus_dir=str(tmp_path / "raw"))
    config.corpus_path.mkdir(parents=True)
    (config.corpus_path / sequence_filename(0)).write_bytes(b"\xaa" * (1 << 13))
    (config.corpus_path / sequence_filename(1)).write_bytes(b"\xaa" * 100)
    result = run_analyze(config)
    assert result["status"] == "partial"
    assert [failure["index"] for failure in result["failures"]] == [1]
    rows = read_csv(config.analysis_path / TRACES_NAME)
    assert rows == [{"sequence": "0", "checkpoint": "65536", "ones": "32768", "s_star": "0.0", "s_lil": "0.0"}]


def test_analyze_without_corpus(tmp_path):
    config = _config(tmp_path)
    assert run_analyze(config)["status"] == "error"
    assert run_evaluate(config)["status"] == "error"


def test_pipeline_on_counter_corpus(tmp_path):
    config = _config(tmp_path)
    result = audit_pipeline.run(config)
    assert result["status"] == "success"
    assert [stage["stage"] for stage in result["stages"]] == ["generate", "analyze", "evaluate"]
    assert result["verdict"] == "PASS"
    report = json.loads((config.report_path / "report.json").read_text(encoding="utf-8"))
    assert report["m"] == 120
    assert report["sequences"] == list(range(120))
    assert report["biased_source"] is False
    assert report["generator"] == "counter-prng/sha1"
    assert set(report["weak"]) == {"0.1", "0.05"}
    assert len(report["snapshots"]) == 3
    assert report["provenance"]["config"]["m"] == 120
    for name in ("weak_counts.csv", "distances.csv", "scores.csv"):
        assert (config.report_path / name).exists()


def test_pipeline_is_byte_reproducible(tmp_path):
    config = _config(tmp_path, m=20, generator="hash-drbg", generator_params={"uses_per_v": 64})
    outputs = [config.corpus_path / MANIFEST_NAME, config.analysis_path / TRACES_NAME,
               config.report_path / "report.json"]
    audit_pipeline.run(config)
    first = [path.read_bytes() for path in outputs]
    shutil.rmtree(config.out_dir)
    audit_pipeline.run(config)
    assert [path.read_bytes() for path in outputs] == first


def test_small_corpus_warns(tmp_path):
    config = _config(tmp_path, m=50)
    result = audit_pipeline.run(config)
    report = result["stages"][-1]["report"]
    assert any("below the recommended minimum" in w for w in report["warnings"])


def test_biased_corpus_fails(tmp_path):
    config = _config(tmp_path, generator="biased-wrapper")
    result = audit_pipeline.run(config)
    assert result["verdict"] == "FAIL"
    report = result["stages"][-1]["report"]
    assert report["biased_source"] is True
    assert all(snap["verdict"] == "FAIL" for snap in report["snapshots"])
    assert all(snap["distances"]["tvd"] > 0.5 for snap in report["snapshots"])


@pytest.mark.slow
def test_os_entropy_baseline_at_desk_scale(tmp_path):
    config = RunConfig(command="run", generator="os-entropy", m=1000, out=str(tmp_path / "out"), workers=4)
    result = audit_pipeline.run(config)
    assert result["verdict"] == "PASS"
    report = result["stages"][-1]["report"]
    assert [snap["checkpoint"] for snap in report["snapshots"]] == [1 << e for e in range(16, 25)]
    assert all(snap["tvd_excess"] < 0.05 for snap in report["snapshots"])
