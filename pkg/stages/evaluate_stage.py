"""
Evaluate stage: score analysed traces against theory and write the report.

Outputs under ``<out>/report``:
    report.json       full EvaluationReport plus config and version
    weak_counts.csv   sequences reaching +-theta per checkpoint
    distances.csv     tvd / hellinger / rmsd rows per checkpoint
    scores.csv        delta_wlil and rmsd_wlil per alpha
"""

import logging

from stages.analyze_stage import TRACES_NAME, load_traces
from stages.run_config import RunConfig
from tools.evaluator_tool import evaluate_traces
from tools.generator_tool import load_manifest
from tools.table_tool import aleph_label, power_label, write_csv, write_json

logger = logging.getLogger(__name__)


def run_evaluate(config: RunConfig) -> dict:
    """
    Evaluate the traces in ``<out>/analysis`` and write the report files.

    Returns:
        dict: A dictionary containing:
            - status: "success" or "error"
            - verdict: "PASS" or "FAIL"
            - report: The report as a dict
            - files: Written output paths
    """
    traces_path = config.analysis_path / TRACES_NAME
    if not traces_path.exists():
        return {"status": "error", "error": f"no traces at {traces_path}; run analyze first", "files": []}

    traces = load_traces(traces_path)
    manifest = load_manifest(config.corpus_path) or {}
    generator = manifest.get("generator", config.generator)
    if manifest.get("hash") and generator != "os-entropy":
        generator = f"{generator}/{manifest['hash']}"

    report = evaluate_traces(
        [traces[i] for i in sorted(traces)],
        generator=generator,
        alphas=config.score_alphas(),
        thresholds=config.thresholds(),
        ideal_method=config.ideal_method,
        tol=config.tolerances(),
    )
    data = report.to_dict()
    data["sequences"] = sorted(traces)
    data["biased_source"] = bool(manifest.get("biased", False))
    data["provenance"] = config.provenance()

    folder = config.report_path
    files = [str(write_json(folder / "report.json", data))]

    points = report.checkpoints
    header = ["alpha", "side"] + [aleph_label(i) for i in range(len(points))]
    rows = [["", "n"] + [power_label(n) for n in points]]
    for key, section in report.weak.items():
        rows.append([key, f"+{section['theta']:g}"] + section["plus"])
        rows.append([key, f"-{section['theta']:g}"] + section["minus"])
    files.append(str(write_csv(folder / "weak_counts.csv", header, rows)))

    files.append(str(write_csv(
        folder / "distances.csv",
        ["metric"] + [power_label(n) for n in points],
        [[metric] + [f"{snap['distances'][metric]:.6f}" for snap in report.snapshots]
         for metric in ("tvd", "hellinger", "rmsd")]
        + [["verdict"] + [snap["verdict"] for snap in report.snapshots]],
    )))

    files.append(str(write_csv(
        folder / "scores.csv",
        ["score"] + list(report.weak.keys()),
        [[name] + [f"{section[name]:.6f}" for section in report.weak.values()]
         for name in ("delta_wlil", "rmsd_wlil")],
    )))

    logger.info("Report for %s written to %s: %s", generator, folder, report.verdict)
    return {"status": "success", "verdict": report.verdict, "report": data, "files": files}
