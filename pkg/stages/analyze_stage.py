"""
Analyze stage: stream every corpus file once and persist its LIL trace.

Outputs under ``<out>/analysis``:
    traces.csv          sequence, checkpoint, ones, s_star, s_lil
    snapshot_2^k.csv    per-checkpoint cell counts and masses
    snapshots.csv       cell masses for all checkpoints side by side
    plot_data.csv       s_lil at n = 10000 k^2 for external plotting
"""

import logging
import re
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import Callable, Dict, List, Optional

from stages.run_config import RunConfig
from tools.bitstream_tool import CheckpointSet, CountTrace, SequenceSource, stream_count
from tools.errors import LilAuditError
from tools.evaluator_tool import snapshot_counts
from tools.generator_tool import load_manifest, sequence_filename
from tools.lilstat_tool import LilTrace, lil_trace, s_lil
from tools.probability_tool import PARTITION_SIZE, partition_labels
from tools.table_tool import power_label, read_csv, write_csv

logger = logging.getLogger(__name__)

TRACES_NAME = "traces.csv"
PLOT_UNIT = 10000
_SEQUENCE_FILE = re.compile(r"seq_(\d+)\.bin$")


def corpus_files(corpus_dir: Path) -> List[tuple]:
    """(index, path) pairs, from the manifest when present, else by file name."""
    manifest = load_manifest(corpus_dir)
    if manifest is not None:
        return [(entry["index"], corpus_dir / sequence_filename(entry["index"]))
                for entry in sorted(manifest["files"], key=lambda e: e["index"])]
    found = []
    for path in sorted(corpus_dir.glob("seq_*.bin")):
        match = _SEQUENCE_FILE.search(path.name)
        if match:
            found.append((int(match.group(1)), path))
    return found


def _analyze_worker(index: int, path: str, points: tuple, plot: bool, buffer_bytes: int) -> dict:
    """Count one file at the checkpoints (and plot positions); never raises."""
    try:
        source = SequenceSource.from_file(path)
        wanted = set(points)
        plot_points = ()
        if plot and source.total_bits >= PLOT_UNIT:
            plot_points = CheckpointSet.plot_scale(source.total_bits).points
            wanted.update(plot_points)
        merged = CheckpointSet(tuple(sorted(wanted)), min_point=8)
        counted = dict(stream_count(source, merged, buffer_bytes).entries)
        return {
            "status": "success",
            "index": index,
            "counts": [(n, counted[n]) for n in points],
            "plot": [(n, counted[n]) for n in plot_points],
        }
    except LilAuditError as e:
        return {"status": "error", "index": index, "path": path, "error": str(e)}


def load_traces(path: Path) -> Dict[int, LilTrace]:
    """Rebuild LilTraces from a traces CSV, recomputing statistics from the counts."""
    rows = defaultdict(list)
    for row in read_csv(path):
        rows[int(row["sequence"])].append((int(row["checkpoint"]), int(row["ones"])))
    traces = {}
    for index in sorted(rows):
        traces[index] = lil_trace(CountTrace(tuple(sorted(rows[index]))))
    return traces


def run_analyze(config: RunConfig, progress: Optional[Callable[[dict], None]] = None) -> dict:
    """
    Analyze every sequence of the corpus at the configured checkpoints.

    Files that are too short or unreadable are reported individually and
    analysis continues with the rest.

    Returns:
        dict: A dictionary containing:
            - status: "success", "partial" (some files failed) or "error"
            - traces: Number of traces written
            - failures: List of per-file error dicts
            - files: Written output paths
    """
    corpus_dir = config.corpus_path
    files = corpus_files(corpus_dir)
    if not files:
        return {"status": "error", "error": f"no sequence files found in {corpus_dir}", "traces": 0,
                "failures": [], "files": []}

    points = tuple(config.checkpoints())
    logger.info("Analyzing %d sequences at %d checkpoints", len(files), len(points))
    results = []
    if config.workers <= 1 or len(files) <= 1:
        for index, path in files:
            result = _analyze_worker(index, str(path), points, config.plot_data, config.buffer_bytes)
            results.append(result)
            if progress:
                progress(result)
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            futures = [
                executor.submit(_analyze_worker, index, str(path), points, config.plot_data, config.buffer_bytes)
                for index, path in files
            ]
            for future in as_completed(futures):
                result = future.result()
                results.append(result)
                if progress:
                    progress(result)

    results.sort(key=lambda r: r["index"])
    ok = [r for r in results if r["status"] == "success"]
    failures = [r for r in results if r["status"] != "success"]
    for failure in failures:
        logger.warning("Skipping sequence %d: %s", failure["index"], failure["error"])
    if not ok:
        return {"status": "error", "error": "no sequence could be analyzed", "traces": 0,
                "failures": failures, "files": []}

    folder = config.analysis_path
    written = []
    trace_rows = []
    traces = []
    for result in ok:
        trace = lil_trace(CountTrace(tuple(result["counts"])))
        traces.append(trace)
        for n, ones, star, lil in trace.entries:
            trace_rows.append([result["index"], n, ones, repr(star), repr(lil)])
    written.append(str(write_csv(folder / TRACES_NAME, ["sequence", "checkpoint", "ones", "s_star", "s_lil"],
                                 trace_rows)))

    labels = partition_labels()
    columns = []
    for n in points:
        counts = snapshot_counts(traces, n)
        masses = [int(c) / len(traces) for c in counts]
        columns.append(masses)
        written.append(str(write_csv(
            folder / f"snapshot_{power_label(n)}.csv",
            ["cell", "count", "mass"],
            [[labels[k], int(counts[k]), repr(masses[k])] for k in range(PARTITION_SIZE)],
        )))
    written.append(str(write_csv(
        folder / "snapshots.csv",
        ["cell"] + [power_label(n) for n in points],
        [[labels[k]] + [repr(column[k]) for column in columns] for k in range(PARTITION_SIZE)],
    )))

    if config.plot_data:
        plot_rows = [
            [result["index"], k, n, repr(s_lil(ones, n))]
            for result in ok
            for k, (n, ones) in enumerate(result["plot"], start=1)
        ]
        written.append(str(write_csv(folder / "plot_data.csv", ["sequence", "k", "n", "s_lil"], plot_rows)))

    status = "partial" if failures else "success"
    logger.info("Analysis %s: %d traces, %d failures", status, len(ok), len(failures))
    return {"status": status, "traces": len(ok), "failures": failures, "files": written}
