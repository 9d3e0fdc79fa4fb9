"""
Tables stage: theoretical probability tables, independent of any corpus.

Emits the pair-test probability matrix for both standard significance
levels, the ideal snapshot distribution, three-point and strong-test values
for the standard checkpoint combinations, and the four-point bracket.
"""

import logging
from typing import Dict, List

from reference import published_tables
from stages.run_config import RunConfig
from tools.evaluator_tool import weak_theory
from tools.probability_tool import (
    PARTITION_SIZE,
    mu_U,
    partition_labels,
    strong_prob,
    weak_prob_3,
    weak_prob_4_bounds,
)
from tools.table_tool import (
    aleph_label,
    aleph_union_label,
    column_matrix_rows,
    power_label,
    weak_matrix_rows,
    write_csv,
    write_json,
)

logger = logging.getLogger(__name__)

TABLE_ALPHAS = (0.1, 0.05)
TRIPLE_SETS = (
    (0.1, (0, 3, 6)),
    (0.1, (0, 3, 8)),
    (0.1, (0, 6, 8)),
    (0.1, (3, 6, 8)),
    (0.05, (0, 4, 8)),
)
FOUR_POINT_SETS = ((0.1, (0, 3, 6, 8)),)
STRONG_PAIRS = ((0.1, (0, 7)), (0.1, (0, 8)))

# Half of the partition, from [0, 0.05) up to [1, inf)
UPPER_HALF = range(PARTITION_SIZE // 2, PARTITION_SIZE)


def _published(table: Dict, key, config: RunConfig):
    """Published value for ``key`` when running at the published checkpoints."""
    if config.base_exp != published_tables.CHECKPOINT_EXPONENTS[0]:
        return None
    return table.get(key)


def build_tables(config: RunConfig) -> dict:
    """
    Compute every theoretical table for the configured checkpoints.

    Combinations that reference checkpoints beyond ``checkpoint_count`` are
    skipped, so a single-checkpoint config yields single-column tables only.
    """
    points = list(config.checkpoints())
    size = len(points)
    tol = config.tolerances()
    data = {"checkpoints": points, "weak": {}, "triples": [], "four_point": [], "strong": []}

    for alpha in TABLE_ALPHAS:
        logger.info("Computing weak test matrix for alpha=%g over %d checkpoints", alpha, size)
        matrix = weak_theory(1.0 - alpha, points, tol)
        data["weak"][f"{alpha:g}"] = {
            f"{i},{j}": {
                "value": value,
                "published": _published(published_tables.WEAK_PROBABILITIES.get(alpha, {}), (i, j), config),
            }
            for (i, j), value in sorted(matrix.items())
        }

    for alpha, indices in TRIPLE_SETS:
        if max(indices) >= size:
            continue
        n, n1, n2 = (points[i] for i in indices)
        value = weak_prob_3(1.0 - alpha, n, n1 / n, n2 / n1, tol)
        data["triples"].append({
            "alpha": alpha,
            "indices": list(indices),
            "value": value,
            "published": _published(published_tables.TRIPLE_PROBABILITIES, (alpha, indices), config),
        })

    for alpha, indices in FOUR_POINT_SETS:
        if max(indices) >= size:
            continue
        bounds = weak_prob_4_bounds(1.0 - alpha, [points[i] for i in indices], tol)
        published = _published(published_tables.FOUR_POINT_BRACKET, (alpha, indices), config)
        data["four_point"].append({
            "alpha": alpha,
            "indices": list(indices),
            "lower": bounds.lower,
            "upper": bounds.upper,
            "overlap_bound": bounds.overlap_bound,
            "published": list(published) if published else None,
        })

    for alpha, (i, j) in STRONG_PAIRS:
        if j >= size:
            continue
        data["strong"].append({
            "alpha": alpha,
            "indices": [i, j],
            "value": strong_prob(1.0 - alpha, points[i], points[j], tol),
            "published": _published(published_tables.STRONG_PROBABILITIES, (alpha, (i, j)), config),
        })

    ideal = [mu_U(n) for n in points]
    data["mu_u"] = {power_label(d.checkpoint): list(d.mass) for d in ideal}
    return data


def run_tables(config: RunConfig) -> dict:
    """
    Write the theoretical tables as CSV and JSON under ``<out>/tables``.

    Returns:
        dict: status and the list of written files.
    """
    data = build_tables(config)
    points = data["checkpoints"]
    size = len(points)
    folder = config.tables_path
    files: List[str] = []

    header = ["alpha", ""] + [aleph_label(i) for i in range(size)]
    rows = []
    for alpha in TABLE_ALPHAS:
        block = {tuple(int(x) for x in key.split(",")): cell["value"] for key, cell in data["weak"][f"{alpha:g}"].items()}
        rows += [[f"{alpha:g}"] + row for row in weak_matrix_rows(block, size)]
    files.append(str(write_csv(folder / "weak_probabilities.csv", header, rows)))

    labels = partition_labels()
    columns = [[mass[k] for k in UPPER_HALF] for mass in data["mu_u"].values()]
    files.append(str(write_csv(
        folder / "mu_u.csv",
        ["cell"] + list(data["mu_u"].keys()),
        column_matrix_rows([labels[k] for k in UPPER_HALF], columns, 6),
    )))

    example_rows = []
    for entry in data["triples"]:
        example_rows.append(["triple", f"{entry['alpha']:g}", aleph_union_label(entry["indices"]),
                             f"{entry['value']:.5f}", ""])
    for entry in data["four_point"]:
        example_rows.append(["four-point", f"{entry['alpha']:g}", aleph_union_label(entry["indices"]),
                             f"{entry['lower']:.5f}", f"{entry['upper']:.5f}"])
    for entry in data["strong"]:
        i, j = entry["indices"]
        example_rows.append(["strong", f"{entry['alpha']:g}", f"{aleph_label(i)},{aleph_label(j)}",
                             f"{entry['value']:.7f}", ""])
    if example_rows:
        files.append(str(write_csv(folder / "examples.csv",
                                   ["kind", "alpha", "checkpoints", "value", "upper"], example_rows)))

    data["provenance"] = config.provenance()
    files.append(str(write_json(folder / "tables.json", data)))
    logger.info("Wrote %d table files to %s", len(files), folder)
    return {"status": "success", "files": files, "tables": data}
