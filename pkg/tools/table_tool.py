"""
Table Emitter Tool for the LIL audit toolkit.

Writes CSV matrices and JSON documents with stable formatting so reruns are
byte-identical and outputs can be diffed against published tables.
"""

import csv
import json
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple


def aleph_label(index: int) -> str:
    return f"ℵ{index}"


def aleph_union_label(indices: Iterable[int]) -> str:
    return "∪".join(aleph_label(i) for i in indices)


def power_label(n: int) -> str:
    exponent = n.bit_length() - 1
    return f"2^{exponent}" if n == 1 << exponent else str(n)


def fmt(value: float, digits: int) -> str:
    return f"{value:.{digits}f}"


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
    return path


def write_json(path, data) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True, ensure_ascii=False)
        f.write("\n")
    return path


def read_csv(path) -> List[dict]:
    with open(path, "r", encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


def weak_matrix_rows(matrix: Dict[Tuple[int, int], float], size: int, digits: int = 5) -> List[List[str]]:
    """Upper-triangular rows labelled by checkpoint; the lower triangle stays blank."""
    rows = []
    for i in range(size):
        row = [aleph_label(i)]
        for j in range(size):
            row.append(fmt(matrix[(i, j)], digits) if j >= i else "")
        rows.append(row)
    return rows


def column_matrix_rows(labels: Sequence[str], columns: Sequence[Sequence[float]],
                       digits: int) -> List[List[str]]:
    """Rows of ``labels`` against several value columns (one per checkpoint)."""
    return [[label] + [fmt(column[r], digits) for column in columns] for r, label in enumerate(labels)]
