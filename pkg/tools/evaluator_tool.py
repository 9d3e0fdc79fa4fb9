"""
Evaluator Tool for the LIL audit toolkit.

Runs weak, strong and snapshot LIL tests over a set of LilTraces and scores
the generator behind them against theory: pass-rate deviations (delta_wlil,
rmsd_wlil) and per-checkpoint distances between the empirical and ideal
snapshot distributions.
"""

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from tools.errors import DomainError, StructuralError
from tools.lilstat_tool import LilTrace
from tools.probability_tool import (
    DEFAULT_TOLERANCES,
    PARTITION_SIZE,
    SamplingFloor,
    SnapshotDistribution,
    Tolerances,
    cell_index,
    ideal_snapshot,
    sampling_floor,
    strong_prob,
    weak_prob_1,
    weak_prob_2,
)

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class WeakTestResult:
    """Per-checkpoint counts of s_lil >= theta (plus) and s_lil <= -theta (minus)."""

    checkpoints: tuple
    plus: tuple
    minus: tuple
    m: int


@dataclass(frozen=True)
class PairWeakResult:
    """Plus/minus pass counts of the union test on every checkpoint pair i <= j."""

    checkpoints: tuple
    counts: Dict[Tuple[int, int], Tuple[int, int]]
    m: int


@dataclass(frozen=True)
class StrongTestResult:
    pair: Tuple[int, int]
    count: int
    m: int


@dataclass(frozen=True)
class DistanceTriple:
    tvd: float
    hellinger: float
    rmsd: float


@dataclass(frozen=True)
class VerdictThresholds:
    """Distance bars applied to the excess over ideal sampling noise."""

    tvd: float = 0.03
    rmsd: float = 0.001
    noise_z: float = 3.0
    min_sample: int = 100


@dataclass
class EvaluationReport:
    generator: str
    checkpoints: tuple
    m: int
    weak: Dict[str, dict] = field(default_factory=dict)
    strong: List[dict] = field(default_factory=list)
    snapshots: List[dict] = field(default_factory=list)
    thresholds: dict = field(default_factory=dict)
    verdict: str = PASS
    warnings: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        data = asdict(self)
        data["checkpoints"] = list(self.checkpoints)
        return data


def _value_matrix(traces: Sequence[LilTrace]) -> Tuple[tuple, np.ndarray]:
    if not traces:
        raise DomainError("no traces to evaluate")
    checkpoints = traces[0].checkpoints
    for i, trace in enumerate(traces):
        if trace.checkpoints != checkpoints:
            raise StructuralError(
                f"trace {i} has checkpoints {trace.checkpoints}, expected {checkpoints}"
            )
    return checkpoints, np.array([trace.s_lil_values for trace in traces], dtype=float)


def run_weak(traces: Sequence[LilTrace], theta: float) -> WeakTestResult:
    """
    Count traces reaching +theta or -theta at each checkpoint.

    Raises:
        StructuralError: traces do not share one checkpoint set.
    """
    checkpoints, values = _value_matrix(traces)
    plus = (values >= theta).sum(axis=0)
    minus = (values <= -theta).sum(axis=0)
    return WeakTestResult(
        checkpoints, tuple(int(c) for c in plus), tuple(int(c) for c in minus), len(traces)
    )


def run_weak_pairs(traces: Sequence[LilTrace], theta: float) -> PairWeakResult:
    """Plus/minus counts for the weak test on each union of two checkpoints."""
    checkpoints, values = _value_matrix(traces)
    hit_plus = values >= theta
    hit_minus = values <= -theta
    counts = {}
    for i in range(len(checkpoints)):
        for j in range(i, len(checkpoints)):
            plus = int((hit_plus[:, i] | hit_plus[:, j]).sum())
            minus = int((hit_minus[:, i] | hit_minus[:, j]).sum())
            counts[(i, j)] = (plus, minus)
    return PairWeakResult(checkpoints, counts, len(traces))


def run_strong(traces: Sequence[LilTrace], theta: float, pair: Tuple[int, int]) -> StrongTestResult:
    """Count traces with |s_lil| > theta at both points of ``pair`` and opposite signs."""
    checkpoints, values = _value_matrix(traces)
    n1, n2 = pair
    if n1 not in checkpoints or n2 not in checkpoints:
        raise StructuralError(f"strong pair {pair} not in checkpoints {checkpoints}")
    first = values[:, checkpoints.index(n1)]
    second = values[:, checkpoints.index(n2)]
    hit = (np.abs(first) > theta) & (np.abs(second) > theta) & (first * second < 0)
    return StrongTestResult((int(n1), int(n2)), int(hit.sum()), len(traces))


def weak_theory(theta: float, checkpoints: Sequence[int],
                tol: Tolerances = DEFAULT_TOLERANCES) -> Dict[Tuple[int, int], float]:
    """Theoretical weak-test probabilities for every pair i <= j (diagonal: single point)."""
    theory = {}
    for i, n in enumerate(checkpoints):
        theory[(i, i)] = weak_prob_1(theta, n)
        for j in range(i + 1, len(checkpoints)):
            theory[(i, j)] = weak_prob_2(theta, n, checkpoints[j] / n, tol)
    return theory


def delta_wlil(result: WeakTestResult, theory: Sequence[float]) -> float:
    """
    Average relative pass-rate deviation across checkpoints.

    (1/(t+1)) sum_i P_i^{-1} (|p_i+ - P_i/2| + |p_i- - P_i/2|), with p_i+
    and p_i- the empirical plus and minus pass fractions.
    """
    if len(theory) != len(result.checkpoints):
        raise StructuralError("theory and result cover different checkpoints")
    total = 0.0
    for plus, minus, probability in zip(result.plus, result.minus, theory):
        if probability <= 0:
            raise DomainError("theoretical pass probability must be positive")
        half = probability / 2.0
        total += (abs(plus / result.m - half) + abs(minus / result.m - half)) / probability
    return total / len(theory)


def rmsd_wlil(result: PairWeakResult, theory: Dict[Tuple[int, int], float]) -> float:
    """
    Root-mean-square pass-rate deviation over all pair unions i <= j.

    Each pair contributes its plus-side and minus-side deviation from P/2;
    the divisor (t+1)(t+2) equals the number of contributions.
    """
    size = len(result.checkpoints)
    total = 0.0
    for key, (plus, minus) in result.counts.items():
        probability = theory[key]
        if probability <= 0:
            raise DomainError("theoretical pass probability must be positive")
        half = probability / 2.0
        total += (plus / result.m - half) ** 2 + (minus / result.m - half) ** 2
    return math.sqrt(total / (size * (size + 1)))


def snapshot_counts(traces: Sequence[LilTrace], n: int) -> np.ndarray:
    checkpoints, values = _value_matrix(traces)
    if n not in checkpoints:
        raise StructuralError(f"snapshot point {n} not in checkpoints {checkpoints}")
    cells = cell_index(values[:, checkpoints.index(n)])
    return np.bincount(cells, minlength=PARTITION_SIZE)


def snapshot(traces: Sequence[LilTrace], n: int) -> SnapshotDistribution:
    """Empirical distribution of s_lil at ``n`` over the partition cells."""
    counts = snapshot_counts(traces, n)
    return SnapshotDistribution(int(n), tuple(float(c) / len(traces) for c in counts))


def tvd_sup(p, q) -> float:
    """Total variation as sup over cell subsets, attained by the cells where p > q."""
    diff = np.asarray(p, dtype=float) - np.asarray(q, dtype=float)
    return float(max(diff[diff > 0].sum(), -diff[diff < 0].sum()))


def distances(empirical: SnapshotDistribution, ideal: SnapshotDistribution) -> DistanceTriple:
    """
    Total variation, Hellinger and RMSD between two snapshot distributions.

    tvd = 1/2 sum |p - q|; hellinger = (1/sqrt 2) sqrt(sum (sqrt p - sqrt q)^2);
    rmsd = sqrt(sum (p - q)^2 / 42).
    """
    if empirical.checkpoint != ideal.checkpoint:
        raise StructuralError(
            f"distributions at different checkpoints: {empirical.checkpoint} vs {ideal.checkpoint}"
        )
    p = empirical.as_array()
    q = ideal.as_array()
    tvd = 0.5 * float(np.abs(p - q).sum())
    hellinger = float(np.sqrt(np.sum((np.sqrt(p) - np.sqrt(q)) ** 2)) * _INV_SQRT2)
    rmsd = float(np.sqrt(np.sum((p - q) ** 2) / PARTITION_SIZE))
    return DistanceTriple(tvd=tvd, hellinger=hellinger, rmsd=rmsd)


def verdict(triple: DistanceTriple, floor: SamplingFloor, thresholds: VerdictThresholds) -> dict:
    """
    Flag a checkpoint whose distances exceed ideal sampling noise by the bar.

    excess = distance - (floor + noise_z * sd); FAIL when the TVD excess
    reaches ``thresholds.tvd`` or the RMSD excess reaches ``thresholds.rmsd``.
    """
    tvd_excess = triple.tvd - (floor.tvd + thresholds.noise_z * floor.tvd_sd)
    rmsd_excess = triple.rmsd - (floor.rmsd + thresholds.noise_z * floor.rmsd_sd)
    failed = tvd_excess >= thresholds.tvd or rmsd_excess >= thresholds.rmsd
    return {
        "tvd_excess": tvd_excess,
        "rmsd_excess": rmsd_excess,
        "verdict": FAIL if failed else PASS,
    }


def _auto_method(n: int) -> str:
    return "binomial" if n < (1 << 26) else "normal"


def evaluate_traces(traces: Sequence[LilTrace], generator: str, alphas: Sequence[float],
                    thresholds: VerdictThresholds = VerdictThresholds(),
                    strong_pairs: Optional[Sequence[Tuple[int, int]]] = None,
                    ideal_method: str = "auto",
                    tol: Tolerances = DEFAULT_TOLERANCES) -> EvaluationReport:
    """
    Full evaluation of one corpus.

    Args:
        traces: One LilTrace per sequence, sorted by sequence index.
        generator (str): Identifier recorded in the report.
        alphas: Significance levels for the weak and strong tests.
        thresholds (VerdictThresholds): Snapshot verdict bars.
        strong_pairs: Checkpoint index pairs for the strong test; by default
            the first checkpoint against each of the last two.
        ideal_method (str): "normal", "binomial" or "auto" (binomial below 2^26).
        tol (Tolerances): Numerical tolerances.

    Returns:
        EvaluationReport: Raw counts, theory, scores, distances and verdict.
    """
    checkpoints, _ = _value_matrix(traces)
    m = len(traces)
    report = EvaluationReport(generator=generator, checkpoints=checkpoints, m=m,
                              thresholds=asdict(thresholds))
    if m < thresholds.min_sample:
        message = f"sample size {m} is below the recommended minimum of {thresholds.min_sample}"
        logger.warning(message)
        report.warnings.append(message)

    if strong_pairs is None:
        size = len(checkpoints)
        strong_pairs = [(0, j) for j in (size - 2, size - 1) if j >= 1 and checkpoints[j] >= 2 * checkpoints[0]]

    for alpha in alphas:
        theta = 1.0 - alpha
        result = run_weak(traces, theta)
        pairs = run_weak_pairs(traces, theta)
        theory = weak_theory(theta, checkpoints, tol)
        singles = [theory[(i, i)] for i in range(len(checkpoints))]
        report.weak[f"{alpha:g}"] = {
            "alpha": alpha,
            "theta": theta,
            "plus": list(result.plus),
            "minus": list(result.minus),
            "theory": singles,
            "pair_counts": {f"{i},{j}": list(c) for (i, j), c in sorted(pairs.counts.items())},
            "pair_theory": {f"{i},{j}": p for (i, j), p in sorted(theory.items())},
            "delta_wlil": delta_wlil(result, singles),
            "rmsd_wlil": rmsd_wlil(pairs, theory),
        }
        for i, j in strong_pairs:
            n1, n2 = checkpoints[i], checkpoints[j]
            found = run_strong(traces, theta, (n1, n2))
            report.strong.append({
                "alpha": alpha,
                "pair": [i, j],
                "checkpoints": [n1, n2],
                "count": found.count,
                "rate": found.count / m,
                "theory": strong_prob(theta, n1, n2, tol),
            })

    failed = False
    for n in checkpoints:
        method = _auto_method(n) if ideal_method == "auto" else ideal_method
        counts = snapshot_counts(traces, n)
        empirical = SnapshotDistribution(int(n), tuple(float(c) / m for c in counts))
        ideal = ideal_snapshot(n, method)
        triple = distances(empirical, ideal)
        floor = sampling_floor(ideal, m)
        decision = verdict(triple, floor, thresholds)
        failed = failed or decision["verdict"] == FAIL
        report.snapshots.append({
            "checkpoint": n,
            "ideal_method": method,
            "counts": [int(c) for c in counts],
            "ideal": list(ideal.mass),
            "distances": asdict(triple),
            "floor": asdict(floor),
            **decision,
        })
    report.verdict = FAIL if failed else PASS
    logger.info("Evaluated %s: m=%d, verdict %s", generator, m, report.verdict)
    return report
