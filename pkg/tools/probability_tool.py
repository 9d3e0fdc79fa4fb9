"""
Probability Engine Tool for the LIL audit toolkit.

Theoretical pass probabilities for weak LIL tests on one to four checkpoints,
the opposite-sign (strong) LIL probability, the ideal snapshot distribution
on the 42-cell partition, and the sampling-noise floor of distances measured
on a finite corpus.

All Gaussian integrals go through ``scipy.integrate.quad``; the normal
functions are built on ``scipy.special.erfc`` so deep tails keep full
relative accuracy.
"""

import logging
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np
from scipy import integrate, special, stats

from tools.bitstream_tool import MIN_CHECKPOINT_BITS
from tools.errors import DomainError, NumericalError
from tools.lilstat_tool import lil_scale, lil_threshold_ones

logger = logging.getLogger(__name__)

# Limits are cut at this many standard deviations of the integration variable;
# the Gaussian tail beyond 9 is below 1e-18.
TRUNCATION = 9.0
QUAD_LIMIT = 200

# Accepted DeMoivre-Laplace approximation error of the normal model.
NORMAL_APPROXIMATION_ERROR = 2e-7

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# Finite cell edges of the snapshot partition: -1.00, -0.95, ..., 1.00
PARTITION_EDGES = np.arange(-20, 21) / 20.0
PARTITION_SIZE = len(PARTITION_EDGES) + 1


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances for the probability engine."""

    quad_abs: float = 1e-9
    two_point_agreement: float = 1e-7
    three_point_agreement: float = 1e-6
    strong_agreement: float = 1e-5


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class WeakTestSpec:
    """Significance level and checkpoint set of one weak LIL test."""

    alpha: float
    checkpoints: tuple

    def __post_init__(self):
        if not 0.0 < self.alpha <= 0.25:
            raise DomainError(f"alpha must lie in (0, 0.25], got {self.alpha}")
        if not 1 <= len(self.checkpoints) <= 4:
            raise DomainError(f"weak tests take 1 to 4 checkpoints, got {len(self.checkpoints)}")

    @property
    def theta(self) -> float:
        return 1.0 - self.alpha

    def probability(self, tol: Tolerances = DEFAULT_TOLERANCES):
        """Point probability for 1-3 checkpoints, (lower, upper) for 4."""
        if len(self.checkpoints) == 4:
            bounds = weak_prob_4_bounds(self.theta, self.checkpoints, tol)
            return bounds.lower, bounds.upper
        return weak_prob_set(self.theta, self.checkpoints, tol)


@dataclass(frozen=True)
class SnapshotDistribution:
    """Probability mass over the 42 partition cells at one checkpoint."""

    checkpoint: int
    mass: tuple

    def __post_init__(self):
        if len(self.mass) != PARTITION_SIZE:
            raise DomainError(f"snapshot needs {PARTITION_SIZE} cells, got {len(self.mass)}")

    def as_array(self) -> np.ndarray:
        return np.asarray(self.mass, dtype=float)


@dataclass(frozen=True)
class FourPointBounds:
    lower: float
    upper: float
    overlap_bound: float


@dataclass(frozen=True)
class SamplingFloor:
    """Expected distances of an ideal corpus of size m, with standard deviations."""

    tvd: float
    tvd_sd: float
    rmsd: float
    rmsd_sd: float


# ---------------------------------------------------------------------------
# Normal functions
# ---------------------------------------------------------------------------

def normal_pdf(x: float) -> float:
    return _INV_SQRT_2PI * math.exp(-0.5 * x * x)


def normal_cdf(x: float) -> float:
    return 0.5 * float(special.erfc(-x / _SQRT2))


def normal_sf(x: float) -> float:
    """1 - Phi(x), accurate in the upper tail."""
    return 0.5 * float(special.erfc(x / _SQRT2))


def tail_bounds(x: float) -> Tuple[float, float]:
    """
    Lower and upper bounds on 1 - Phi(x) for x > 0.

    (1/x - 1/x^3) phi(x) < 1 - Phi(x) < phi(x)/x
    """
    if x <= 0:
        raise DomainError(f"tail bounds need x > 0, got {x}")
    density = normal_pdf(x)
    return (1.0 / x - 1.0 / x ** 3) * density, density / x


# ---------------------------------------------------------------------------
# Quadrature
# ---------------------------------------------------------------------------

def _quad(func, lower: float, upper: float, tol: Tolerances, what: str, scale: float = 1.0) -> float:
    """Integrate over [lower, upper] clipped to +-TRUNCATION standard deviations (``scale``)."""
    cut = scale * TRUNCATION
    lower = max(lower, -cut)
    upper = min(upper, cut)
    if upper <= lower:
        return 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, abserr = integrate.quad(
            func, lower, upper, epsabs=tol.quad_abs / 10, epsrel=1e-12, limit=QUAD_LIMIT
        )
    if abserr > tol.quad_abs:
        raise NumericalError(f"{what}: quadrature on [{lower:g}, {upper:g}] did not converge", abserr)
    return value


def _check_theta(theta: float) -> None:
    if not 0.0 < theta < 1.0:
        raise DomainError(f"theta must lie in (0, 1), got {theta}")


def _check_length(n: float) -> None:
    if n < MIN_CHECKPOINT_BITS:
        raise DomainError(f"checkpoint {n} is below {MIN_CHECKPOINT_BITS} bits")


def _check_ratio(t: float) -> None:
    if t < 2:
        raise DomainError(f"checkpoint ratio must be at least 2, got {t}")


# ---------------------------------------------------------------------------
# Weak LIL test probabilities
# ---------------------------------------------------------------------------

def weak_prob_1(theta: float, n: float) -> float:
    """
    Probability that |S_lil| reaches theta at a single checkpoint n.

    Args:
        theta (float): Threshold 1 - alpha, in (0, 1).
        n (float): Checkpoint in bits, at least 2^16.

    Returns:
        float: 2 (1 - Phi(theta sqrt(2 ln ln n))).
    """
    _check_theta(theta)
    _check_length(n)
    return 2.0 * normal_sf(theta * lil_scale(n))


def _two_point_setup(theta: float, n: float, t: float):
    a = theta * lil_scale(n)
    b = theta * math.sqrt(t) * lil_scale(t * n)
    s = math.sqrt(t - 1.0)
    return a, b, s


@lru_cache(maxsize=4096)
def _weak_prob_2_integral(theta: float, n: float, t: float, tol: Tolerances) -> float:
    a, b, s = _two_point_setup(theta, n, t)
    inside = _quad(lambda y: normal_pdf(y) * normal_sf((b - y) / s), -a, a, tol, "two-point union")
    return weak_prob_1(theta, n) + 2.0 * inside


def weak_prob_2_alt(theta: float, n: float, t: float, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """
    Two-point probability through inclusion-exclusion.

    P(A) + P(B) minus the joint excursion; the joint excursion has a
    same-sign part and an opposite-sign part, and the latter is exactly the
    strong probability for (n, t n).
    """
    _check_theta(theta)
    _check_length(n)
    _check_ratio(t)
    a, b, s = _two_point_setup(theta, n, t)
    same_sign = 2.0 * _quad(
        lambda y: normal_pdf(y) * normal_sf((b - y) / s), a, math.inf, tol, "two-point same-sign"
    )
    opposite_sign = _strong_prob_gaussian(theta, n, t * n, tol)
    return weak_prob_1(theta, n) + weak_prob_1(theta, t * n) - same_sign - opposite_sign


def weak_prob_2(theta: float, n: float, t: float, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """
    Probability that |S_lil| reaches theta at n or at t*n.

    Evaluated as P1(n) + 2 * int_{-a}^{a} phi(y) (1 - Phi((b - y)/s)) dy and
    cross-checked against the inclusion-exclusion route.

    Raises:
        NumericalError: quadrature failed or the two routes disagree.
    """
    _check_theta(theta)
    _check_length(n)
    _check_ratio(t)
    value = _weak_prob_2_integral(float(theta), float(n), float(t), tol)
    alt = weak_prob_2_alt(theta, n, t, tol)
    if abs(value - alt) > tol.two_point_agreement:
        raise NumericalError(
            f"two-point routes disagree for theta={theta}, n={n}, t={t}", abs(value - alt)
        )
    return value


def _three_point_setup(theta: float, n: float, t1: float, t2: float):
    a = theta * lil_scale(n)
    c = theta * math.sqrt(t1) * lil_scale(t1 * n)
    d = theta * math.sqrt(t2) * lil_scale(t1 * t2 * n)
    s1 = math.sqrt(t1 - 1.0)
    s2 = math.sqrt(t2 - 1.0)
    sqrt_t1 = math.sqrt(t1)

    def third_tail(z: float) -> float:
        return normal_sf((d - z / sqrt_t1) / s2)

    return a, c, s1, third_tail


@lru_cache(maxsize=1024)
def _weak_prob_3_iterated(theta: float, n: float, t1: float, t2: float, tol: Tolerances) -> float:
    a, c, s1, third_tail = _three_point_setup(theta, n, t1, t2)

    def first_two_inside(z: float) -> float:
        return _quad(
            lambda y: normal_pdf(y) * normal_pdf((z - y) / s1) / s1, -a, a, tol, "three-point inner"
        )

    escape = _quad(
        lambda z: first_two_inside(z) * third_tail(z), -c, c, tol, "three-point outer", scale=math.sqrt(t1)
    )
    return _weak_prob_2_integral(theta, n, t1, tol) + 2.0 * escape


def weak_prob_3_collapsed(theta: float, n: float, t1: float, t2: float,
                          tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """
    Three-point probability with the first coordinate integrated in closed form.

    Given the scaled walk z at t1*n (z ~ N(0, t1)), the walk at n is normal
    with mean z/t1 and variance 1 - 1/t1, so the inner integral is a
    difference of two Phi values.
    """
    _check_theta(theta)
    _check_length(n)
    _check_ratio(t1)
    _check_ratio(t2)
    a, c, _, third_tail = _three_point_setup(theta, n, t1, t2)
    sqrt_t1 = math.sqrt(t1)
    sigma = math.sqrt(1.0 - 1.0 / t1)

    def integrand(z: float) -> float:
        mean = z / t1
        inside = normal_cdf((a - mean) / sigma) - normal_cdf((-a - mean) / sigma)
        return normal_pdf(z / sqrt_t1) / sqrt_t1 * inside * third_tail(z)

    escape = _quad(integrand, -c, c, tol, "three-point collapsed", scale=sqrt_t1)
    return _weak_prob_2_integral(float(theta), float(n), float(t1), tol) + 2.0 * escape


def weak_prob_3(theta: float, n: float, t1: float, t2: float,
                tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """
    Probability that |S_lil| reaches theta at n, t1*n or t1*t2*n.

    The third checkpoint's excursion is expressed through 1 - Phi, leaving an
    iterated two-dimensional integral over the region where the first two
    checkpoints stay inside (-theta, theta).
    """
    _check_theta(theta)
    _check_length(n)
    _check_ratio(t1)
    _check_ratio(t2)
    value = _weak_prob_3_iterated(float(theta), float(n), float(t1), float(t2), tol)
    collapsed = weak_prob_3_collapsed(theta, n, t1, t2, tol)
    if abs(value - collapsed) > tol.three_point_agreement:
        raise NumericalError(
            f"three-point routes disagree for theta={theta}, n={n}, t1={t1}, t2={t2}",
            abs(value - collapsed),
        )
    return value


def weak_prob_set(theta: float, checkpoints: Sequence[float],
                  tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Dispatch on one, two or three checkpoints."""
    points = sorted(float(p) for p in checkpoints)
    if len(points) == 1:
        return weak_prob_1(theta, points[0])
    if len(points) == 2:
        return weak_prob_2(theta, points[0], points[1] / points[0], tol)
    if len(points) == 3:
        return weak_prob_3(theta, points[0], points[1] / points[0], points[2] / points[1], tol)
    raise DomainError(f"point probabilities exist for 1 to 3 checkpoints, got {len(points)}")


def weak_prob_4_bounds(theta: float, checkpoints: Sequence[float],
                       tol: Tolerances = DEFAULT_TOLERANCES) -> FourPointBounds:
    """
    Bracket for the four-point weak test probability.

    Inclusion-exclusion over four events gives
        P = sum(singles) - sum(pair unions) + sum(triple unions) - eps
    where eps is the probability of all four excursions together. ``upper``
    drops eps; eps is at most the joint excursion at the three largest
    checkpoints, which equals that triple's union plus its singles minus its
    pair unions, and ``lower`` subtracts that bound.
    """
    points = sorted(float(p) for p in checkpoints)
    if len(points) != 4 or len(set(points)) != 4:
        raise DomainError(f"four distinct checkpoints are required, got {checkpoints}")
    for small, large in zip(points, points[1:]):
        _check_ratio(large / small)
    _check_theta(theta)

    singles = {i: weak_prob_1(theta, p) for i, p in enumerate(points)}
    pairs = {
        (i, j): weak_prob_2(theta, points[i], points[j] / points[i], tol)
        for i in range(4) for j in range(i + 1, 4)
    }
    triples = {
        (i, j, k): weak_prob_3(theta, points[i], points[j] / points[i], points[k] / points[j], tol)
        for i in range(4) for j in range(i + 1, 4) for k in range(j + 1, 4)
    }
    upper = sum(singles.values()) - sum(pairs.values()) + sum(triples.values())
    last = (1, 2, 3)
    overlap = (triples[last] + sum(singles[i] for i in last)
               - pairs[(1, 2)] - pairs[(1, 3)] - pairs[(2, 3)])
    overlap = max(overlap, 0.0)
    logger.debug("Four-point bracket %s: upper=%.6f overlap<=%.6f", points, upper, overlap)
    return FourPointBounds(lower=upper - overlap, upper=upper, overlap_bound=overlap)


# ---------------------------------------------------------------------------
# Strong LIL test probability
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _strong_prob_gaussian(theta: float, n1: float, n2: float, tol: Tolerances) -> float:
    a, b, s = _two_point_setup(theta, n1, n2 / n1)
    tail = _quad(lambda y: normal_pdf(y) * normal_cdf(-(b + y) / s), a, math.inf, tol, "strong")
    return 2.0 * tail


def strong_prob_negbin(theta: float, n1: float, n2: float,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """
    Strong probability through the negative-binomial waiting time.

    With S*(n1) = y <= -a, reaching S_lil >= theta at n2 needs r more ones in
    the next n2 - n1 bits, 2r = n2 - n1 + theta sqrt(2 n2 ln ln n2) - y sqrt(n1).
    The trial count for the r-th one is approximately N(2r, 2r).
    """
    _check_theta(theta)
    _check_length(n1)
    if n2 < 2 * n1:
        raise DomainError(f"strong test needs n2 >= 2 n1, got n1={n1}, n2={n2}")
    a = theta * lil_scale(n1)
    reach = theta * math.sqrt(2.0 * n2 * math.log(math.log(n2)))
    gap = n2 - n1
    root_n1 = math.sqrt(n1)

    def integrand(y: float) -> float:
        two_r = gap + reach - y * root_n1
        return normal_pdf(y) * normal_cdf((gap - two_r) / math.sqrt(two_r))

    return 2.0 * _quad(integrand, -math.inf, -a, tol, "strong negative-binomial")


def strong_prob(theta: float, n1: float, n2: float, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """
    Probability of opposite-sign excursions |S_lil| >= theta at n1 and n2.

    Both signs are counted (factor 2). The Gaussian-tail route is returned;
    the negative-binomial route must agree within ``tol.strong_agreement``.
    """
    _check_theta(theta)
    _check_length(n1)
    if n2 < 2 * n1:
        raise DomainError(f"strong test needs n2 >= 2 n1, got n1={n1}, n2={n2}")
    value = _strong_prob_gaussian(float(theta), float(n1), float(n2), tol)
    alt = strong_prob_negbin(theta, n1, n2, tol)
    if abs(value - alt) > tol.strong_agreement:
        raise NumericalError(
            f"strong routes disagree for theta={theta}, n1={n1}, n2={n2}", abs(value - alt)
        )
    return value


# ---------------------------------------------------------------------------
# Snapshot partition and the ideal distribution
# ---------------------------------------------------------------------------

def partition_labels() -> Tuple[str, ...]:
    labels = ["(-inf,-1.00)"]
    labels += [f"[{lo:.2f},{hi:.2f})" for lo, hi in zip(PARTITION_EDGES, PARTITION_EDGES[1:])]
    labels.append("[1.00,inf)")
    return tuple(labels)


def cell_index(values) -> np.ndarray:
    """Partition cell of each S_lil value; cells are closed on the left."""
    return np.searchsorted(PARTITION_EDGES, np.asarray(values, dtype=float), side="right")


def mu_U(n: int) -> SnapshotDistribution:
    """
    Ideal snapshot distribution of S_lil at length n (normal model).

    Cell [x, y) carries Phi(y L) - Phi(x L) with L = sqrt(2 ln ln n).
    """
    _check_length(n)
    scale = lil_scale(n)
    cdf = np.array([normal_cdf(edge * scale) for edge in PARTITION_EDGES])
    mass = np.diff(np.concatenate(([0.0], cdf, [1.0])))
    return SnapshotDistribution(int(n), tuple(float(m) for m in mass))


def mu_U_binomial(n: int) -> SnapshotDistribution:
    """Ideal snapshot distribution from the exact Binomial(n, 1/2) ones-count."""
    _check_length(n)
    # P(S_lil < edge) = P(ones < first count reaching edge)
    cdf = np.array([
        stats.binom.cdf(lil_threshold_ones(n, float(edge)) - 1, n, 0.5) for edge in PARTITION_EDGES
    ])
    mass = np.clip(np.diff(np.concatenate(([0.0], cdf, [1.0]))), 0.0, None)
    return SnapshotDistribution(int(n), tuple(float(m) for m in mass / mass.sum()))


def ideal_snapshot(n: int, method: str = "normal") -> SnapshotDistribution:
    if method == "normal":
        return mu_U(n)
    if method == "binomial":
        return mu_U_binomial(n)
    raise DomainError(f"unknown ideal distribution method: {method}")


def sampling_floor(ideal: SnapshotDistribution, m: int) -> SamplingFloor:
    """
    Expected TVD and RMSD between an ideal corpus of m sequences and ``ideal``.

    Each cell count is Binomial(m, p). The TVD floor uses the exact binomial
    mean absolute deviation 2 v (1 - p) b(v; m, p) with v = floor(m p) + 1;
    the RMSD floor uses E[sum (X/m - p)^2] = (1 - sum p^2)/m. Standard
    deviations treat cells as independent.
    """
    if m < 1:
        raise DomainError(f"corpus size must be positive, got {m}")
    p = np.clip(ideal.as_array(), 0.0, 1.0)
    q = 1.0 - p
    nu = np.floor(m * p) + 1
    mad = 2.0 * nu * q * stats.binom.pmf(nu, m, p) / m
    variance = p * q / m
    tvd = 0.5 * float(mad.sum())
    tvd_sd = 0.5 * math.sqrt(float(np.clip(variance - mad ** 2, 0.0, None).sum()))

    fourth = m * p * q * (1.0 + 3.0 * (m - 2) * p * q) / m ** 4
    squared_total = float(variance.sum())
    squared_sd = math.sqrt(float(np.clip(fourth - variance ** 2, 0.0, None).sum()))
    rmsd = math.sqrt(squared_total / PARTITION_SIZE)
    rmsd_sd = squared_sd / (2.0 * math.sqrt(PARTITION_SIZE * squared_total)) if squared_total > 0 else 0.0
    return SamplingFloor(tvd=tvd, tvd_sd=tvd_sd, rmsd=rmsd, rmsd_sd=rmsd_sd)
