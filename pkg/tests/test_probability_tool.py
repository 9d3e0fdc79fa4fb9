import numpy as np
import pytest

from reference.published_tables import (
    CHECKPOINT_EXPONENTS,
    FOUR_POINT_BRACKET,
    IDEAL_SNAPSHOT_UPPER,
    STRONG_PROBABILITIES,
    TRIPLE_PROBABILITIES,
    WEAK_PROBABILITIES,
)
from tools import probability_tool
from tools.errors import DomainError
from tools.probability_tool import (
    PARTITION_SIZE,
    WeakTestSpec,
    cell_index,
    mu_U,
    mu_U_binomial,
    normal_cdf,
    normal_sf,
    partition_labels,
    sampling_floor,
    strong_prob,
    strong_prob_negbin,
    tail_bounds,
    weak_prob_1,
    weak_prob_2,
    weak_prob_2_alt,
    weak_prob_3,
    weak_prob_3_collapsed,
    weak_prob_4_bounds,
    weak_prob_set,
)

POINTS = [1 << e for e in CHECKPOINT_EXPONENTS]


def test_normal_functions():
    assert normal_cdf(0.0) == pytest.approx(0.5)
    assert normal_cdf(1.96) == pytest.approx(0.9750021, abs=1e-7)
    assert normal_sf(1.5) == pytest.approx(1.0 - normal_cdf(1.5), abs=1e-15)
    assert normal_sf(10.0) == pytest.approx(7.619853e-24, rel=1e-6)


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0])
def test_tail_bounds_bracket_the_tail(x):
    lower, upper = tail_bounds(x)
    assert lower < normal_sf(x) < upper


def test_tail_bounds_need_positive_argument():
    with pytest.raises(DomainError):
        tail_bounds(0.0)


def test_single_point_probabilities():
    assert weak_prob_1(0.9, 1 << 26) == pytest.approx(0.03044, abs=5e-5)
    assert weak_prob_1(0.95, 1 << 26) == pytest.approx(0.02234, abs=5e-5)
    assert weak_prob_1(1e-6, 1 << 26) == pytest.approx(1.0, abs=1e-5)


def test_single_point_monotone_in_theta_and_n():
    values = [weak_prob_1(theta, 1 << 20) for theta in (0.5, 0.8, 0.9, 0.95, 0.99)]
    assert values == sorted(values, reverse=True)
    values = [weak_prob_1(0.9, n) for n in POINTS]
    assert values == sorted(values, reverse=True)


@pytest.mark.parametrize("alpha", [0.1, 0.05])
@pytest.mark.parametrize("i, j", [(i, j) for i in range(9) for j in range(i, 9)])
def test_pair_probabilities_match_published(alpha, i, j):
    theta = 1.0 - alpha
    if i == j:
        value = weak_prob_1(theta, POINTS[i])
    else:
        value = weak_prob_2(theta, POINTS[i], POINTS[j] / POINTS[i])
    assert value == pytest.approx(WEAK_PROBABILITIES[alpha][(i, j)], abs=5e-5)


@pytest.mark.parametrize("n_exp, t", [(26, 2), (26, 256), (30, 4), (16, 2), (20, 1 << 10)])
def test_pair_routes_agree(n_exp, t):
    n = 1 << n_exp
    assert abs(weak_prob_2(0.9, n, t) - weak_prob_2_alt(0.9, n, t)) <= 1e-7


def test_pair_union_bounds():
    for j in range(1, 9):
        single_i = weak_prob_1(0.9, POINTS[0])
        single_j = weak_prob_1(0.9, POINTS[j])
        union = weak_prob_2(0.9, POINTS[0], POINTS[j] / POINTS[0])
        assert max(single_i, single_j) <= union <= single_i + single_j


def test_pair_rejects_close_checkpoints():
    with pytest.raises(DomainError):
        weak_prob_2(0.9, 1 << 26, 1.5)
    with pytest.raises(DomainError):
        weak_prob_2(1.0, 1 << 26, 2)
    with pytest.raises(DomainError):
        weak_prob_1(0.9, 1 << 10)


@pytest.mark.parametrize("key", sorted(TRIPLE_PROBABILITIES))
def test_triple_probabilities_match_published(key):
    alpha, indices = key
    n, n1, n2 = (POINTS[i] for i in indices)
    value = weak_prob_3(1.0 - alpha, n, n1 / n, n2 / n1)
    assert value == pytest.approx(TRIPLE_PROBABILITIES[key], abs=2e-4)
    assert abs(value - weak_prob_3_collapsed(1.0 - alpha, n, n1 / n, n2 / n1)) <= 1e-6


@pytest.mark.parametrize("t1, t2", [(32, 8), (64, 4), (256, 2)])
def test_triple_with_large_first_ratio_is_not_clipped(monkeypatch, t1, t2):
    n = POINTS[0]
    value = weak_prob_3(0.9, n, t1, t2)
    assert value > weak_prob_2(0.9, n, t1)
    monkeypatch.setattr(probability_tool, "TRUNCATION", 80.0)
    assert weak_prob_3_collapsed(0.9, n, t1, t2) == pytest.approx(value, abs=1e-6)


def test_triple_dominates_its_pairs():
    n, n1, n2 = POINTS[0], POINTS[3], POINTS[6]
    triple = weak_prob_set(0.9, [n, n1, n2])
    assert triple >= weak_prob_set(0.9, [n, n1])
    assert triple >= weak_prob_set(0.9, [n1, n2])
    assert triple <= sum(weak_prob_1(0.9, p) for p in (n, n1, n2))


def test_four_point_bracket():
    (alpha, indices), (lower, upper) = next(iter(FOUR_POINT_BRACKET.items()))
    bounds = weak_prob_4_bounds(1.0 - alpha, [POINTS[i] for i in indices])
    assert bounds.lower == pytest.approx(lower, abs=2e-4)
    assert bounds.upper == pytest.approx(upper, abs=2e-4)
    assert bounds.lower <= bounds.upper
    assert bounds.upper <= sum(weak_prob_1(1.0 - alpha, POINTS[i]) for i in indices)


def test_weak_spec_dispatch():
    spec = WeakTestSpec(0.1, (POINTS[0], POINTS[3], POINTS[6], POINTS[8]))
    lower, upper = spec.probability()
    assert spec.theta == pytest.approx(0.9)
    assert lower <= upper
    assert WeakTestSpec(0.1, (POINTS[0],)).probability() == pytest.approx(0.03044, abs=5e-5)
    with pytest.raises(DomainError):
        WeakTestSpec(0.3, (POINTS[0],))
    with pytest.raises(DomainError):
        WeakTestSpec(0.1, tuple(POINTS[:5]))


@pytest.mark.parametrize("key", sorted(STRONG_PROBABILITIES))
def test_strong_probabilities_match_published(key):
    alpha, (i, j) = key
    value = strong_prob(1.0 - alpha, POINTS[i], POINTS[j])
    assert value == pytest.approx(STRONG_PROBABILITIES[key], abs=1e-5)
    assert abs(value - strong_prob_negbin(1.0 - alpha, POINTS[i], POINTS[j])) <= 1e-5


def test_strong_probability_decreases_with_theta():
    values = [strong_prob(theta, POINTS[0], POINTS[8]) for theta in (0.9, 0.95, 0.99)]
    assert values == sorted(values, reverse=True)
    assert all(v > 0 for v in values)


def test_strong_needs_separated_points():
    with pytest.raises(DomainError):
        strong_prob(0.9, POINTS[0], POINTS[0] + 8)


def test_partition_layout():
    labels = partition_labels()
    assert len(labels) == PARTITION_SIZE == 42
    assert labels[0] == "(-inf,-1.00)"
    assert labels[21] == "[0.00,0.05)"
    assert labels[41] == "[1.00,inf)"
    cells = cell_index([-5.0, -1.0, -0.999, 0.0, 0.049, 0.05, 1.0, 7.0])
    assert list(cells) == [0, 1, 1, 21, 21, 22, 41, 41]


@pytest.mark.parametrize("column", range(9))
def test_ideal_snapshot_matches_published(column):
    mass = mu_U(POINTS[column]).as_array()
    published = np.array([row[column] for row in IDEAL_SNAPSHOT_UPPER])
    np.testing.assert_allclose(mass[21:], published, atol=5e-6)


def test_ideal_snapshot_sums_and_symmetry():
    for n in (1 << 16, 1 << 26, 1 << 34):
        mass = mu_U(n).as_array()
        assert mass.sum() == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(mass, mass[::-1], atol=1e-12)
    assert mu_U(1 << 26).mass[21] == pytest.approx(0.047854, abs=5e-6)
    assert mu_U(1 << 34).mass[41] == pytest.approx(0.005970, abs=5e-6)


def test_binomial_snapshot_close_to_normal():
    exact = mu_U_binomial(1 << 16).as_array()
    normal = mu_U(1 << 16).as_array()
    assert exact.sum() == pytest.approx(1.0, abs=1e-12)
    assert 0.5 * np.abs(exact - normal).sum() < 0.03


def test_sampling_floor_scale():
    floor = sampling_floor(mu_U(1 << 26), 1000)
    assert 0.06 < floor.tvd < 0.09
    assert 0.004 < floor.rmsd < 0.006
    assert floor.tvd_sd > 0 and floor.rmsd_sd > 0
    assert sampling_floor(mu_U(1 << 26), 10000).tvd < floor.tvd
    with pytest.raises(DomainError):
        sampling_floor(mu_U(1 << 26), 0)


def test_sampling_floor_matches_simulation(rng):
    ideal = mu_U(1 << 26)
    p = ideal.as_array()
    m = 1000
    samples = rng.multinomial(m, p / p.sum(), size=400) / m
    tvd = 0.5 * np.abs(samples - p).sum(axis=1)
    rmsd = np.sqrt(((samples - p) ** 2).sum(axis=1) / PARTITION_SIZE)
    floor = sampling_floor(ideal, m)
    assert tvd.mean() == pytest.approx(floor.tvd, abs=0.002)
    assert rmsd.mean() == pytest.approx(floor.rmsd, rel=0.05)
