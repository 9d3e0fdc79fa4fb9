import math
from decimal import Decimal, getcontext

import numpy as np
import pytest

from tools.bitstream_tool import CheckpointSet, CountTrace, SequenceSource, stream_count
from tools.errors import DomainError, StructuralError
from tools.lilstat_tool import (
    check_additivity,
    lil_scale,
    lil_threshold_ones,
    lil_trace,
    s_lil,
    s_star,
)


def test_reduced_deviation_examples():
    assert s_star(50, 100) == 0.0
    assert s_star(100, 100) == pytest.approx(10.0)
    assert s_star(60, 100) == pytest.approx(2.0)


def test_balanced_sequence_has_zero_lil():
    for n in (16, 1 << 16, 1 << 26):
        assert s_lil(n // 2, n) == 0.0


def test_lil_is_reduced_deviation_over_scale(rng):
    for _ in range(200):
        n = int(rng.integers(16, 1 << 30))
        ones = int(rng.integers(0, n + 1))
        assert s_lil(ones, n) * lil_scale(n) == pytest.approx(s_star(ones, n), rel=1e-12, abs=1e-12)


def test_negation_symmetry(rng):
    for _ in range(200):
        n = int(rng.integers(16, 1 << 40))
        ones = int(rng.integers(0, n + 1))
        assert s_lil(n - ones, n) == -s_lil(ones, n)


def test_threshold_boundary_at_large_n():
    # Exact boundary with 50-digit arithmetic; ones must straddle it.
    getcontext().prec = 50
    n = 1 << 26
    reach = (2 * Decimal(n) * Decimal(n).ln().ln()).sqrt()
    ones = int(((Decimal(n) + reach) / 2).to_integral_value(rounding="ROUND_CEILING"))
    assert s_lil(ones, n) >= 1.0
    assert s_lil(ones - 1, n) < 1.0
    assert lil_threshold_ones(n, 1.0) == ones


def test_threshold_ones_is_smallest_reaching_count():
    n = 1 << 16
    for theta in (-1.0, -0.5, 0.0, 0.9, 0.95):
        ones = lil_threshold_ones(n, theta)
        assert s_lil(ones, n) >= theta
        assert ones == 0 or s_lil(ones - 1, n) < theta
    assert lil_threshold_ones(64, 100.0) == 65


@pytest.mark.parametrize("ones, n", [(1, 15), (0, 8), (17, 16), (-1, 16)])
def test_out_of_domain_counts(ones, n):
    with pytest.raises(DomainError):
        s_lil(ones, n)


def test_lil_trace_rows():
    trace = lil_trace(CountTrace(((1 << 16, 1 << 15), (1 << 17, (1 << 16) + 100))))
    assert trace.checkpoints == (1 << 16, 1 << 17)
    assert trace.s_lil_values[0] == 0.0
    assert trace.value_at(1 << 17) == pytest.approx(s_lil((1 << 16) + 100, 1 << 17))
    with pytest.raises(StructuralError):
        trace.value_at(1 << 18)


def test_additivity_two_identical_all_ones_parts():
    assert check_additivity([b"\xff" * 8, b"\xff" * 8]) <= 1e-12


def test_additivity_equal_parts(rng):
    parts = [rng.integers(0, 256, size=16, dtype=np.uint8).tobytes() for _ in range(2)]
    assert check_additivity(parts) <= 1e-9


def test_additivity_unequal_parts(rng):
    first = rng.integers(0, 256, size=8, dtype=np.uint8).tobytes()
    second = rng.integers(0, 256, size=16, dtype=np.uint8).tobytes()
    assert check_additivity([first, second]) <= 1e-9


def test_additivity_random_decompositions(rng):
    for _ in range(1000):
        if rng.random() < 0.5:
            t = int(rng.integers(2, 7))
            length = int(rng.integers(16, 400))
            parts = [rng.integers(0, 2, size=length) for _ in range(t)]
        else:
            unit = int(rng.integers(8, 64))
            s, t = (int(v) for v in rng.integers(2, 9, size=2))
            if s == t:
                t += 1
            parts = [rng.integers(0, 2, size=s * unit), rng.integers(0, 2, size=t * unit)]
        assert check_additivity(parts) <= 1e-9


def test_additivity_accepts_bit_text():
    assert check_additivity(["1" * 16 + "0" * 16, "10" * 16]) <= 1e-9
    with pytest.raises(DomainError):
        check_additivity(["102" * 8])


@pytest.mark.parametrize("parts", [[], [b"\xff"], ["1" * 16, "1" * 24, "1" * 32]])
def test_additivity_rejects_bad_decompositions(parts):
    with pytest.raises(DomainError):
        check_additivity(parts)


def test_concatenation_counts_add_up(rng):
    first = rng.integers(0, 256, size=1 << 13, dtype=np.uint8).tobytes()
    second = rng.integers(0, 256, size=1 << 13, dtype=np.uint8).tobytes()
    points = CheckpointSet((1 << 16,))
    ones_first = stream_count(SequenceSource.from_bytes(first), points).ones[0]
    ones_second = stream_count(SequenceSource.from_bytes(second), points).ones[0]
    joined = stream_count(SequenceSource.from_bytes(first + second), CheckpointSet((1 << 16, 1 << 17)))
    assert joined.ones == (ones_first, ones_first + ones_second)
    lhs = s_lil(ones_first, 1 << 16) + s_lil(ones_second, 1 << 16)
    rhs = s_lil(ones_first + ones_second, 1 << 17) * math.sqrt(
        2 * math.log(math.log(1 << 17)) / math.log(math.log(1 << 16))
    )
    assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-12)
