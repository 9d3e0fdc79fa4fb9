"""
LIL Statistic Tool for the LIL audit toolkit.

Turns ones-counts into the reduced deviation S* = (2S - n)/sqrt(n) and the
LIL-normalised statistic S_lil = (2S - n)/sqrt(2 n ln ln n), and checks the
additivity identities that relate S_lil of a concatenation to its parts.
"""

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from tools.bitstream_tool import CountTrace
from tools.errors import DomainError, StructuralError

MIN_LIL_BITS = 16
MIN_PART_BITS = 16

BitString = Union[bytes, bytearray, str, Sequence[int], np.ndarray]


@dataclass(frozen=True)
class LilTrace:
    """Per-sequence rows of (n, ones, s_star, s_lil) in checkpoint order."""

    entries: tuple

    @property
    def checkpoints(self) -> tuple:
        return tuple(row[0] for row in self.entries)

    @property
    def s_lil_values(self) -> tuple:
        return tuple(row[3] for row in self.entries)

    def value_at(self, n: int) -> float:
        for row in self.entries:
            if row[0] == n:
                return row[3]
        raise StructuralError(f"checkpoint {n} not present in trace {self.checkpoints}")


def _check_counts(ones: int, n: int) -> None:
    if n < 1:
        raise DomainError(f"sequence length must be positive, got {n}")
    if not 0 <= ones <= n:
        raise DomainError(f"ones-count {ones} outside [0, {n}]")


def lil_scale(n: int) -> float:
    """sqrt(2 ln ln n), the factor between S* and S_lil."""
    if n < MIN_LIL_BITS:
        raise DomainError(f"ln ln n needs n >= {MIN_LIL_BITS}, got {n}")
    return math.sqrt(2.0 * math.log(math.log(float(n))))


def s_star(ones: int, n: int) -> float:
    """Reduced number of ones, (2*ones - n)/sqrt(n)."""
    _check_counts(ones, n)
    return (2 * ones - n) / math.sqrt(n)


def s_lil(ones: int, n: int) -> float:
    """
    LIL statistic of a length-n prefix with ``ones`` set bits.

    Args:
        ones (int): Number of 1 bits, 0 <= ones <= n.
        n (int): Prefix length in bits, at least 16.

    Returns:
        float: (2*ones - n) / sqrt(2 n ln ln n), natural logarithms.
    """
    _check_counts(ones, n)
    if n < MIN_LIL_BITS:
        raise DomainError(f"S_lil is undefined for n < {MIN_LIL_BITS} (got {n})")
    return (2 * ones - n) / math.sqrt(2.0 * n * math.log(math.log(float(n))))


def lil_threshold_ones(n: int, theta: float) -> int:
    """Smallest ones-count whose S_lil at length n reaches ``theta``."""
    ones = min(n + 1, max(0, math.ceil((n + theta * math.sqrt(2.0 * n * math.log(math.log(float(n))))) / 2)))
    while ones > 0 and s_lil(ones - 1, n) >= theta:
        ones -= 1
    while ones <= n and s_lil(ones, n) < theta:
        ones += 1
    return ones


def lil_trace(trace: CountTrace) -> LilTrace:
    rows = tuple((n, ones, s_star(ones, n), s_lil(ones, n)) for n, ones in trace.entries)
    return LilTrace(rows)


def _as_bits(part: BitString) -> np.ndarray:
    if isinstance(part, (bytes, bytearray)):
        return np.unpackbits(np.frombuffer(bytes(part), dtype=np.uint8), bitorder="big")
    if isinstance(part, str):
        if set(part) - {"0", "1"}:
            raise DomainError("bit strings may only contain '0' and '1'")
        return np.frombuffer(part.encode("ascii"), dtype=np.uint8) - ord("0")
    bits = np.asarray(part, dtype=np.uint8)
    if bits.ndim != 1 or np.any(bits > 1):
        raise DomainError("bit arrays must be one-dimensional 0/1 vectors")
    return bits


def _relative(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def check_additivity(x_parts: Sequence[BitString]) -> float:
    """
    Residual of the S_lil additivity identity for a decomposition.

    Equal-length parts x_1..x_t of length n use
        sum S_lil(x_i) = S_lil(x_1...x_t) * sqrt(t ln ln(tn) / ln ln n).
    Two parts of lengths s*n and t*n (n = gcd of the lengths) use
        S_lil(x_1) sqrt(s ln ln(sn)) + S_lil(x_2) sqrt(t ln ln(tn))
            = S_lil(x_1 x_2) sqrt((s+t) ln ln((s+t)n)).

    Args:
        x_parts: Bit strings as bytes (MSB-first), '0'/'1' text or 0/1 arrays.

    Returns:
        float: |LHS - RHS| / max(1, |LHS|, |RHS|).
    """
    if not x_parts:
        raise DomainError("additivity check needs at least one part")
    parts = [_as_bits(p) for p in x_parts]
    lengths = [len(p) for p in parts]
    if min(lengths) < MIN_PART_BITS:
        raise DomainError(f"every part must hold at least {MIN_PART_BITS} bits, got {lengths}")
    ones = [int(p.sum()) for p in parts]
    total_len = sum(lengths)
    total_ones = sum(ones)

    if len(set(lengths)) == 1:
        n, t = lengths[0], len(parts)
        lhs = sum(s_lil(s, n) for s in ones)
        rhs = s_lil(total_ones, total_len) * math.sqrt(
            t * math.log(math.log(t * n)) / math.log(math.log(n))
        )
        return _relative(lhs, rhs)

    if len(parts) != 2:
        raise DomainError("unequal part lengths are only supported for two parts")
    n = math.gcd(*lengths)
    s, t = lengths[0] // n, lengths[1] // n
    lhs = (s_lil(ones[0], s * n) * math.sqrt(s * math.log(math.log(s * n)))
           + s_lil(ones[1], t * n) * math.sqrt(t * math.log(math.log(t * n))))
    rhs = s_lil(total_ones, total_len) * math.sqrt((s + t) * math.log(math.log((s + t) * n)))
    return _relative(lhs, rhs)
