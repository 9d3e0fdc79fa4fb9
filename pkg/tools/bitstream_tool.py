"""
Bitstream Counting Tool for the LIL audit toolkit.

Streams a byte-aligned binary sequence once, from a file or from an in-process
generator, and records the running ones-count S(x) at each requested
checkpoint. Bits are read most-significant first within every byte.
"""

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional, Sequence

import numpy as np

from tools.errors import CheckpointError, SourceIOError, TruncatedSourceError

logger = logging.getLogger(__name__)

BIT_ORDER = "msb-first"
MIN_CHECKPOINT_BITS = 1 << 16
DEFAULT_BUFFER_BYTES = int(os.getenv("LILAUDIT_BUFFER_BYTES", str(1 << 20)))

FILE_PATH = "file-path"
GENERATOR_HANDLE = "generator-handle"

# 64-bit SWAR masks
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)

_BYTE_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


@dataclass(frozen=True)
class CheckpointSet:
    """
    Ordered sequence lengths (bits) at which S_lil is evaluated.

    ``min_point`` defaults to 2^16 so that ln ln n is comfortably positive.
    Raw counting accepts a smaller floor (never below 8) for byte-level work.
    """

    points: tuple
    min_point: int = MIN_CHECKPOINT_BITS

    def __post_init__(self):
        points = tuple(int(p) for p in self.points)
        object.__setattr__(self, "points", points)
        if self.min_point < 8:
            raise CheckpointError(f"min_point must be at least 8 bits, got {self.min_point}")
        if not points:
            raise CheckpointError("checkpoint set is empty")
        for p in points:
            if p % 8:
                raise CheckpointError(f"checkpoint {p} is not a multiple of 8 bits")
            if p < self.min_point:
                raise CheckpointError(f"checkpoint {p} is below the minimum of {self.min_point} bits")
        if any(b <= a for a, b in zip(points, points[1:])):
            raise CheckpointError(f"checkpoints must be strictly increasing: {points}")

    @classmethod
    def powers_of_two(cls, base_exp: int, count: int) -> "CheckpointSet":
        """{2^(base_exp + i) : 0 <= i < count}"""
        if count < 1:
            raise CheckpointError(f"checkpoint count must be positive, got {count}")
        return cls(tuple(1 << (base_exp + i) for i in range(count)))

    @classmethod
    def plot_scale(cls, total_bits: int) -> "CheckpointSet":
        """Positions 10000*k^2 (k = 1, 2, ...) that fit inside ``total_bits``."""
        points = []
        k = 1
        while 10000 * k * k <= total_bits:
            points.append(10000 * k * k)
            k += 1
        return cls(tuple(points), min_point=8)

    @property
    def max(self) -> int:
        return self.points[-1]

    def index(self, n: int) -> int:
        try:
            return self.points.index(n)
        except ValueError:
            raise CheckpointError(f"{n} is not one of the checkpoints {self.points}") from None

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[int]:
        return iter(self.points)


@dataclass(frozen=True)
class SequenceSource:
    """A readable, byte-aligned bit sequence."""

    kind: str
    identifier: str
    total_bits: int
    chunk_factory: Optional[Callable[[int], Iterable[bytes]]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in (FILE_PATH, GENERATOR_HANDLE):
            raise ValueError(f"unknown source kind: {self.kind}")
        if self.total_bits <= 0 or self.total_bits % 8:
            raise CheckpointError(
                f"{self.identifier}: total_bits must be a positive multiple of 8, got {self.total_bits}"
            )

    @classmethod
    def from_file(cls, path) -> "SequenceSource":
        path = Path(path)
        try:
            size = path.stat().st_size
        except OSError as e:
            raise SourceIOError(f"cannot stat {path}: {e}") from e
        if size == 0:
            raise TruncatedSourceError(str(path), 0, 8)
        return cls(FILE_PATH, str(path), size * 8)

    @classmethod
    def from_chunks(cls, identifier: str, chunk_factory: Callable[[int], Iterable[bytes]],
                    total_bits: int) -> "SequenceSource":
        return cls(GENERATOR_HANDLE, identifier, total_bits, chunk_factory)

    @classmethod
    def from_bytes(cls, data: bytes, identifier: str = "<memory>") -> "SequenceSource":
        data = bytes(data)

        def chunks(buffer_bytes: int):
            for start in range(0, len(data), buffer_bytes):
                yield data[start:start + buffer_bytes]

        return cls(GENERATOR_HANDLE, identifier, len(data) * 8, chunks)

    def chunks(self, buffer_bytes: int = DEFAULT_BUFFER_BYTES) -> Iterator[bytes]:
        if self.kind == GENERATOR_HANDLE:
            yield from self.chunk_factory(buffer_bytes)
            return
        try:
            with open(self.identifier, "rb") as handle:
                while True:
                    block = handle.read(buffer_bytes)
                    if not block:
                        return
                    yield block
        except OSError as e:
            raise SourceIOError(f"cannot read {self.identifier}: {e}") from e


@dataclass(frozen=True)
class CountTrace:
    """(checkpoint, ones) pairs in checkpoint order."""

    entries: tuple

    @property
    def checkpoints(self) -> tuple:
        return tuple(n for n, _ in self.entries)

    @property
    def ones(self) -> tuple:
        return tuple(s for _, s in self.entries)


def bit_order() -> str:
    """
    Bit-order contract shared by counting and by every generator.

    Bit index 0 of a sequence is the most significant bit of its first byte,
    so byte 0x80 carries its single 1 at index 0 and 0x01 at index 7.

    Returns:
        str: Always ``"msb-first"``.
    """
    return BIT_ORDER


def bit_at(data: bytes, index: int) -> int:
    """Return bit ``index`` of ``data`` under the MSB-first contract."""
    return (data[index >> 3] >> (7 - (index & 7))) & 1


def popcount(data) -> int:
    """
    Count set bits in a byte buffer.

    The 8-byte-aligned body is summed with a SWAR reduction on uint64 words;
    the remaining tail bytes go through a 256-entry lookup table.
    """
    arr = np.frombuffer(data, dtype=np.uint8)
    whole = len(arr) - len(arr) % 8
    total = 0
    if whole:
        x = arr[:whole].view(np.uint64)
        x = x - ((x >> _S1) & _M1)
        x = (x & _M2) + ((x >> _S2) & _M2)
        x = (x + (x >> _S4)) & _M4
        total = int(((x * _H01) >> _S56).sum(dtype=np.uint64))
    if whole < len(arr):
        total += int(_BYTE_POPCOUNT[arr[whole:]].sum())
    return total


def stream_count(source: SequenceSource, checkpoints: CheckpointSet,
                 buffer_bytes: int = DEFAULT_BUFFER_BYTES) -> CountTrace:
    """
    Count ones in the first k bits of ``source`` for every checkpoint k.

    Single pass over the source; the buffer size only affects throughput.

    Args:
        source (SequenceSource): The sequence to read.
        checkpoints (CheckpointSet): Prefix lengths to report, in bits.
        buffer_bytes (int): Read size per chunk (default 1 MiB).

    Returns:
        CountTrace: One (checkpoint, ones) entry per checkpoint.

    Raises:
        TruncatedSourceError: The source ends before the largest checkpoint.
        SourceIOError: The source cannot be read.
    """
    if buffer_bytes < 1:
        raise ValueError(f"buffer_bytes must be positive, got {buffer_bytes}")
    if source.total_bits < checkpoints.max:
        raise TruncatedSourceError(source.identifier, source.total_bits, checkpoints.max)

    targets = [p // 8 for p in checkpoints]
    entries = []
    consumed = 0
    ones = 0
    for chunk in source.chunks(buffer_bytes):
        end = consumed + len(chunk)
        while len(entries) < len(targets) and targets[len(entries)] <= end:
            offset = targets[len(entries)] - consumed
            entries.append((checkpoints.points[len(entries)], ones + popcount(chunk[:offset])))
        if len(entries) == len(targets):
            break
        ones += popcount(chunk)
        consumed = end

    if len(entries) < len(targets):
        raise TruncatedSourceError(source.identifier, consumed * 8, checkpoints.max)
    logger.debug("Counted %s at %d checkpoints", source.identifier, len(entries))
    return CountTrace(tuple(entries))


def naive_count(data: bytes, checkpoints: Sequence[int]) -> CountTrace:
    """Bit-by-bit reference count over ``data`` (slow; used as an oracle)."""
    points = list(checkpoints)
    if points and points[-1] > len(data) * 8:
        raise TruncatedSourceError("<memory>", len(data) * 8, points[-1])
    entries = []
    ones = 0
    position = 0
    for p in points:
        while position < p:
            ones += bit_at(data, position)
            position += 1
        entries.append((p, ones))
    return CountTrace(tuple(entries))
