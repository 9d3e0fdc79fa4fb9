"""
Generator Tool for the LIL audit toolkit.

Deterministic sequence generators used to build test corpora:

- counter-prng: truncated hash(seed || 64-bit counter) blocks
- hash-drbg: simplified Hash_DRBG counter schedule G(V) G(V+1) ...
- biased-wrapper: complements any block that does not hold more 0s than 1s
- os-entropy: ``os.urandom`` baseline, the only unseeded source

Every generator emits bytes whose bits are read MSB-first.
"""

import hashlib
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Union

import numpy as np

from tools.bitstream_tool import popcount
from tools.errors import CorpusError, DomainError

logger = logging.getLogger(__name__)

COUNTER_PRNG = "counter-prng"
HASH_DRBG = "hash-drbg"
BIASED_WRAPPER = "biased-wrapper"
OS_ENTROPY = "os-entropy"
GENERATOR_KINDS = (COUNTER_PRNG, HASH_DRBG, BIASED_WRAPPER, OS_ENTROPY)

DRBG_SEED_PATTERN = "{i}th secret seed for NIST DRBG"
MANIFEST_NAME = "manifest.json"
MANIFEST_FLUSH_EVERY = 50

_DIGEST_BITS = {"sha1": 160, "sha224": 224, "sha256": 256, "sha384": 384, "sha512": 512}


@dataclass(frozen=True)
class HashPrimitive:
    """A named hash function with a fixed digest size."""

    name: str
    digest_bits: int

    def compute(self, message: bytes) -> bytes:
        return hashlib.new(self.name, message).digest()


def hash_primitive(name: str) -> HashPrimitive:
    key = name.lower().replace("-", "")
    if key not in _DIGEST_BITS:
        raise DomainError(f"unknown hash primitive {name!r}; choose from {sorted(_DIGEST_BITS)}")
    return HashPrimitive(key, _DIGEST_BITS[key])


@dataclass(frozen=True)
class GeneratorSpec:
    """
    What to generate and how seeds are derived per corpus index.

    ``params`` holds kind-specific knobs: ``out_bits_per_call`` for the
    counter generator, ``v_bits`` and ``uses_per_v`` for the DRBG,
    ``block_bits`` and ``inner`` for the biased wrapper.
    """

    kind: str
    hash: str = "sha1"
    seed: bytes = b""
    params: Dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise DomainError(f"unknown generator kind {self.kind!r}; choose from {GENERATOR_KINDS}")
        hash_primitive(self.hash)
        if self.kind == BIASED_WRAPPER and self.inner_kind in (BIASED_WRAPPER, OS_ENTROPY):
            raise DomainError(f"biased wrapper needs a seeded inner generator, got {self.inner_kind!r}")

    @property
    def inner_kind(self) -> str:
        return self.params.get("inner", COUNTER_PRNG)

    @property
    def seed_pattern(self) -> str:
        kind = self.inner_kind if self.kind == BIASED_WRAPPER else self.kind
        if kind == HASH_DRBG:
            return DRBG_SEED_PATTERN
        if kind == OS_ENTROPY:
            return "os.urandom"
        return "seed || uint32_be(i)"

    def seed_for(self, index: int) -> Optional[bytes]:
        kind = self.inner_kind if self.kind == BIASED_WRAPPER else self.kind
        if kind == HASH_DRBG:
            return DRBG_SEED_PATTERN.format(i=index).encode("ascii")
        if kind == OS_ENTROPY:
            return None
        return self.seed + index.to_bytes(4, "big")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "hash": self.hash, "seed": self.seed.hex(), "params": dict(self.params)}

    @classmethod
    def from_dict(cls, data: dict) -> "GeneratorSpec":
        return cls(
            kind=data["kind"],
            hash=data.get("hash", "sha1"),
            seed=bytes.fromhex(data.get("seed", "")),
            params=dict(data.get("params", {})),
        )


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def counter_prng_block(seed: bytes, hash_fn: HashPrimitive, out_bits_per_call: int, index: int) -> bytes:
    """Block ``index`` of the counter generator, by random access."""
    return hash_fn.compute(seed + index.to_bytes(8, "big"))[: out_bits_per_call // 8]


def counter_prng(seed: bytes, hash_fn: HashPrimitive, out_bits_per_call: int = 64) -> Iterator[bytes]:
    """
    Stream truncate(hash(seed || counter64(i))) for i = 0, 1, ...

    Args:
        seed (bytes): Seed prefix, any length.
        hash_fn (HashPrimitive): Hash applied to each counter message.
        out_bits_per_call (int): Bits kept from each digest (multiple of 8).

    Returns:
        Iterator[bytes]: Endless stream of output blocks.
    """
    if out_bits_per_call % 8 or not 8 <= out_bits_per_call <= hash_fn.digest_bits:
        raise DomainError(
            f"out_bits_per_call must be a multiple of 8 in [8, {hash_fn.digest_bits}], got {out_bits_per_call}"
        )
    keep = out_bits_per_call // 8
    compute = hash_fn.compute
    index = 0
    while True:
        yield compute(seed + index.to_bytes(8, "big"))[:keep]
        index += 1


def _hash_df(hash_fn: HashPrimitive, material: bytes, out_bits: int) -> bytes:
    out_len = out_bits // 8
    output = b""
    counter = 1
    while len(output) < out_len:
        output += hash_fn.compute(bytes([counter & 0xFF]) + out_bits.to_bytes(4, "big") + material)
        counter += 1
    return output[:out_len]


class HashDrbg:
    """
    Simplified Hash_DRBG: V and C derived from a seed string, no reseeding.

    Each state V serves ``uses_per_v`` outputs hash(V), hash(V+1), ...; the
    next state is V + hash(0x03 || V) + C + generation, all modulo 2^v_bits.
    """

    def __init__(self, seed: bytes, hash_fn: HashPrimitive, v_bits: int = 440, uses_per_v: int = 1 << 12):
        if v_bits % 8 or v_bits <= 0:
            raise DomainError(f"v_bits must be a positive multiple of 8, got {v_bits}")
        if uses_per_v < 1:
            raise DomainError(f"uses_per_v must be at least 1, got {uses_per_v}")
        self.hash_fn = hash_fn
        self.v_bits = v_bits
        self.uses_per_v = uses_per_v
        self.modulus = 1 << v_bits
        v0 = _hash_df(hash_fn, seed, v_bits)
        self.v = int.from_bytes(v0, "big")
        self.c = int.from_bytes(_hash_df(hash_fn, b"\x00" + v0, v_bits), "big")
        self.generation = 0

    @classmethod
    def from_state(cls, v: int, c: int, hash_fn: HashPrimitive, v_bits: int = 440,
                   uses_per_v: int = 1 << 12) -> "HashDrbg":
        drbg = cls(b"", hash_fn, v_bits, uses_per_v)
        drbg.v = v % drbg.modulus
        drbg.c = c % drbg.modulus
        return drbg

    def _encode(self, value: int) -> bytes:
        return value.to_bytes(self.v_bits // 8, "big")

    def revise(self) -> None:
        h = int.from_bytes(self.hash_fn.compute(b"\x03" + self._encode(self.v)), "big")
        self.generation += 1
        self.v = (self.v + h + self.c + self.generation) % self.modulus

    def blocks(self) -> Iterator[bytes]:
        compute = self.hash_fn.compute
        while True:
            for offset in range(self.uses_per_v):
                yield compute(self._encode((self.v + offset) % self.modulus))
            self.revise()


def hash_drbg(seed_string: Union[str, bytes], hash_fn: HashPrimitive, v_bits: int = 440,
              uses_per_v: int = 1 << 12) -> Iterator[bytes]:
    """Output blocks of a Hash_DRBG seeded from a UTF-8 string or raw seed bytes."""
    seed = seed_string.encode("utf-8") if isinstance(seed_string, str) else seed_string
    return HashDrbg(seed, hash_fn, v_bits, uses_per_v).blocks()


def reblock(stream: Iterable[bytes], size: int) -> Iterator[bytes]:
    """Regroup a byte stream into blocks of exactly ``size`` bytes."""
    pending = bytearray()
    for chunk in stream:
        pending += chunk
        while len(pending) >= size:
            yield bytes(pending[:size])
            del pending[:size]


def biased_wrapper(inner: Iterable[bytes], block_bits: int = 1024) -> Iterator[bytes]:
    """
    Pass a block through only if it holds more 0s than 1s, else complement it.

    Balanced blocks are complemented, so every emitted block has at most
    block_bits/2 ones.
    """
    if block_bits % 8 or block_bits <= 0:
        raise DomainError(f"block_bits must be a positive multiple of 8, got {block_bits}")
    for block in reblock(inner, block_bits // 8):
        ones = popcount(block)
        if ones < block_bits - ones:
            yield block
        else:
            yield np.bitwise_not(np.frombuffer(block, dtype=np.uint8)).tobytes()


def os_entropy(block_bytes: int = 1 << 16) -> Iterator[bytes]:
    while True:
        yield os.urandom(block_bytes)


def take(stream: Iterable[bytes], n_bytes: int) -> bytes:
    """First ``n_bytes`` bytes of a block stream."""
    out = bytearray()
    for chunk in stream:
        out += chunk
        if len(out) >= n_bytes:
            break
    if len(out) < n_bytes:
        raise DomainError(f"stream ended after {len(out)} of {n_bytes} bytes")
    return bytes(out[:n_bytes])


def _seeded_stream(kind: str, spec: GeneratorSpec, seed: Optional[bytes]) -> Iterator[bytes]:
    hash_fn = hash_primitive(spec.hash)
    if kind == COUNTER_PRNG:
        return counter_prng(seed, hash_fn, int(spec.params.get("out_bits_per_call", 64)))
    if kind == HASH_DRBG:
        return hash_drbg(
            seed,
            hash_fn,
            int(spec.params.get("v_bits", 440)),
            int(spec.params.get("uses_per_v", 1 << 12)),
        )
    return os_entropy()


def stream_for(spec: GeneratorSpec, index: int) -> Iterator[bytes]:
    """Output stream of corpus member ``index``."""
    seed = spec.seed_for(index)
    if spec.kind == BIASED_WRAPPER:
        inner = _seeded_stream(spec.inner_kind, spec, seed)
        return biased_wrapper(inner, int(spec.params.get("block_bits", 1024)))
    return _seeded_stream(spec.kind, spec, seed)


def generate_sequence(spec: GeneratorSpec, index: int, bits_each: int) -> bytes:
    if bits_each % 8 or bits_each <= 0:
        raise DomainError(f"bits_each must be a positive multiple of 8, got {bits_each}")
    return take(stream_for(spec, index), bits_each // 8)


# ---------------------------------------------------------------------------
# Corpus writing
# ---------------------------------------------------------------------------

def sequence_filename(index: int) -> str:
    return f"seq_{index:05d}.bin"


def _generate_worker(spec_data: dict, index: int, bits_each: int) -> dict:
    """Build one sequence in a worker process; the coordinator writes it."""
    try:
        spec = GeneratorSpec.from_dict(spec_data)
        data = generate_sequence(spec, index, bits_each)
        seed = spec.seed_for(index)
        return {
            "status": "success",
            "index": index,
            "seed": seed.decode("ascii") if spec.seed_pattern == DRBG_SEED_PATTERN else (seed.hex() if seed else None),
            "data": data,
        }
    except Exception as e:
        return {"status": "error", "index": index, "error": str(e)}


def _empty_manifest(spec: GeneratorSpec, count: int, bits_each: int) -> dict:
    return {
        "generator": spec.kind,
        "hash": spec.hash,
        "seed_pattern": spec.seed_pattern,
        "spec": spec.to_dict(),
        "biased": spec.kind == BIASED_WRAPPER,
        "count": count,
        "bits_each": bits_each,
        "files": [],
    }


def file_digest(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for block in iter(lambda: handle.read(1 << 20), b""):
            digest.update(block)
    return digest.hexdigest()


def load_manifest(directory) -> Optional[dict]:
    path = Path(directory) / MANIFEST_NAME
    if not path.exists():
        return None
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def save_manifest(directory, manifest: dict) -> Path:
    path = Path(directory) / MANIFEST_NAME
    manifest = dict(manifest)
    manifest["files"] = sorted(manifest["files"], key=lambda entry: entry["index"])
    tmp = path.with_suffix(".json.tmp")
    with open(tmp, "w", encoding="utf-8") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")
    os.replace(tmp, path)
    return path


def _reusable_entries(manifest: Optional[dict], spec: GeneratorSpec, count: int,
                      bits_each: int, directory: Path) -> Dict[int, dict]:
    if not manifest:
        return {}
    if manifest.get("spec") != spec.to_dict() or manifest.get("bits_each") != bits_each:
        logger.info("Existing manifest in %s describes another corpus; regenerating", directory)
        return {}
    kept = {}
    for entry in manifest.get("files", []):
        index = entry["index"]
        path = directory / sequence_filename(index)
        if index < count and path.exists() and path.stat().st_size == entry["bytes"] \
                and file_digest(path) == entry["digest"]:
            kept[index] = entry
    return kept


def write_corpus(spec: GeneratorSpec, count: int, bits_each: int, directory,
                 workers: int = 1, progress: Optional[Callable[[dict], None]] = None) -> dict:
    """
    Write ``count`` sequences of ``bits_each`` bits plus a JSON manifest.

    Files already listed in an existing manifest for the same spec are kept
    when their size and digest still match, so an interrupted run resumes
    where it stopped. Workers only compute bytes; this coordinator is the
    sole writer of sequence files and of the manifest.

    Args:
        spec (GeneratorSpec): Generator description.
        count (int): Number of sequences (0 writes an empty manifest).
        bits_each (int): Length of every sequence, a multiple of 8.
        directory: Output directory, created if missing.
        workers (int): Process count; 1 generates in-process.
        progress: Optional callback receiving each per-file status dict.

    Returns:
        dict: The manifest, also written to ``directory/manifest.json``.

    Raises:
        CorpusError: A file could not be generated or written.
    """
    if bits_each % 8 or bits_each <= 0:
        raise DomainError(f"bits_each must be a positive multiple of 8, got {bits_each}")
    if count < 0:
        raise DomainError(f"count must be non-negative, got {count}")
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise CorpusError(-1, f"cannot create {directory}: {e}") from e

    manifest = _empty_manifest(spec, count, bits_each)
    kept = _reusable_entries(load_manifest(directory), spec, count, bits_each, directory)
    manifest["files"] = list(kept.values())
    pending = [i for i in range(count) if i not in kept]
    if kept:
        logger.info("Resuming corpus in %s: %d of %d files already present", directory, len(kept), count)

    written = 0

    def record(result: dict) -> None:
        nonlocal written
        index = result["index"]
        if result["status"] != "success":
            save_manifest(directory, manifest)
            raise CorpusError(index, result["error"])
        data = result.pop("data")
        path = directory / sequence_filename(index)
        try:
            path.write_bytes(data)
        except OSError as e:
            save_manifest(directory, manifest)
            raise CorpusError(index, f"write failed: {e}") from e
        manifest["files"].append({
            "index": index,
            "seed": result["seed"],
            "bytes": len(data),
            "digest": hashlib.sha256(data).hexdigest(),
        })
        written += 1
        if written % MANIFEST_FLUSH_EVERY == 0:
            save_manifest(directory, manifest)
        if progress:
            progress(result)

    spec_data = spec.to_dict()
    if workers <= 1 or len(pending) <= 1:
        for index in pending:
            record(_generate_worker(spec_data, index, bits_each))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_generate_worker, spec_data, index, bits_each) for index in pending]
            try:
                for future in as_completed(futures):
                    record(future.result())
            except CorpusError:
                executor.shutdown(wait=False, cancel_futures=True)
                raise

    save_manifest(directory, manifest)
    manifest["files"] = sorted(manifest["files"], key=lambda entry: entry["index"])
    logger.info("Corpus %s: %d files (%d generated, %d reused)", directory, count, written, len(kept))
    return manifest
