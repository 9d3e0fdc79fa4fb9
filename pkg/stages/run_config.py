"""
Run configuration for the LIL audit pipeline.

Values are layered: built-in defaults, then environment variables (a .env
file is loaded by the entry point), then an optional JSON file, then
command-line flags.
"""

import json
import os
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Optional

from tools import __version__
from tools.bitstream_tool import CheckpointSet
from tools.errors import CheckpointError, ConfigError, DomainError
from tools.evaluator_tool import VerdictThresholds
from tools.generator_tool import GENERATOR_KINDS, GeneratorSpec
from tools.probability_tool import Tolerances

COMMANDS = ("tables", "generate", "analyze", "evaluate", "run")

# Theoretical tables run at full scale; empirical commands default to desk scale.
TABLES_BASE_EXP = 26
DESK_BASE_EXP = 16


@dataclass(frozen=True)
class RunConfig:
    command: str = "tables"
    alpha: float = 0.1
    checkpoint_base_exp: Optional[int] = None
    checkpoint_count: int = 9
    generator: str = "counter-prng"
    hash: str = "sha1"
    seed_hex: str = ""
    generator_params: dict = field(default_factory=dict)
    m: int = 1000
    bits_each: Optional[int] = None
    out: str = "output"
    corpus_dir: Optional[str] = None
    workers: int = 1
    buffer_bytes: int = 1 << 20
    plot_data: bool = True
    ideal_method: str = "auto"
    tvd_threshold: float = 0.03
    rmsd_threshold: float = 0.001
    noise_z: float = 3.0
    min_sample: int = 100
    quad_abs_tol: float = 1e-9
    two_point_agreement: float = 1e-7
    three_point_agreement: float = 1e-6
    strong_agreement: float = 1e-5

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if not 0.0 < self.alpha <= 0.25:
            raise ConfigError(f"alpha must lie in (0, 0.25], got {self.alpha}")
        if self.checkpoint_count < 1:
            raise ConfigError(f"checkpoint_count must be positive, got {self.checkpoint_count}")
        if self.generator not in GENERATOR_KINDS:
            raise ConfigError(f"unknown generator {self.generator!r}; choose from {GENERATOR_KINDS}")
        if self.m < 0:
            raise ConfigError(f"m must be non-negative, got {self.m}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if self.ideal_method not in ("auto", "normal", "binomial"):
            raise ConfigError(f"unknown ideal_method {self.ideal_method!r}")
        try:
            self.checkpoints()
            self.generator_spec()
        except (CheckpointError, DomainError, ValueError) as e:
            raise ConfigError(str(e)) from e
        if self.sequence_bits < self.checkpoints().max or self.sequence_bits % 8:
            raise ConfigError(
                f"bits_each={self.sequence_bits} must be a multiple of 8 covering the largest "
                f"checkpoint {self.checkpoints().max}"
            )

    @property
    def base_exp(self) -> int:
        if self.checkpoint_base_exp is not None:
            return self.checkpoint_base_exp
        return TABLES_BASE_EXP if self.command == "tables" else DESK_BASE_EXP

    @property
    def theta(self) -> float:
        return 1.0 - self.alpha

    @property
    def sequence_bits(self) -> int:
        return self.bits_each if self.bits_each is not None else self.checkpoints().max

    def checkpoints(self) -> CheckpointSet:
        return CheckpointSet.powers_of_two(self.base_exp, self.checkpoint_count)

    def tolerances(self) -> Tolerances:
        return Tolerances(
            quad_abs=self.quad_abs_tol,
            two_point_agreement=self.two_point_agreement,
            three_point_agreement=self.three_point_agreement,
            strong_agreement=self.strong_agreement,
        )

    def thresholds(self) -> VerdictThresholds:
        return VerdictThresholds(
            tvd=self.tvd_threshold, rmsd=self.rmsd_threshold, noise_z=self.noise_z, min_sample=self.min_sample
        )

    def generator_spec(self) -> GeneratorSpec:
        return GeneratorSpec(
            kind=self.generator, hash=self.hash, seed=bytes.fromhex(self.seed_hex), params=dict(self.generator_params)
        )

    def score_alphas(self) -> tuple:
        """The configured alpha first, then the other standard level."""
        return (self.alpha,) + tuple(a for a in (0.1, 0.05) if a != self.alpha)

    @property
    def out_dir(self) -> Path:
        return Path(self.out)

    @property
    def corpus_path(self) -> Path:
        return Path(self.corpus_dir) if self.corpus_dir else self.out_dir / "corpus"

    @property
    def analysis_path(self) -> Path:
        return self.out_dir / "analysis"

    @property
    def report_path(self) -> Path:
        return self.out_dir / "report"

    @property
    def tables_path(self) -> Path:
        return self.out_dir / "tables"

    def to_dict(self) -> dict:
        data = asdict(self)
        data["resolved_base_exp"] = self.base_exp
        data["checkpoints"] = list(self.checkpoints())
        return data

    def provenance(self) -> dict:
        return {"config": self.to_dict(), "version": __version__}

    def with_command(self, command: str) -> "RunConfig":
        return replace(self, command=command)

    @classmethod
    def from_sources(cls, command: str, config_file: Optional[str] = None, **overrides) -> "RunConfig":
        """
        Build a RunConfig from env defaults, a JSON file and flag overrides.

        Flag overrides equal to None are ignored so unset options fall through.

        Raises:
            ConfigError: unreadable file, unknown keys or invalid values.
        """
        known = {f.name for f in fields(cls)}
        values = _env_defaults()
        if config_file:
            try:
                with open(config_file, "r", encoding="utf-8") as f:
                    loaded = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigError(f"cannot read config {config_file}: {e}") from e
            if not isinstance(loaded, dict):
                raise ConfigError(f"config {config_file} must hold a JSON object")
            unknown = sorted(set(loaded) - known)
            if unknown:
                raise ConfigError(f"unknown config keys in {config_file}: {', '.join(unknown)}")
            values.update(loaded)
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise ConfigError(f"unknown options: {', '.join(unknown)}")
        values.update({k: v for k, v in overrides.items() if v is not None})
        values["command"] = command
        try:
            return cls(**values)
        except TypeError as e:
            raise ConfigError(str(e)) from e


def _env_defaults() -> dict:
    values = {}
    if os.getenv("LILAUDIT_OUTPUT_DIR"):
        values["out"] = os.getenv("LILAUDIT_OUTPUT_DIR")
    try:
        values["workers"] = int(os.getenv("LILAUDIT_WORKERS", str(os.cpu_count() or 1)))
        if os.getenv("LILAUDIT_BUFFER_BYTES"):
            values["buffer_bytes"] = int(os.getenv("LILAUDIT_BUFFER_BYTES"))
    except ValueError as e:
        raise ConfigError(f"invalid numeric environment setting: {e}") from e
    return values
