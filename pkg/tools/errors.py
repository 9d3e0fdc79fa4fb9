"""
Error types for the LIL audit toolkit.

Every failure the toolkit raises on purpose derives from LilAuditError so the
command line front end can map it to an exit code in one place.
"""


class LilAuditError(Exception):
    """Base class for all toolkit errors."""


class DomainError(LilAuditError, ValueError):
    """An argument lies outside the range where a statistic is defined."""


class CheckpointError(DomainError):
    """A checkpoint set violates ordering, alignment or minimum-length rules."""


class TruncatedSourceError(LilAuditError):
    """A sequence ends before the largest requested checkpoint."""

    def __init__(self, identifier: str, available_bits: int, required_bits: int):
        self.identifier = identifier
        self.available_bits = available_bits
        self.required_bits = required_bits
        self.deficit_bits = required_bits - available_bits
        super().__init__(
            f"{identifier}: source holds {available_bits} bits, "
            f"checkpoint needs {required_bits} (short by {self.deficit_bits} bits)"
        )


class SourceIOError(LilAuditError, OSError):
    """A sequence source could not be opened or read."""


class NumericalError(LilAuditError, ArithmeticError):
    """Quadrature missed its tolerance, or two evaluation routes disagree."""

    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (achieved residual {residual:.3e})")


class StructuralError(LilAuditError):
    """Traces handed to one test do not share a checkpoint set."""


class CorpusError(LilAuditError):
    """Writing one corpus file failed."""

    def __init__(self, index: int, reason: str):
        self.index = index
        super().__init__(f"corpus file {index}: {reason}")


class ConfigError(LilAuditError):
    """Configuration could not be parsed or is inconsistent."""
