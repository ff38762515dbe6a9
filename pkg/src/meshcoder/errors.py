"""Exception hierarchy shared by all meshcoder modules.

Every exception carries a short machine-parseable ``category`` used by the
CLI to emit single-line error reports.
"""


class MeshcoderError(Exception):
    """Base class for all errors raised by this package."""

    category = "error"


class ShapeError(MeshcoderError):
    """An array argument has the wrong shape or size."""

    category = "shape-mismatch"


class DomainError(MeshcoderError):
    """A numeric argument is outside its valid domain (non-finite, <= 0, ...)."""

    category = "domain"


class ConfigError(MeshcoderError):
    """Bad configuration file, unknown key, or incompatible checkpoints."""

    category = "config"


class FormatError(MeshcoderError):
    """Corrupt or version-mismatched binary container / bundle."""

    category = "format"


class TransferError(MeshcoderError):
    """Weight transfer between networks failed (no partial transfer happened)."""

    category = "transfer"


class GenerationError(MeshcoderError):
    """Synthetic data generation could not satisfy its constraints."""

    category = "generation"


class TrainingError(MeshcoderError):
    """Training aborted (for example on a non-finite loss)."""

    category = "training"
