"""Exception hierarchy for the phonemask package."""


class PhonemaskError(Exception):
    """Base class for all package errors."""


class ContractError(PhonemaskError, ValueError):
    """An argument violated a documented precondition."""


class ManifestError(PhonemaskError):
    """Malformed manifest line; carries the offending line number."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class IngestError(PhonemaskError):
    """Referenced audio could not be loaded."""


class ClassificationError(PhonemaskError):
    """Phoneme label not present in the classification tables."""


class ExtractionError(PhonemaskError):
    """Voiceprint extraction failed (silence, too short, bad input)."""


class RegistrationError(PhonemaskError):
    """Speaker registration could not produce a usable profile."""


class SynthesisError(PhonemaskError):
    """Noise synthesis preconditions not met (e.g. empty phoneme class)."""


class AlignmentError(PhonemaskError):
    """Reference/recording alignment failed (no usable correlation peak)."""


class EstimationError(PhonemaskError):
    """Adaptive channel estimation diverged."""


class ConfigError(PhonemaskError):
    """Invalid or missing pipeline configuration."""


class StageError(PhonemaskError):
    """A pipeline stage failed; carries the stage name."""

    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f"stage '{stage}': {message}")


class TransportError(PhonemaskError):
    """External service unreachable or timed out."""


class ServiceError(PhonemaskError):
    """External service answered with an error status."""
