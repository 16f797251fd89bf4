"""
Exception hierarchy for tailspan.

Every error carries a short snake_case ``code`` so the command line can report
failures as a single machine-parseable line.
"""

from typing import Optional


class TailspanError(Exception):
    """Base class for all tailspan errors."""
    code = "tailspan_error"


class SignalError(TailspanError, ValueError):
    """Signal values are malformed (wrong length, NaN, infinity)."""
    code = "invalid_signal"


class UndefinedFourierRatioError(TailspanError, ValueError):
    """Fourier ratio requested for the zero signal."""
    code = "undefined_fourier_ratio"


class DegenerateSpectrumError(TailspanError, ValueError):
    """Large spectrum requested for a zero signal or with a non-positive eta."""
    code = "degenerate_spectrum"


class SpanDimensionError(TailspanError, ValueError):
    """A span result and a spectrum live over different moduli."""
    code = "dimension_mismatch"


class OracleBudgetExceededError(TailspanError, RuntimeError):
    """The exhaustive minimal-set search would examine too many subsets."""
    code = "oracle_budget_exceeded"


class SynthParameterError(TailspanError, ValueError):
    """Synthetic signal parameters are out of range."""
    code = "invalid_synth_parameters"


class IngestError(TailspanError):
    """A series file could not be read or parsed."""
    code = "ingest_error"

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{location}{message}")


class SweepError(TailspanError):
    """A sweep failed; identifies the eta that caused it when there is one."""
    code = "sweep_error"

    def __init__(self, eta: Optional[float], cause: Exception):
        self.eta = eta
        self.cause = cause
        prefix = f"eta={eta}: " if eta is not None else ""
        super().__init__(f"{prefix}{cause}")


class OutputError(TailspanError):
    """A report or figure could not be written."""
    code = "output_error"


class UnknownPresetError(TailspanError, KeyError):
    """No eta grid of that name in the configuration."""
    code = "unknown_preset"

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
