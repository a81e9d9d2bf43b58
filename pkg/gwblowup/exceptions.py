from typing import TYPE_CHECKING, Any, Optional

if TYPE_CHECKING:
    from gwblowup.models.curve import CurveClass


class GwBlowupError(Exception):
    """Base class for all errors raised by the invariant engine and its tools."""


class UndefinedInvariantError(GwBlowupError):
    """N_{d,alpha} was requested for a class with negative expected dimension."""

    def __init__(self, cls: "CurveClass"):
        self.cls = cls
        super().__init__("undefined: expected dimension is negative")


class RecursionConsistencyError(GwBlowupError):
    """The recursion produced a value it must never produce.

    Raised for an inexact division in R(i), a negative invariant, or two
    different values written for the same memo key.
    """

    def __init__(self, cls: Any, detail: str):
        self.cls = cls
        self.detail = detail
        super().__init__(f"recursion consistency violation at {cls}: {detail}")


class CacheFormatError(GwBlowupError):
    """A cache file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CacheWriteError(GwBlowupError):
    """Saving the memo store failed."""

    def __init__(self, destination: Any, cause: Exception):
        self.destination = destination
        self.cause = cause
        super().__init__(f"cannot write cache to {destination}: {cause}")


class VerificationFailure(GwBlowupError):
    """A cross-check found a nonzero residual or a mismatch."""

    def __init__(self, message: str, report: Any = None):
        self.report = report
        super().__init__(message)
