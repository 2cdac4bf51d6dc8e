"""
Error types raised by the threshold code library.
"""


class ThresholdError(ValueError):
    """Base class for every domain error."""


class CodeParseError(ThresholdError):
    """Text that is not a valid creation code."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"Invalid code {text!r} at position {position}: {reason}")


class NotAlmostAlternating(ThresholdError):
    """Size classification requested for a code with no ab-form."""


class PatternMismatch(ThresholdError):
    """A local move applied at a window that does not read its pattern."""

    def __init__(self, kind: str, position: int, detail: str = ''):
        self.kind = kind
        self.position = position
        message = f"{kind} does not apply at position {position}"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class NotThreshold(ThresholdError):
    """Graph with no isolated or dominating vertex left to peel."""


class OracleLimitExceeded(ThresholdError):
    """Brute-force oracle called on a graph above its configured size."""

    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"Oracle limit exceeded: {n} vertices > {limit}")


class EdgeCountOutOfRange(ThresholdError):
    """Requested (n, e) outside 0 <= e <= C(n, 2) or n < 1."""

    def __init__(self, n: int, e: int):
        self.n = n
        self.e = e
        super().__init__(f"No threshold graph with {n} vertices and {e} edges")


class UnknownFormat(ThresholdError):
    """Unsupported export or report format."""


class ComputationError(ThresholdError):
    """Internal failure not caused by the arguments; commands exit with status 1."""


class ReductionDidNotConverge(ComputationError):
    """A move reduction exceeded MAX_REWRITE_STEPS."""


class InvariantViolation(ComputationError):
    """A move changed the number of vertices or edges."""


class ConstructionMismatch(ComputationError):
    """Two constructions of the same extremal code disagree."""
