"""Exception types shared across the package."""

from __future__ import annotations


class MatroidError(Exception):
    """Base class for every package-specific error."""


class InvalidParameter(MatroidError):
    """A constructor or operation argument is out of range."""


class UnknownName(InvalidParameter):
    """Requested catalog name is not defined."""


class OverlappingSpec(InvalidParameter):
    """Minor spec has intersecting delete and contract sets."""


class ParseError(MatroidError):
    """A matroid file is malformed or degenerate."""


class AxiomError(MatroidError):
    """A circuit family failed C1/C2/C3 validation."""

    def __init__(self, report) -> None:
        super().__init__(report.describe())
        self.report = report


class CapExceeded(MatroidError):
    """An enumeration would exceed the configured desk-scale cap."""


class PreconditionViolated(MatroidError):
    """Caller broke an operation's contract; signals upstream logic error."""


class TheoremViolation(MatroidError):
    """A machine-checked consequence of the theory failed.

    On valid inputs this can only mean an implementation bug, so callers
    must not swallow it.
    """


class ExtractionFailed(TheoremViolation):
    """Minor search exhausted its space; contradicts guaranteed existence."""


class LiftFailed(TheoremViolation):
    """No parent circuit/cocircuit lifts a minor intersection."""
