"""
Exception hierarchy for pframe.

Every error carries a ``witness``: a short, human-readable description of
the offending elements (by their identifiers, never by internal index).
"""
from typing import Any, Optional


class PFrameError(ValueError):
    """Base class for every error raised by the library."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


# ========================== ORDER ==========================
class DuplicateElement(PFrameError):
    pass


class UnknownElement(PFrameError):
    pass


class CycleDetected(PFrameError):
    """Raised when the closure of the given pairs violates antisymmetry."""


class NotMeetSemilattice(PFrameError):
    pass


# ========================== SELECTION ==========================
class MissingSets(PFrameError):
    pass


# ========================== FRAMES ==========================
class MissingJoin(PFrameError):
    pass


class DistributivityFailure(PFrameError):
    pass


class MapValidationError(PFrameError):
    """Common parent of the three map-law violations."""


class MeetViolation(MapValidationError):
    pass


class TopViolation(MapValidationError):
    pass


class JoinViolation(MapValidationError):
    pass


class JoinUndefined(PFrameError):
    """A binary join needed by a formula does not exist in the carrier."""


class ImageNotComplemented(PFrameError):
    pass


# ========================== RESOURCES / INPUT ==========================
class CapacityExceeded(PFrameError):
    def __init__(self, what: str, bound: int):
        super().__init__(f"{what} exceeds the configured capacity of {bound}", witness=bound)
        self.bound = bound


class ParseError(PFrameError):
    pass


class UnknownStructure(PFrameError):
    pass


class InvariantViolation(PFrameError):
    """An internal consistency check failed; this is always a defect."""
