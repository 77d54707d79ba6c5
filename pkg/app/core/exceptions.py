"""
Domain exceptions raised by the computation services
"""
from typing import Optional


class CoxinvError(Exception):
    """Base class for every error the library raises on purpose"""


class InvalidGroupError(CoxinvError, ValueError):
    """Unknown group name, invalid rank, or invalid class selector"""


class NotAnInvolutionError(CoxinvError, ValueError):
    """An element that was required to square to the identity does not"""


class ElementOutsideGroupError(CoxinvError, ValueError):
    """A signed permutation is not an element of the requested group"""


class InvalidReflectionBoundError(CoxinvError, ValueError):
    """Reversal bound smaller than the polynomial degree"""


class MissingDataError(CoxinvError, LookupError):
    """No embedded class record for the requested (group, label, size)"""


class BudgetExceededError(CoxinvError):
    """A computation would exceed its desk-scale budget"""

    def __init__(self, message: str, required: Optional[int] = None,
                 budget: Optional[int] = None, allow_override: bool = True):
        super().__init__(message)
        self.required = required
        self.budget = budget
        self.allow_override = allow_override


class TranscriptionError(CoxinvError):
    """Embedded tables disagree with themselves"""


class SelfCheckError(CoxinvError, AssertionError):
    """Two independent computations of the same value disagree"""
