"""Exception hierarchy for the arithinv package.

Every error raised deliberately by this package derives from
:class:`ArithInvError`, so callers can catch one base class at API
boundaries (the CLI does exactly that).
"""

from __future__ import annotations


class ArithInvError(Exception):
    """Base class for all errors raised by arithinv."""


class ParseError(ArithInvError, ValueError):
    """A textual group, element, or sequence description is malformed."""


class InvalidSpecError(ArithInvError, ValueError):
    """A group specification is structurally invalid (e.g. torsion entry < 2)."""


class IncompatibleElementsError(ArithInvError, ValueError):
    """Elements or sequences from different groups/alphabets were combined."""


class NotEnumerableError(ArithInvError, ValueError):
    """An enumeration was requested over an infinite collection.

    Raised e.g. when listing all elements of a group with free rank > 0,
    when enumerating atoms over an alphabet containing classes of infinite
    order, or when a scan over such an alphabet lacks an explicit support
    restriction.
    """


class NonDivisorError(ArithInvError, ValueError):
    """Sequence division was attempted by a non-divisor."""


class NotZeroSumError(ArithInvError, ValueError):
    """A zero-sum sequence was required but the given one has nonzero sum."""


class IncompatibleFactorizationsError(ArithInvError, ValueError):
    """Distance was requested between factorizations of different elements."""


class SizeLimitError(ArithInvError, RuntimeError):
    """A computation would exceed a configured size limit.

    Attributes
    ----------
    limit:
        The configured limit that would be exceeded.
    count:
        The offending size, when cheaply available (may be ``None``).
    """

    def __init__(self, message: str, *, limit: int | None = None,
                 count: int | None = None) -> None:
        super().__init__(message)
        self.limit = limit
        self.count = count


class InvalidAtomError(ArithInvError, ValueError):
    """An argument required to be an atom is not one."""


class InvalidTargetError(ArithInvError, ValueError):
    """A requested target value is outside the representable range."""


class InvalidInstanceError(ArithInvError, ValueError):
    """A structured problem instance violates its preconditions."""


class UnsupportedGroupError(ArithInvError, ValueError):
    """A construction is not defined for the given group."""


class InvariantViolationError(ArithInvError, RuntimeError):
    """An internal consistency check between invariants failed.

    This is raised by scan post-checks; it indicates a bug rather than bad
    input, which is why it is a RuntimeError.
    """
