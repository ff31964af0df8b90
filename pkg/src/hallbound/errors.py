"""Exception types shared across the library.

Every guard in the library fails loudly through one of these classes so a
blown budget or a bad input is never silently absorbed.
"""


class GroupError(Exception):
    """Base class for all library-specific failures."""


class DegreeMismatch(GroupError, ValueError):
    """Raised when permutations or groups of different degrees are mixed."""


class CapExceeded(GroupError):
    """A brute-force operation was asked to exceed its enumeration budget."""

    def __init__(self, message: str, *, needed=None, cap=None):
        super().__init__(message)
        self.needed = needed
        self.cap = cap


class SubgroupError(GroupError, ValueError):
    """An argument that must be a subgroup (or normal subgroup) is not."""


class PreconditionError(GroupError, ValueError):
    """An operation's mathematical hypothesis is violated by the input."""
