"""Exception types shared across the package."""

from __future__ import annotations


class GkError(Exception):
    """Base class for errors raised by this package."""


class InvalidGeneratorError(GkError, ValueError):
    """A generator index lies outside the valid range 1..k+1."""


class ContextMismatchError(GkError, ValueError):
    """Operands belong to different group contexts."""


class BoundExceededError(GkError, ValueError):
    """A configured size or search bound would be exceeded."""


class ContractibleError(GkError, ValueError):
    """An intersection family contains a redundant member set.

    ``removable_index`` is the 1-based position of a set whose parity
    constraint is implied by the remaining ones.
    """

    def __init__(self, removable_index: int, message: str | None = None) -> None:
        self.removable_index = removable_index
        if message is None:
            message = f"intersection is contractible: set #{removable_index} is redundant"
        super().__init__(message)


class UnsupportedIndexError(GkError, ValueError):
    """Requested subgroup index falls outside the verified range."""


class NonClosureError(GkError, RuntimeError):
    """Coset table failed to close within the radius bound.

    ``frontier_size`` counts the transition slots still open when the
    radius limit was hit.
    """

    def __init__(self, frontier_size: int, max_radius: int) -> None:
        self.frontier_size = frontier_size
        self.max_radius = max_radius
        super().__init__(
            f"coset table did not close within radius {max_radius} "
            f"({frontier_size} open transitions)"
        )


class QuotientUndefinedError(GkError, ValueError):
    """Quotient construction requires a certified-normal subgroup."""
