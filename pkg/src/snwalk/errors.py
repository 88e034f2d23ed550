"""Exception types shared across the package."""


class Error(ValueError):
    """Base class for all domain errors raised by snwalk."""


class SizeMismatch(Error):
    """Two objects that must live in the same symmetric group do not."""


class TooSmall(Error):
    """The input is below the smallest size the operation is defined for."""


class TooLarge(Error):
    """The input exceeds the configured enumeration bound."""


class BadK(Error):
    """A cycle-length parameter k is outside 1..n."""


class BadN(Error):
    """The operation is undefined for this value of n."""


class BadIndices(Error):
    """An index pair (i, j) violates 1 <= i < j <= n."""


class BudgetExceeded(Error):
    """A brute-force enumeration would exceed its work budget."""
