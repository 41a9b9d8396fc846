class BudgetExceededError(ValueError):
    """A requested enumeration or summation is larger than the configured budget."""


class PermutationParseError(ValueError):
    """Malformed cycle notation."""
