"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed input document (graph, target vector, or weights file)."""


class ValidationError(ValueError):
    """Structurally well-formed input that violates a semantic requirement."""


class PreconditionError(ValueError):
    """An operation was called outside its stated precondition."""


class ResourceLimitError(RuntimeError):
    """Instance exceeds a configured enumeration bound."""


class NotConvergedError(RuntimeError):
    """Iterative method did not converge within the iteration budget."""
