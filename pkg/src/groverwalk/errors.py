"""Exception types shared across the package."""


class GraphValidationError(ValueError):
    """Input does not describe a valid graph of the requested kind."""


class ConsistencyError(RuntimeError):
    """Two computations that must agree did not; signals a numerical or logic bug."""
