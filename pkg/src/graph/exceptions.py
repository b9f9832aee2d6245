"""
Exceptions raised by graph operations.
"""

from src.exceptions import CausalSearchError


class GraphError(CausalSearchError):
    """Base exception for graph errors."""
    pass


class InvalidGraphError(GraphError):
    """Raised when an input graph violates the structure an operation requires."""
    pass


class GraphPreconditionError(GraphError):
    """Raised when an operation is called on a graph that does not meet its precondition."""
    exit_code = 3


class GraphFormatError(GraphError):
    """Raised when the graph text format cannot be parsed."""
    pass
