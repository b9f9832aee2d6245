"""
Exceptions raised while comparing graphs.
"""

from src.exceptions import CausalSearchError


class MetricsError(CausalSearchError):
    """Raised when two graphs cannot be compared."""
    exit_code = 2
