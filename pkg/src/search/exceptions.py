"""
Exceptions raised by the search drivers.
"""

from typing import Optional, Sequence, Tuple

from src.exceptions import CausalSearchError, InvalidConfigError


class SearchError(CausalSearchError):
    """Raised when an independence test fails mid-search; carries the query."""

    def __init__(
        self,
        message: str,
        pair: Optional[Tuple[str, str]] = None,
        given: Optional[Sequence[str]] = None,
        exit_code: Optional[int] = None,
    ):
        self.pair = pair
        self.given = list(given) if given is not None else None
        super().__init__(message, exit_code)


class ConsistencyError(CausalSearchError):
    """Raised when search bookkeeping contradicts itself."""
    exit_code = 3


__all__ = ["ConsistencyError", "InvalidConfigError", "SearchError"]
