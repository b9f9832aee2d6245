"""
Exceptions raised while loading data and computing correlations.
"""

from typing import Optional

from src.exceptions import CausalSearchError


class DataError(CausalSearchError):
    """Base exception for data errors."""
    exit_code = 2


class DataParseError(DataError):
    """Raised when a data file cannot be parsed."""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None):
        self.row = row
        self.column = column
        super().__init__(message)


class DegenerateDataError(DataError):
    """Raised when a column has zero sample variance."""
    pass


class SingularMatrixError(DataError):
    """Raised when a conditioning submatrix cannot be inverted."""
    pass
