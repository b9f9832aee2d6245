"""
Exceptions raised by conditional-independence tests.
"""

from src.exceptions import CausalSearchError


class IndependenceTestError(CausalSearchError):
    """Base exception for independence-test errors."""
    exit_code = 2


class InsufficientSampleError(IndependenceTestError):
    """Raised when the sample is too small for the conditioning set."""
    pass


class DegenerateRegressionError(IndependenceTestError):
    """Raised when a regression design matrix is rank deficient."""
    pass
