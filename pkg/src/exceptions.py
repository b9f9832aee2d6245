"""
Base exception shared by all subpackages.
"""

from typing import Optional


class CausalSearchError(Exception):
    """Base exception for the causal search engine.

    The exit code is what the command-line front end returns when the error
    reaches it unhandled.
    """

    exit_code: int = 2

    def __init__(self, message: str, exit_code: Optional[int] = None):
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(self.message)


class InvalidConfigError(CausalSearchError):
    """Raised when run parameters are invalid or do not match the input."""
    exit_code = 1
