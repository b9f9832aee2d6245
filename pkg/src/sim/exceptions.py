"""
Exceptions raised by graph and data simulation.
"""

from src.exceptions import CausalSearchError


class SimulationError(CausalSearchError):
    """Raised when simulation parameters are unusable."""
    exit_code = 1
