"""
Conditional-independence tests sharing one interface.
"""

from .base import IndependenceTest, TestResult
from .bic_diff import BicDiffTest, bic_diff_test
from .cache import CachedTest, ResultCache
from .exceptions import DegenerateRegressionError, IndependenceTestError, InsufficientSampleError
from .fisher_z import FisherZTest, fisher_z_test
from .oracle import OracleTest, oracle_test
from .registry import TestRegistry

__all__ = [
    "BicDiffTest",
    "CachedTest",
    "DegenerateRegressionError",
    "FisherZTest",
    "IndependenceTest",
    "IndependenceTestError",
    "InsufficientSampleError",
    "OracleTest",
    "ResultCache",
    "TestRegistry",
    "TestResult",
    "bic_diff_test",
    "fisher_z_test",
    "oracle_test",
]
