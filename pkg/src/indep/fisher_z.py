"""
Fisher Z test of vanishing partial correlation.
"""

import logging
import math
from typing import Sequence

import numpy as np
from scipy.special import ndtr

from src.data.correlation import (
    MAX_ABS_CORRELATION,
    CorrelationMatrix,
    clamp_correlation,
    partial_correlation,
)
from src.models.base import TestConfig, TestKind

from .base import IndependenceTest, TestResult
from .exceptions import InsufficientSampleError

logger = logging.getLogger(__name__)


def fisher_z_statistic(r: float, sample_size: int, conditioning_size: int) -> float:
    """sqrt(n - |S| - 3) * atanh(r).

    Raises:
        InsufficientSampleError: If n <= |S| + 3
    """
    dof = sample_size - conditioning_size - 3
    if dof <= 0:
        raise InsufficientSampleError(
            f"Sample size {sample_size} too small for a conditioning set of size {conditioning_size}"
        )
    return math.sqrt(dof) * math.atanh(clamp_correlation(r))


def two_sided_p_value(z: float) -> float:
    """2 * (1 - Phi(|z|)), computed in the upper tail to keep precision."""
    return min(1.0, max(0.0, 2.0 * float(ndtr(-abs(z)))))


class FisherZTest(IndependenceTest):
    """Gaussian partial-correlation test on a correlation matrix."""

    kind = TestKind.FISHER_Z

    def __init__(self, correlation: CorrelationMatrix, config: TestConfig):
        self.correlation = correlation
        super().__init__(correlation.variables, config)

    @property
    def sample_size(self) -> int:
        return self.correlation.sample_size

    def test(self, x: int, y: int, given: Sequence[int]) -> TestResult:
        r = partial_correlation(self.correlation, x, y, given)
        z = fisher_z_statistic(r, self.sample_size, len(set(given)))
        p_value = two_sided_p_value(z)
        return TestResult(p_value > self.config.alpha, p_value, z)

    def marginal_dependence(self) -> np.ndarray:
        entries = np.clip(self.correlation.entries, -MAX_ABS_CORRELATION, MAX_ABS_CORRELATION)
        if self.sample_size <= 3:
            raise InsufficientSampleError(f"Sample size {self.sample_size} too small for any test")
        z = math.sqrt(self.sample_size - 3) * np.arctanh(entries)
        p_values = np.clip(2.0 * ndtr(-np.abs(z)), 0.0, 1.0)
        dependent = p_values <= self.config.alpha
        np.fill_diagonal(dependent, False)
        logger.debug("Depth-0 screen: %d dependent pairs", int(dependent.sum()) // 2)
        return dependent


def fisher_z_test(
    correlation: CorrelationMatrix,
    x: int,
    y: int,
    given: Sequence[int],
    alpha: float,
) -> TestResult:
    """One-off Fisher Z query."""
    return FisherZTest(correlation, TestConfig(alpha=alpha)).test(x, y, given)
