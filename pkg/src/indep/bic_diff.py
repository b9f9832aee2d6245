"""
Independence judged by the difference of two linear-Gaussian BIC scores.

B1 scores the regression of y on S + {x}, B2 the regression of y on S, each as
BIC = 2L - c*k*ln N with L = -n/2 ln(residual variance). Adding x multiplies
the residual variance by 1 - r^2, where r is the partial correlation of x and
y given S, so

    B1 - B2 = -n ln(1 - r^2) - c ln N.

x and y are judged independent when B1 - B2 <= 0, i.e. when x does not pay
for its penalty. The companion p-value is the upper tail of the variance-ratio
F statistic with (1, n - 2) degrees of freedom. Both it and B1 - B2 are
functions of r^2 alone, so the p-value falls exactly as the score rises, for
conditioning sets of any size. Competing sets are ranked by B1 - B2 itself.
"""

import logging
import math
from typing import Sequence

import numpy as np
from scipy.special import fdtrc

from src.data.correlation import (
    MAX_ABS_CORRELATION,
    CorrelationMatrix,
    clamp_correlation,
    correlation,
    partial_correlation,
)
from src.data.dataset import Dataset
from src.data.exceptions import SingularMatrixError
from src.models.base import TestConfig, TestKind

from .base import IndependenceTest, TestResult
from .exceptions import DegenerateRegressionError, InsufficientSampleError

logger = logging.getLogger(__name__)

COLLINEARITY_TOLERANCE = 1e-10


def bic_difference(r: float, sample_size: int, penalty: float) -> float:
    """B1 - B2 for a partial correlation r."""
    r = clamp_correlation(r)
    return -sample_size * math.log1p(-r * r) - penalty * math.log(sample_size)


def check_sample_size(sample_size: int, conditioning_size: int) -> None:
    """Require residual degrees of freedom for the larger regression.

    Raises:
        InsufficientSampleError: If n - |S| - 2 <= 0
    """
    if sample_size - conditioning_size - 2 <= 0:
        raise InsufficientSampleError(
            f"Sample size {sample_size} too small for a conditioning set of size {conditioning_size}"
        )


def f_tail_p_value(r: float, sample_size: int) -> float:
    """Upper tail of F(1, n - 2) at the variance-ratio statistic of r."""
    dof = sample_size - 2
    r2 = clamp_correlation(r) ** 2
    f_statistic = r2 / (1.0 - r2) * dof
    return min(1.0, max(0.0, float(fdtrc(1.0, dof, f_statistic))))


class BicDiffTest(IndependenceTest):
    """BIC-difference score test over a correlation matrix."""

    kind = TestKind.BIC_DIFF

    def __init__(self, correlation: CorrelationMatrix, config: TestConfig):
        self.correlation = correlation
        super().__init__(correlation.variables, config)

    @classmethod
    def from_dataset(cls, dataset: Dataset, config: TestConfig) -> "BicDiffTest":
        return cls(correlation(dataset), config)

    @property
    def sample_size(self) -> int:
        return self.correlation.sample_size

    def _check_design(self, x: int, given: Sequence[int]) -> None:
        regressors = sorted({x, *given})
        design = self.correlation.entries[np.ix_(regressors, regressors)]
        if np.linalg.eigvalsh(design)[0] <= COLLINEARITY_TOLERANCE:
            raise DegenerateRegressionError(
                f"Regressors {[self.variables[k] for k in regressors]} are collinear"
            )

    def test(self, x: int, y: int, given: Sequence[int]) -> TestResult:
        given = sorted(set(given))
        check_sample_size(self.sample_size, len(given))
        if given:
            self._check_design(x, given)
        try:
            r = partial_correlation(self.correlation, x, y, given)
        except SingularMatrixError as e:
            raise DegenerateRegressionError(e.message)
        statistic = bic_difference(r, self.sample_size, self.config.penalty)
        p_value = f_tail_p_value(r, self.sample_size)
        return TestResult(statistic <= 0.0, p_value, statistic)

    def ranking_key(self, result: TestResult) -> float:
        # the p-value saturates at 0 for strong dependence, B1 - B2 does not
        return result.statistic

    def marginal_dependence(self) -> np.ndarray:
        entries = np.clip(self.correlation.entries, -MAX_ABS_CORRELATION, MAX_ABS_CORRELATION)
        n = self.sample_size
        statistic = -n * np.log1p(-entries * entries) - self.config.penalty * math.log(n)
        dependent = statistic > 0.0
        np.fill_diagonal(dependent, False)
        return dependent


def bic_diff_test(
    dataset: Dataset,
    x: int,
    y: int,
    given: Sequence[int],
    penalty: float,
) -> TestResult:
    """One-off BIC-difference query straight from data."""
    return BicDiffTest.from_dataset(dataset, TestConfig(penalty=penalty)).test(x, y, given)
