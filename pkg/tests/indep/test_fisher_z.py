"""
Tests for the Fisher Z test.
"""

import math

import numpy as np
import pytest
from scipy.stats import norm

from src.data.correlation import CorrelationMatrix
from src.indep.exceptions import InsufficientSampleError
from src.indep.fisher_z import FisherZTest, fisher_z_statistic, fisher_z_test, two_sided_p_value
from src.models.base import TestConfig


def _matrix(r, n):
    return CorrelationMatrix(
        variables=["X", "Y", "Z"],
        entries=np.array([[1.0, r, 0.0], [r, 1.0, 0.0], [0.0, 0.0, 1.0]]),
        sample_size=n,
    )


def test_zero_correlation_is_independent():
    """Test the null case."""
    result = fisher_z_test(_matrix(0.0, 50), 0, 1, [2], alpha=0.001)
    assert result.statistic == 0.0
    assert result.p_value == 1.0
    assert result.independent


def test_known_value():
    """Test r = 0.5, n = 103 against the normal tail."""
    result = fisher_z_test(_matrix(0.5, 103), 0, 1, [], alpha=0.001)
    expected_z = 10 * math.atanh(0.5)
    assert result.statistic == pytest.approx(expected_z, rel=1e-12)
    assert result.statistic == pytest.approx(5.493, abs=1e-3)
    assert result.p_value == pytest.approx(2 * norm.sf(expected_z), rel=1e-9)
    assert result.p_value == pytest.approx(3.9e-8, rel=0.05)
    assert not result.independent


def test_p_value_decreases_with_correlation():
    """Test monotonicity in |r|."""
    p_values = [fisher_z_test(_matrix(r, 200), 0, 1, [], alpha=0.01).p_value for r in (0.0, 0.05, 0.1, 0.2, 0.4)]
    assert all(a > b for a, b in zip(p_values, p_values[1:]))


def test_statistic_and_p_value_consistent():
    """Test p = 2(1 - Phi(|z|))."""
    result = fisher_z_test(_matrix(-0.13, 300), 0, 1, [2], alpha=0.05)
    assert result.p_value == pytest.approx(2 * norm.sf(abs(result.statistic)), abs=1e-12)
    assert result.p_value == two_sided_p_value(result.statistic)


def test_decision_uses_strict_inequality():
    """Test independent iff p > alpha."""
    matrix = _matrix(0.2, 100)
    p_value = fisher_z_test(matrix, 0, 1, [], alpha=0.5).p_value
    assert not fisher_z_test(matrix, 0, 1, [], alpha=p_value).independent


def test_insufficient_sample():
    """Test that n <= |s| + 3 is rejected."""
    with pytest.raises(InsufficientSampleError):
        fisher_z_statistic(0.1, 4, 1)


def test_symmetric():
    """Test symmetry in x and y."""
    test = FisherZTest(_matrix(0.3, 80), TestConfig(alpha=0.01))
    assert test.test(0, 1, [2]) == test.test(1, 0, [2])


def test_marginal_dependence_matches_single_queries():
    """Test that the vectorised screen agrees with one-at-a-time tests."""
    rng = np.random.default_rng(0)
    values = rng.standard_normal((120, 6))
    values[:, 1] += values[:, 0]
    values[:, 4] -= 0.3 * values[:, 2]
    from src.data.correlation import correlation
    from src.data.dataset import Dataset

    matrix = correlation(Dataset(variables=list("ABCDEF"), values=values))
    test = FisherZTest(matrix, TestConfig(alpha=0.01))
    dependent = test.marginal_dependence()
    for x in range(6):
        assert not dependent[x, x]
        for y in range(x + 1, 6):
            assert dependent[x, y] == (not test.test(x, y, []).independent)
            assert dependent[x, y] == dependent[y, x]
