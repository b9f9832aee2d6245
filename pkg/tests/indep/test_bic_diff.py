"""
Tests for the BIC-difference score test.
"""

import math
from itertools import combinations

import numpy as np
import pytest

from src.data.correlation import correlation
from src.data.dataset import Dataset
from src.indep.bic_diff import BicDiffTest, bic_diff_test, bic_difference, f_tail_p_value
from src.indep.exceptions import DegenerateRegressionError, InsufficientSampleError
from src.models.base import TestConfig
from src.search.colliders import candidate_sets, max_p_sepset


def _dataset(values, names=None):
    names = names or [f"V{i}" for i in range(values.shape[1])]
    return Dataset(variables=names, values=values)


def test_bic_difference_formula():
    """Test B1 - B2 = -n ln(1 - r^2) - c ln n."""
    assert bic_difference(0.3, 500, 4.0) == pytest.approx(
        -500 * math.log(1 - 0.09) - 4.0 * math.log(500)
    )


def test_independent_noise_mostly_independent():
    """Test the null model at n = 10000."""
    agreed = 0
    for seed in range(100):
        rng = np.random.default_rng(seed)
        result = bic_diff_test(_dataset(rng.standard_normal((10000, 2))), 0, 1, [], penalty=4.0)
        agreed += result.independent
    assert agreed >= 95


def test_strong_signal_dependent():
    """Test y = 2x + small noise."""
    rng = np.random.default_rng(1)
    x = rng.standard_normal(50)
    y = 2 * x + 0.1 * rng.standard_normal(50)
    result = bic_diff_test(_dataset(np.column_stack([x, y])), 0, 1, [], penalty=4.0)
    assert not result.independent
    assert result.statistic > 0


def test_statistic_sign_is_decision():
    """Test independent iff B1 - B2 <= 0."""
    rng = np.random.default_rng(2)
    values = rng.standard_normal((300, 4))
    values[:, 3] += 0.15 * values[:, 0]
    test = BicDiffTest.from_dataset(_dataset(values), TestConfig(penalty=2.0))
    for x, y in combinations(range(4), 2):
        result = test.test(x, y, [])
        assert result.independent == (result.statistic <= 0)
        assert 0.0 <= result.p_value <= 1.0


def test_score_order_equals_p_value_order():
    """Test that ranking sets of every size by score matches ranking by F-tail p-value."""
    rng = np.random.default_rng(3)
    candidates = [s for size in range(4) for s in combinations([2, 3, 4, 5], size)]
    for trial in range(10):
        values = rng.standard_normal((200, 6))
        values[:, 1] += 0.2 * values[:, 0] + 0.3 * values[:, 2]
        values[:, 3] += 0.25 * values[:, 1]
        test = BicDiffTest.from_dataset(_dataset(values), TestConfig(penalty=4.0))
        results = [test.test(0, 1, s) for s in candidates]
        for a in results:
            for b in results:
                if a.statistic < b.statistic:
                    assert a.p_value >= b.p_value


def test_max_p_sepset_minimizes_score_across_sizes(graph_factory):
    """Test that the winning set under BIC-diff has the lowest B1 - B2 of all candidates."""
    rng = np.random.default_rng(8)
    names = ["X", "Z", "A", "B", "C"]
    graph = graph_factory(names, undirected=[("X", "A"), ("X", "B"), ("Z", "B"), ("Z", "C")])
    for trial in range(20):
        values = rng.standard_normal((40, 5))
        values[:, 2] += 0.4 * values[:, 0]
        values[:, 3] += 0.3 * values[:, 0] + 0.3 * values[:, 1]
        values[:, 4] += 0.4 * values[:, 1]
        test = BicDiffTest.from_dataset(_dataset(values, names), TestConfig(penalty=1.0))

        winner, p_value = max_p_sepset(graph, test, 0, 1)
        scores = {s: test.test(0, 1, s).statistic for s in candidate_sets(graph, 0, 1)}
        assert scores[winner] == min(scores.values())
        assert p_value == test.test(0, 1, winner).p_value


def test_f_tail_p_value_monotone():
    """Test that the p-value falls as |r| grows."""
    values = [f_tail_p_value(r, 100) for r in (0.0, 0.1, 0.2, 0.5)]
    assert values[0] == 1.0
    assert all(a > b for a, b in zip(values, values[1:]))


def test_perfect_correlation_stays_finite():
    """Test that |r| = 1 gives a finite, dependent verdict."""
    assert math.isfinite(bic_difference(1.0, 100, 4.0))
    assert f_tail_p_value(-1.0, 100) == pytest.approx(0.0, abs=1e-12)


def test_too_few_cases_rejected():
    """Test that n - |S| - 2 must stay positive."""
    rng = np.random.default_rng(9)
    test = BicDiffTest.from_dataset(_dataset(rng.standard_normal((4, 5))), TestConfig())
    with pytest.raises(InsufficientSampleError):
        test.test(0, 1, [2, 3])


def test_collinear_regressors_rejected():
    """Test rank deficiency in the regressors."""
    rng = np.random.default_rng(4)
    base = rng.standard_normal(40)
    values = np.column_stack([base, rng.standard_normal(40), 2 * base])
    test = BicDiffTest.from_dataset(_dataset(values), TestConfig())
    with pytest.raises(DegenerateRegressionError):
        test.test(0, 1, [2])


def test_marginal_dependence_matches_single_queries():
    """Test the vectorised depth-0 screen."""
    rng = np.random.default_rng(5)
    values = rng.standard_normal((400, 5))
    values[:, 2] += 0.3 * values[:, 0]
    test = BicDiffTest.from_dataset(_dataset(values), TestConfig(penalty=4.0))
    dependent = test.marginal_dependence()
    for x, y in combinations(range(5), 2):
        assert dependent[x, y] == (not test.test(x, y, []).independent)
