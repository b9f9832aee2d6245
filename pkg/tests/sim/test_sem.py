"""
Tests for linear-Gaussian SEM parameterization and sampling.
"""

import numpy as np
import pytest

from src.graph.exceptions import InvalidGraphError
from src.models.base import RandomGraphConfig, SemConfig
from src.sim.exceptions import SimulationError
from src.sim.random_graph import random_dag
from src.sim.sem import SemModel, analytic_covariance, parameterize, simulate


@pytest.fixture
def small_dag():
    return random_dag(RandomGraphConfig(num_nodes=8, avg_degree=3.0, seed=4))


def test_parameter_ranges(small_dag):
    """Test coefficient magnitudes and variances stay in range."""
    model = parameterize(small_dag, seed=1)
    magnitudes = np.abs(list(model.coefficients.values()))
    assert np.all((magnitudes >= 0.2) & (magnitudes <= 0.9))
    assert all(1.0 <= v <= 2.0 for v in model.error_variances)
    assert len(model.coefficients) == small_dag.num_edges


def test_custom_ranges(small_dag):
    """Test that the SEM config bounds are honoured."""
    config = SemConfig(coef_low=0.5, coef_high=0.6, var_low=3.0, var_high=3.5)
    model = parameterize(small_dag, seed=1, config=config)
    assert all(0.5 <= abs(c) <= 0.6 for c in model.coefficients.values())
    assert all(3.0 <= v <= 3.5 for v in model.error_variances)


def test_sampling_is_deterministic(small_dag):
    """Test identical data for identical seeds."""
    model = parameterize(small_dag, seed=1)
    first = simulate(model, 50, seed=2)
    second = simulate(parameterize(small_dag, seed=1), 50, seed=2)
    np.testing.assert_array_equal(first.values, second.values)
    assert first.variables == small_dag.names()


def test_single_node_variance(dag_factory):
    """Test that a parentless node has its error variance."""
    dag = dag_factory(["A"], [])
    model = parameterize(dag, seed=3)
    data = simulate(model, 100000, seed=4)
    assert np.var(data.values[:, 0]) == pytest.approx(model.error_variances[0], rel=0.02)


def test_matches_analytic_covariance(small_dag):
    """Test sample covariance against the implied covariance."""
    model = parameterize(small_dag, seed=5)
    data = simulate(model, 100000, seed=6)
    sample = np.cov(data.values, rowvar=False)
    np.testing.assert_allclose(sample, analytic_covariance(model), atol=0.05 * np.abs(analytic_covariance(model)).max())


def test_too_few_cases(small_dag):
    """Test that fewer than 2 cases is refused."""
    model = parameterize(small_dag, seed=1)
    with pytest.raises(SimulationError):
        simulate(model, 1, seed=1)


def test_cyclic_graph_rejected(dag_factory):
    """Test that parameterization needs a DAG."""
    cyclic = dag_factory(["A", "B", "C"], [("A", "B"), ("B", "C"), ("C", "A")])
    with pytest.raises(InvalidGraphError):
        parameterize(cyclic, seed=1)


def test_model_requires_matching_coefficients(chain_dag):
    """Test that a model must parameterize exactly the DAG's edges."""
    with pytest.raises(ValueError):
        SemModel(dag=chain_dag, coefficients={(0, 1): 0.5}, error_variances=[1.0, 1.0, 1.0])
