"""
Accuracy of the four searches in the standard benchmark regime: 1000
variables, 1000 cases, alpha = 0.001, average degree 2 and 4.

Every test here is slow; run them with `poetry run pytest -m slow`.
"""

from typing import Dict, List, Tuple

import pytest

from src.cli.commands import run_seeds
from src.metrics.comparison import evaluate, mean_record
from src.metrics.models import MetricsRecord
from src.models.base import Algorithm, RandomGraphConfig, SearchConfig
from src.search.algorithms import run
from src.sim.random_graph import random_dag
from src.sim.sem import parameterize, simulate

NODES = 1000
SAMPLES = 1000
ALPHA = 0.001
REPS = 3
DEGREES = (2.0, 4.0)

Cell = Tuple[Algorithm, float]


@pytest.fixture(scope="module")
def regime() -> Dict[Cell, Tuple[MetricsRecord, float]]:
    """Mean metrics and mean ambiguity rate per (algorithm, degree)."""
    records: Dict[Cell, List[MetricsRecord]] = {}
    rates: Dict[Cell, List[float]] = {}
    for d, degree in enumerate(DEGREES):
        for rep in range(REPS):
            graph_seed, param_seed, data_seed = run_seeds(1, d * REPS + rep)
            dag = random_dag(RandomGraphConfig(num_nodes=NODES, avg_degree=degree, seed=graph_seed))
            dataset = simulate(parameterize(dag, param_seed), SAMPLES, data_seed)
            for algorithm in Algorithm:
                result = run(SearchConfig(algorithm=algorithm, alpha=ALPHA, threads=4), data=dataset)
                records.setdefault((algorithm, degree), []).append(evaluate(dag, result))
                rates.setdefault((algorithm, degree), []).append(result.ambiguity_rate)
    return {
        cell: (mean_record(records[cell]), sum(rates[cell]) / len(rates[cell]))
        for cell in records
    }


@pytest.mark.slow
def test_pc_max_sparse_accuracy(regime):
    """Test PC-Max adjacency and arrowhead accuracy at average degree 2."""
    record, _ = regime[(Algorithm.PC_MAX, 2.0)]
    assert record.ap >= 0.93
    assert record.ar >= 0.91
    assert record.ahp >= 0.93
    assert record.ahr >= 0.84
    assert record.bid == 0.0


@pytest.mark.slow
def test_bidirected_edges_dense(regime):
    """Test that sepset orientation makes bidirected edges at degree 4 and max-p does not."""
    for algorithm in (Algorithm.PC, Algorithm.PC_STABLE):
        assert regime[(algorithm, 4.0)][0].bid >= 0.10
    assert regime[(Algorithm.PC_MAX, 4.0)][0].bid == 0.0
    # CPC orients every collider it accepts, so a few conflicts survive
    assert regime[(Algorithm.CPC, 4.0)][0].bid < 0.03


@pytest.mark.slow
def test_arrowhead_precision_ordering_dense(regime):
    """Test PC-Max and CPC arrowhead precision against PC at degree 4."""
    pc = regime[(Algorithm.PC, 4.0)][0].ahp
    assert regime[(Algorithm.PC_MAX, 4.0)][0].ahp >= pc + 0.15
    assert regime[(Algorithm.CPC, 4.0)][0].ahp >= pc + 0.15


@pytest.mark.slow
def test_ambiguity_rates(regime):
    """Test the CPC ambiguity band per degree and that PC-Max never marks a triple ambiguous."""
    sparse = regime[(Algorithm.CPC, 2.0)][1]
    dense = regime[(Algorithm.CPC, 4.0)][1]
    assert 0.15 <= sparse <= 0.50
    assert 0.30 <= dense <= 0.65
    assert dense > sparse
    for degree in DEGREES:
        assert regime[(Algorithm.PC_MAX, degree)][1] == 0.0
