"""
Linear-Gaussian structural equation models over a DAG.
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.data.dataset import Dataset
from src.graph.mixed_graph import MixedGraph
from src.graph.operations import require_dag, topological_order
from src.models.base import SemConfig

from .exceptions import SimulationError

logger = logging.getLogger(__name__)


class SemModel(BaseModel):
    """Each variable is a linear function of its parents plus independent Gaussian noise."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dag: MixedGraph
    coefficients: Dict[Tuple[int, int], float] = Field(
        ..., description="(parent, child) -> edge coefficient"
    )
    error_variances: List[float] = Field(..., description="Noise variance per node")

    @model_validator(mode="after")
    def _check_parameters(self) -> "SemModel":
        arcs = set()
        for edge in self.dag.edges():
            arcs.add((edge.a, edge.b) if self.dag.is_directed(edge.a, edge.b) else (edge.b, edge.a))
        if set(self.coefficients) != arcs:
            raise ValueError("Coefficients must cover exactly the edges of the DAG")
        if any(value == 0.0 for value in self.coefficients.values()):
            raise ValueError("Edge coefficients must be nonzero")
        if len(self.error_variances) != self.dag.num_nodes:
            raise ValueError("Need one error variance per node")
        if any(variance <= 0.0 for variance in self.error_variances):
            raise ValueError("Error variances must be positive")
        return self

    def coefficient_matrix(self) -> np.ndarray:
        """B with B[parent, child] = coefficient, zero elsewhere."""
        matrix = np.zeros((self.dag.num_nodes, self.dag.num_nodes))
        for (parent, child), value in self.coefficients.items():
            matrix[parent, child] = value
        return matrix


def parameterize(dag: MixedGraph, seed: int, config: Optional[SemConfig] = None) -> SemModel:
    """Draw coefficients from +/-U[coef_low, coef_high] and variances from U[var_low, var_high].

    Raises:
        InvalidGraphError: If `dag` is not a DAG
    """
    config = config or SemConfig()
    require_dag(dag)
    arcs = sorted(
        (edge.a, edge.b) if dag.is_directed(edge.a, edge.b) else (edge.b, edge.a)
        for edge in dag.edges()
    )
    rng = np.random.default_rng(seed)
    magnitudes = rng.uniform(config.coef_low, config.coef_high, size=len(arcs))
    signs = rng.choice(np.array([-1.0, 1.0]), size=len(arcs))
    variances = rng.uniform(config.var_low, config.var_high, size=dag.num_nodes)
    coefficients = {arc: float(sign * magnitude) for arc, sign, magnitude in zip(arcs, signs, magnitudes)}
    return SemModel(dag=dag, coefficients=coefficients, error_variances=variances.tolist())


def simulate(model: SemModel, sample_size: int, seed: int) -> Dataset:
    """Draw i.i.d. cases by visiting nodes in topological order.

    Raises:
        SimulationError: If fewer than 2 cases are requested
    """
    if sample_size < 2:
        raise SimulationError(f"Need at least 2 cases, got {sample_size}")
    dag = model.dag
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal((sample_size, dag.num_nodes)) * np.sqrt(model.error_variances)
    weights = model.coefficient_matrix()

    values = np.zeros((sample_size, dag.num_nodes))
    for node in topological_order(dag):
        parents = dag.parents(node)
        values[:, node] = noise[:, node]
        if parents:
            values[:, node] += values[:, parents] @ weights[parents, node]

    logger.info("Simulated %d cases over %d variables (seed %d)", sample_size, dag.num_nodes, seed)
    return Dataset(variables=dag.names(), values=values)


def analytic_covariance(model: SemModel) -> np.ndarray:
    """Population covariance (I - B)^-T D (I - B)^-1 of the model."""
    identity = np.eye(model.dag.num_nodes)
    mixing = np.linalg.inv(identity - model.coefficient_matrix())
    return mixing.T @ np.diag(model.error_variances) @ mixing
