"""
Random DAGs and linear-Gaussian data generation.
"""

from .exceptions import SimulationError
from .random_graph import node_names, random_dag, unrank_pairs
from .sem import SemModel, analytic_covariance, parameterize, simulate

__all__ = [
    "SemModel",
    "SimulationError",
    "analytic_covariance",
    "node_names",
    "parameterize",
    "random_dag",
    "simulate",
    "unrank_pairs",
]
