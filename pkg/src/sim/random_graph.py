"""
Random forward DAGs: fix a variable order, then add uniformly chosen
forward edges.
"""

import logging
from typing import List

import numpy as np

from src.graph.mixed_graph import MixedGraph
from src.models.base import RandomGraphConfig

logger = logging.getLogger(__name__)


def node_names(num_nodes: int) -> List[str]:
    return [f"X{i + 1}" for i in range(num_nodes)]


def unrank_pairs(ranks: np.ndarray, num_nodes: int) -> np.ndarray:
    """Map ranks in the row-major listing of pairs i < j back to (i, j) rows."""
    rows = np.arange(num_nodes, dtype=np.int64)
    starts = rows * (2 * num_nodes - rows - 1) // 2
    i = np.searchsorted(starts, ranks, side="right") - 1
    j = ranks - starts[i] + i + 1
    return np.stack([i, j], axis=1)


def random_dag(config: RandomGraphConfig) -> MixedGraph:
    """Sample a DAG with exactly `config.num_edges` forward edges.

    Every pair i < j is equally likely to be chosen, and i --> j for each
    chosen pair, so the graph is acyclic by construction.
    """
    n = config.num_nodes
    graph = MixedGraph.from_names(node_names(n))
    m = config.num_edges
    if m == 0:
        return graph

    rng = np.random.default_rng(config.seed)
    possible = n * (n - 1) // 2
    ranks = np.sort(rng.choice(possible, size=m, replace=False).astype(np.int64))
    for i, j in unrank_pairs(ranks, n):
        graph.add_directed(int(i), int(j))

    logger.info("Generated random DAG: %d nodes, %d edges (seed %d)", n, m, config.seed)
    return graph
