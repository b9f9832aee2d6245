"""
d-separation over DAGs by reachability along active trails.
"""

import logging
from collections import deque
from typing import AbstractSet, Iterable, List, Set

from .exceptions import InvalidGraphError
from .mixed_graph import MixedGraph
from .operations import require_dag

logger = logging.getLogger(__name__)

_UP = 0    # arrived from a child
_DOWN = 1  # arrived from a parent


class DSeparationOracle:
    """Answers d-separation queries for one fixed DAG.

    The DAG is validated once; parent and child lists are cached so repeated
    queries (the oracle independence test) stay cheap. Queries do not mutate
    state and may run concurrently.
    """

    def __init__(self, dag: MixedGraph):
        require_dag(dag)
        self.dag = dag
        self._parents: List[List[int]] = [dag.parents(v) for v in range(dag.num_nodes)]
        self._children: List[List[int]] = [dag.children(v) for v in range(dag.num_nodes)]

    def _ancestors_of(self, nodes: Iterable[int]) -> Set[int]:
        ancestors: Set[int] = set()
        frontier = list(nodes)
        while frontier:
            node = frontier.pop()
            if node not in ancestors:
                ancestors.add(node)
                frontier.extend(self._parents[node])
        return ancestors

    def d_separated(self, x: int, y: int, given: AbstractSet[int]) -> bool:
        """True iff every path between x and y is blocked by `given`.

        Raises:
            InvalidGraphError: If x == y or either endpoint is in the conditioning set
        """
        n = self.dag.num_nodes
        if x == y:
            raise InvalidGraphError("d-separation needs two distinct nodes")
        if x in given or y in given:
            raise InvalidGraphError("Endpoints may not be in the conditioning set")
        for node in (x, y, *given):
            if not 0 <= node < n:
                raise InvalidGraphError(f"Node index out of range: {node}")

        conditioned_ancestors = self._ancestors_of(given)
        visited = set()
        queue = deque([(x, _UP)])
        while queue:
            node, direction = queue.popleft()
            if (node, direction) in visited:
                continue
            visited.add((node, direction))
            if node == y:
                return False
            if direction == _UP and node not in given:
                for parent in self._parents[node]:
                    queue.append((parent, _UP))
                for child in self._children[node]:
                    queue.append((child, _DOWN))
            elif direction == _DOWN:
                if node not in given:
                    for child in self._children[node]:
                        queue.append((child, _DOWN))
                if node in conditioned_ancestors:
                    for parent in self._parents[node]:
                        queue.append((parent, _UP))
        return True


def d_separated(dag: MixedGraph, x: int, y: int, given: AbstractSet[int]) -> bool:
    """One-off d-separation query; see `DSeparationOracle` for repeated use."""
    return DSeparationOracle(dag).d_separated(x, y, frozenset(given))
