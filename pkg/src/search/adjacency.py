"""
Adjacency search: classic (order-dependent) and stable (depth-synchronous) variants.

Both start from the complete graph. Depth 0 is screened in one vectorised
pass, which is exact for both variants since unconditional tests do not look
at adjacencies.
"""

import logging
from itertools import combinations
from typing import AbstractSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from src.exceptions import CausalSearchError
from src.graph.mixed_graph import MixedGraph
from src.graph.sepsets import SepsetMap
from src.indep.base import IndependenceTest, TestResult

from .exceptions import SearchError
from .executor import ParallelExecutor

logger = logging.getLogger(__name__)

Adjacency = List[Set[int]]


def run_test(test: IndependenceTest, x: int, y: int, given: Sequence[int]) -> TestResult:
    """Run one query, re-raising failures with the query attached.

    Raises:
        SearchError: If the test fails
    """
    try:
        return test.test(x, y, given)
    except SearchError:
        raise
    except (CausalSearchError, ArithmeticError, ValueError) as e:
        names = test.variables
        pair = (names[x], names[y])
        conditioning = [names[k] for k in given]
        raise SearchError(
            f"Test {pair[0]} _||_ {pair[1]} | {conditioning} failed: {e}",
            pair=pair,
            given=conditioning,
            exit_code=getattr(e, "exit_code", None),
        )


def _depth_zero(test: IndependenceTest) -> Adjacency:
    dependent = test.marginal_dependence()
    adjacency = [set(np.flatnonzero(row).tolist()) for row in dependent]
    edges = sum(len(neighbors) for neighbors in adjacency) // 2
    logger.info("Depth 0: %d of %d possible edges remain", edges, len(adjacency) * (len(adjacency) - 1) // 2)
    return adjacency


def _should_continue(adjacency: Adjacency, depth: int, max_depth: Optional[int]) -> bool:
    if max_depth is not None and depth > max_depth:
        return False
    return any(len(neighbors) - 1 >= depth for neighbors in adjacency)


def find_sepset(
    test: IndependenceTest,
    x: int,
    y: int,
    adj_x: AbstractSet[int],
    adj_y: AbstractSet[int],
    depth: int,
) -> Optional[Tuple[int, ...]]:
    """First size-`depth` subset of adj_x \\ {y}, then of adj_y \\ {x}, that separates x and y."""
    tried = set()
    for neighbors in (sorted(adj_x - {y}), sorted(adj_y - {x})):
        if len(neighbors) < depth:
            continue
        for subset in combinations(neighbors, depth):
            if subset in tried:
                continue
            tried.add(subset)
            if run_test(test, x, y, subset).independent:
                return subset
    return None


def _count_edges(adjacency: Adjacency) -> int:
    return sum(len(neighbors) for neighbors in adjacency) // 2


def fas(test: IndependenceTest, max_depth: Optional[int] = None) -> Tuple[MixedGraph, SepsetMap]:
    """Classic adjacency search; edges are removed the moment a sepset is found.

    Args:
        test: Independence test over all variables
        max_depth: Largest conditioning set size, None for unlimited

    Returns:
        Undirected skeleton and the sepsets of removed edges
    """
    adjacency = _depth_zero(test)
    sepsets = SepsetMap(marginal_default=True)
    depth = 1
    while _should_continue(adjacency, depth, max_depth):
        removed = 0
        for x in range(len(adjacency)):
            for y in sorted(adjacency[x]):
                if y < x or y not in adjacency[x]:
                    continue
                sepset = find_sepset(test, x, y, adjacency[x], adjacency[y], depth)
                if sepset is not None:
                    adjacency[x].discard(y)
                    adjacency[y].discard(x)
                    sepsets.set(x, y, sepset)
                    removed += 1
                    logger.debug("Removed %s - %s given %s", test.variables[x], test.variables[y], sepset)
        logger.info("Depth %d: removed %d edges, %d remain", depth, removed, _count_edges(adjacency))
        depth += 1
    return MixedGraph.from_adjacency(test.nodes, adjacency), sepsets


def fas_stable(
    test: IndependenceTest,
    max_depth: Optional[int] = None,
    executor: Optional[ParallelExecutor] = None,
) -> Tuple[MixedGraph, SepsetMap]:
    """Order-independent adjacency search.

    Within a depth every test sees the adjacencies frozen at the end of the
    previous depth, and removals are applied together at the depth barrier.
    The per-edge searches are independent and run on `executor`.

    Args:
        test: Independence test over all variables
        max_depth: Largest conditioning set size, None for unlimited
        executor: Worker pool; serial if omitted

    Returns:
        Undirected skeleton and the sepsets of removed edges
    """
    executor = executor or ParallelExecutor(1)
    adjacency = _depth_zero(test)
    sepsets = SepsetMap(marginal_default=True)
    depth = 1
    while _should_continue(adjacency, depth, max_depth):
        frozen = [frozenset(neighbors) for neighbors in adjacency]
        pairs = [(x, y) for x in range(len(frozen)) for y in sorted(frozen[x]) if x < y]

        def search_pair(pair: Tuple[int, int], depth: int = depth) -> Optional[Tuple[int, ...]]:
            x, y = pair
            return find_sepset(test, x, y, frozen[x], frozen[y], depth)

        found = executor.map(search_pair, pairs)
        removed = 0
        for (x, y), sepset in zip(pairs, found):
            if sepset is not None:
                adjacency[x].discard(y)
                adjacency[y].discard(x)
                sepsets.set(x, y, sepset)
                removed += 1
        logger.info("Depth %d: removed %d edges, %d remain", depth, removed, _count_edges(adjacency))
        depth += 1
    return MixedGraph.from_adjacency(test.nodes, adjacency), sepsets
