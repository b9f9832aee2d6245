"""
Algorithm drivers and the entry point that runs one configured search.
"""

import logging
import time
from typing import Callable, Dict, Optional, Union

from src.data.correlation import CorrelationMatrix, correlation
from src.data.dataset import Dataset
from src.graph.meek import meek_closure
from src.graph.mixed_graph import MixedGraph
from src.graph.operations import unshielded_triples
from src.indep.base import IndependenceTest
from src.indep.cache import CachedTest
from src.indep.registry import TestRegistry
from src.models.base import Algorithm, SearchConfig

from .adjacency import fas, fas_stable
from .colliders import orient_colliders_cpc, orient_colliders_maxp, orient_colliders_sepset
from .exceptions import InvalidConfigError
from .executor import ParallelExecutor
from .models import SearchResult

logger = logging.getLogger(__name__)

Driver = Callable[[IndependenceTest, SearchConfig, ParallelExecutor], SearchResult]


def _cached(test: IndependenceTest) -> CachedTest:
    return test if isinstance(test, CachedTest) else CachedTest(test)


def _log_cache(test: CachedTest) -> None:
    logger.debug("Orientation cache: %s", test.cache.stats())


def run_pc(test: IndependenceTest, config: SearchConfig, executor: ParallelExecutor) -> SearchResult:
    graph, sepsets = fas(test, config.max_depth)
    triples = len(unshielded_triples(graph))
    orient_colliders_sepset(graph, sepsets)
    meek_closure(graph)
    return SearchResult(
        algorithm=Algorithm.PC, graph=graph, sepsets=sepsets, unshielded_triples=triples
    )


def run_pc_stable(test: IndependenceTest, config: SearchConfig, executor: ParallelExecutor) -> SearchResult:
    graph, sepsets = fas_stable(test, config.max_depth, executor)
    triples = len(unshielded_triples(graph))
    orient_colliders_sepset(graph, sepsets)
    meek_closure(graph)
    return SearchResult(
        algorithm=Algorithm.PC_STABLE, graph=graph, sepsets=sepsets, unshielded_triples=triples
    )


def run_cpc(test: IndependenceTest, config: SearchConfig, executor: ParallelExecutor) -> SearchResult:
    graph, _ = fas(test, config.max_depth)
    cached = _cached(test)
    graph, ambiguous, triples = orient_colliders_cpc(graph, cached, config.max_depth, executor)
    _log_cache(cached)
    meek_closure(graph, ambiguous)
    return SearchResult(
        algorithm=Algorithm.CPC, graph=graph, ambiguous_triples=ambiguous, unshielded_triples=triples
    )


def run_pc_max(test: IndependenceTest, config: SearchConfig, executor: ParallelExecutor) -> SearchResult:
    graph, _ = fas_stable(test, config.max_depth, executor)
    cached = _cached(test)
    graph, colliders, skipped, triples = orient_colliders_maxp(graph, cached, config.max_depth, executor)
    _log_cache(cached)
    meek_closure(graph)
    return SearchResult(
        algorithm=Algorithm.PC_MAX,
        graph=graph,
        colliders=colliders,
        skipped_colliders=skipped,
        unshielded_triples=triples,
    )


class AlgorithmRegistry:
    """Registry for search drivers."""

    def __init__(self):
        """Initialize algorithm registry."""
        self._drivers: Dict[Algorithm, Driver] = {}
        self._register_default_algorithms()

    def _register_default_algorithms(self):
        """Register default algorithms."""
        self.register_algorithm(Algorithm.PC, run_pc)
        self.register_algorithm(Algorithm.CPC, run_cpc)
        self.register_algorithm(Algorithm.PC_STABLE, run_pc_stable)
        self.register_algorithm(Algorithm.PC_MAX, run_pc_max)

    def register_algorithm(self, algorithm: Algorithm, driver: Driver):
        """Register a driver.

        Args:
            algorithm: Algorithm it implements
            driver: Runs the search on a ready test
        """
        self._drivers[algorithm] = driver

    def get_driver(self, algorithm: Algorithm) -> Driver:
        """Get the driver for an algorithm.

        Raises:
            InvalidConfigError: If no driver is registered
        """
        if algorithm not in self._drivers:
            raise InvalidConfigError(f"Algorithm not found: {algorithm}")
        return self._drivers[algorithm]

    def list_algorithms(self) -> Dict[Algorithm, Driver]:
        return self._drivers.copy()


_algorithms = AlgorithmRegistry()
_tests = TestRegistry()


def run(
    config: SearchConfig,
    data: Union[Dataset, CorrelationMatrix, None] = None,
    dag: Optional[MixedGraph] = None,
) -> SearchResult:
    """Run one search.

    The correlation matrix is built before the clock starts; elapsed time
    covers test construction, adjacency search and orientation.

    Args:
        config: Algorithm, test and parameters
        data: Dataset or correlation matrix; None with the oracle test
        dag: True DAG for the oracle test

    Returns:
        Search result with its elapsed wall-clock time

    Raises:
        InvalidConfigError: If the input does not match the test kind
        SearchError: If an independence test fails
    """
    matrix = correlation(data) if isinstance(data, Dataset) else data
    driver = _algorithms.get_driver(config.algorithm)

    logger.info("Starting search: %s", config.describe())
    started = time.perf_counter()
    test = _tests.create(config.test, config.test_config, correlation=matrix, dag=dag)
    with ParallelExecutor(config.threads) as executor:
        result = driver(test, config, executor)
    result.elapsed_seconds = time.perf_counter() - started

    logger.info(
        "Finished %s in %.2fs: %d edges, %d ambiguous triples",
        config.algorithm.value, result.elapsed_seconds, result.graph.num_edges, len(result.ambiguous_triples),
    )
    return result
