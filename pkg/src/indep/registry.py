"""
Test registry: maps a test kind to the factory that builds it from the run input.
"""

import logging
from typing import Callable, Dict, Optional

from src.data.correlation import CorrelationMatrix
from src.exceptions import InvalidConfigError
from src.graph.mixed_graph import MixedGraph
from src.models.base import TestConfig, TestKind

from .base import IndependenceTest
from .bic_diff import BicDiffTest
from .fisher_z import FisherZTest
from .oracle import OracleTest

logger = logging.getLogger(__name__)

TestFactory = Callable[[TestConfig, Optional[CorrelationMatrix], Optional[MixedGraph]], IndependenceTest]


def _fisher_z(config: TestConfig, correlation: Optional[CorrelationMatrix], dag: Optional[MixedGraph]) -> IndependenceTest:
    if correlation is None:
        raise InvalidConfigError("The fisher-z test needs data or a correlation matrix")
    return FisherZTest(correlation, config)


def _bic_diff(config: TestConfig, correlation: Optional[CorrelationMatrix], dag: Optional[MixedGraph]) -> IndependenceTest:
    if correlation is None:
        raise InvalidConfigError("The bic-diff test needs data or a correlation matrix")
    return BicDiffTest(correlation, config)


def _oracle(config: TestConfig, correlation: Optional[CorrelationMatrix], dag: Optional[MixedGraph]) -> IndependenceTest:
    if dag is None or correlation is not None:
        raise InvalidConfigError("The oracle test needs a true DAG and no data")
    return OracleTest(dag, config)


class TestRegistry:
    """Registry for independence tests."""
    __test__ = False

    def __init__(self):
        """Initialize test registry."""
        self._factories: Dict[TestKind, TestFactory] = {}
        self._register_default_tests()

    def _register_default_tests(self):
        """Register default tests."""
        self.register_test(TestKind.FISHER_Z, _fisher_z)
        self.register_test(TestKind.BIC_DIFF, _bic_diff)
        self.register_test(TestKind.ORACLE, _oracle)

    def register_test(self, kind: TestKind, factory: TestFactory):
        """Register a test.

        Args:
            kind: Test kind
            factory: Builds the test from (config, correlation, dag)
        """
        self._factories[kind] = factory

    def create(
        self,
        kind: TestKind,
        config: TestConfig,
        correlation: Optional[CorrelationMatrix] = None,
        dag: Optional[MixedGraph] = None,
    ) -> IndependenceTest:
        """Build a test for the given input.

        Raises:
            InvalidConfigError: If the kind is unknown or the input does not match it
        """
        if kind not in self._factories:
            raise InvalidConfigError(f"Test not found: {kind}")
        test = self._factories[kind](config, correlation, dag)
        logger.info("Created %s test over %d variables", kind.value, test.num_variables)
        return test

    def list_tests(self) -> Dict[TestKind, TestFactory]:
        return self._factories.copy()
