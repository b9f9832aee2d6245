"""
d-separation oracle exposed as an independence test.
"""

from typing import Sequence

from src.graph.dsep import DSeparationOracle
from src.graph.mixed_graph import MixedGraph
from src.models.base import TestConfig, TestKind

from .base import IndependenceTest, TestResult


class OracleTest(IndependenceTest):
    """Reads independence facts off a known DAG; p-value 1.0 if d-separated, else 0.0."""

    kind = TestKind.ORACLE

    def __init__(self, dag: MixedGraph, config: TestConfig = TestConfig()):
        self.oracle = DSeparationOracle(dag)
        super().__init__(dag.names(), config)

    def test(self, x: int, y: int, given: Sequence[int]) -> TestResult:
        separated = self.oracle.d_separated(x, y, frozenset(given))
        return TestResult(separated, 1.0 if separated else 0.0, 0.0)


def oracle_test(dag: MixedGraph, x: int, y: int, given: Sequence[int]) -> TestResult:
    return OracleTest(dag).test(x, y, given)
