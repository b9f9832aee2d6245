"""
Base class for conditional-independence tests.
"""

from abc import ABC, abstractmethod
from typing import List, NamedTuple, Sequence

import numpy as np

from src.graph.models import NodeId
from src.models.base import TestConfig, TestKind


class TestResult(NamedTuple):
    """Verdict, p-value (or score surrogate) and raw statistic of one query."""
    __test__ = False

    independent: bool
    p_value: float
    statistic: float


class IndependenceTest(ABC):
    """Common interface of all tests.

    Implementations are pure functions of immutable inputs, so any number of
    queries may run concurrently.
    """
    __test__ = False

    kind: TestKind

    def __init__(self, variables: Sequence[str], config: TestConfig):
        """Initialize test over the given variables.

        Args:
            variables: Variable names, index order
            config: Test parameters
        """
        self.variables: List[str] = list(variables)
        self.config = config
        self.validate_config()

    @abstractmethod
    def test(self, x: int, y: int, given: Sequence[int]) -> TestResult:
        """Test x _||_ y | given.

        Args:
            x: First variable index
            y: Second variable index
            given: Conditioning set indices, any order

        Returns:
            Test result
        """
        pass

    def validate_config(self) -> None:
        """Validate test configuration.

        Raises:
            ValueError: If configuration is invalid
        """
        if not self.variables:
            raise ValueError("Test needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("Variable names must be unique")

    def ranking_key(self, result: TestResult) -> float:
        """Sort key for competing separating sets; smaller is closer to independence."""
        return -result.p_value

    @property
    def nodes(self) -> List[NodeId]:
        return [NodeId(i, name) for i, name in enumerate(self.variables)]

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    def marginal_dependence(self) -> np.ndarray:
        """Boolean matrix of pairs judged dependent given the empty set.

        Subclasses with a closed form override this with a vectorised version.
        """
        p = self.num_variables
        dependent = np.zeros((p, p), dtype=bool)
        for x in range(p):
            for y in range(x + 1, p):
                if not self.test(x, y, ()).independent:
                    dependent[x, y] = dependent[y, x] = True
        return dependent

    def __repr__(self) -> str:
        return f"{type(self).__name__}(variables={self.num_variables}, config={self.config})"
