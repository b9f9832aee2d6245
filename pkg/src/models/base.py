import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Algorithm(str, Enum):
    """Search algorithms."""
    PC = "pc"
    CPC = "cpc"
    PC_STABLE = "pc-stable"
    PC_MAX = "pc-max"


class TestKind(str, Enum):
    """Conditional-independence tests."""
    __test__ = False

    FISHER_Z = "fisher-z"
    BIC_DIFF = "bic-diff"
    ORACLE = "oracle"


class TestConfig(BaseModel):
    """Parameters of a conditional-independence test."""
    __test__ = False
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(0.001, gt=0.0, lt=1.0, description="Significance level")
    penalty: float = Field(4.0, gt=0.0, description="BIC penalty multiplier c")


class SearchConfig(BaseModel):
    """Everything a search run needs besides its input."""
    model_config = ConfigDict(frozen=True)

    algorithm: Algorithm = Field(Algorithm.PC_MAX, description="Search algorithm")
    test: TestKind = Field(TestKind.FISHER_Z, description="Independence test")
    alpha: float = Field(0.001, gt=0.0, lt=1.0, description="Significance level")
    penalty: float = Field(4.0, gt=0.0, description="BIC penalty multiplier")
    max_depth: Optional[int] = Field(None, ge=0, description="Largest conditioning set, None = unlimited")
    threads: int = Field(1, ge=1, description="Worker threads for parallel phases")

    @property
    def test_config(self) -> TestConfig:
        return TestConfig(alpha=self.alpha, penalty=self.penalty)

    def describe(self) -> str:
        depth = "unlimited" if self.max_depth is None else str(self.max_depth)
        return (
            f"algorithm={self.algorithm.value} test={self.test.value} alpha={self.alpha} "
            f"penalty={self.penalty} max_depth={depth} threads={self.threads}"
        )


def half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


class RandomGraphConfig(BaseModel):
    """Size, density and seed of a random forward DAG."""
    model_config = ConfigDict(frozen=True)

    num_nodes: int = Field(..., gt=0, description="Number of variables")
    avg_degree: float = Field(..., ge=0.0, description="Average degree, 2 * edges / nodes")
    seed: int = Field(0, ge=0, lt=2**64, description="64-bit seed")

    @property
    def num_edges(self) -> int:
        return half_up(self.avg_degree * self.num_nodes / 2.0)

    @model_validator(mode="after")
    def _check_density(self) -> "RandomGraphConfig":
        possible = self.num_nodes * (self.num_nodes - 1) // 2
        if self.num_edges > possible:
            raise ValueError(
                f"Average degree {self.avg_degree} needs {self.num_edges} edges, "
                f"but {self.num_nodes} nodes allow at most {possible}"
            )
        return self


class SemConfig(BaseModel):
    """Parameter ranges for linear-Gaussian SEMs."""
    model_config = ConfigDict(frozen=True)

    coef_low: float = Field(0.2, gt=0.0, description="Smallest coefficient magnitude")
    coef_high: float = Field(0.9, gt=0.0, description="Largest coefficient magnitude")
    var_low: float = Field(1.0, gt=0.0, description="Smallest error variance")
    var_high: float = Field(2.0, gt=0.0, description="Largest error variance")

    @field_validator("coef_high")
    @classmethod
    def _coef_order(cls, value: float, info) -> float:
        low = info.data.get("coef_low")
        if low is not None and value < low:
            raise ValueError("coef_high must be >= coef_low")
        return value

    @field_validator("var_high")
    @classmethod
    def _var_order(cls, value: float, info) -> float:
        low = info.data.get("var_low")
        if low is not None and value < low:
            raise ValueError("var_high must be >= var_low")
        return value
