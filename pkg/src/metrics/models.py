"""
Comparison statistics.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from src.models.base import Algorithm


class ConfusionCounts(BaseModel):
    """True positives, false positives and false negatives."""
    model_config = ConfigDict(frozen=True)

    tp: int = Field(0, ge=0)
    fp: int = Field(0, ge=0)
    fn: int = Field(0, ge=0)


class MetricsRecord(BaseModel):
    """One row of accuracy statistics. Ratios are None when undefined."""
    model_config = ConfigDict(frozen=True)

    ap: Optional[float] = Field(None, ge=0.0, le=1.0, description="Adjacency precision")
    ar: Optional[float] = Field(None, ge=0.0, le=1.0, description="Adjacency recall")
    ahp: Optional[float] = Field(None, ge=0.0, le=1.0, description="Arrowhead precision")
    ahr: Optional[float] = Field(None, ge=0.0, le=1.0, description="Arrowhead recall")
    bid: float = Field(0.0, ge=0.0, le=1.0, description="Fraction of bidirected edges")
    elapsed_seconds: float = Field(0.0, ge=0.0)


class BenchmarkRow(BaseModel):
    """A benchmark CSV row; `run` is None for the per-cell mean."""
    model_config = ConfigDict(frozen=True)

    algorithm: Algorithm
    avg_degree: float
    run: Optional[int] = Field(None, ge=1, description="Run number, None for the mean row")
    record: MetricsRecord
