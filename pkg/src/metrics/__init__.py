"""
Accuracy statistics for estimated graphs and the benchmark report.
"""

from .comparison import (
    adjacency_confusion,
    arrowhead_confusion,
    bidirected_fraction,
    evaluate,
    mean_record,
    precision_recall,
)
from .exceptions import MetricsError
from .models import BenchmarkRow, ConfusionCounts, MetricsRecord
from .report import COLUMNS, read_benchmark_csv, write_benchmark_csv

__all__ = [
    "COLUMNS",
    "BenchmarkRow",
    "ConfusionCounts",
    "MetricsError",
    "MetricsRecord",
    "adjacency_confusion",
    "arrowhead_confusion",
    "bidirected_fraction",
    "evaluate",
    "mean_record",
    "precision_recall",
    "read_benchmark_csv",
    "write_benchmark_csv",
]
