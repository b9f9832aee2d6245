"""
Continuous data ingestion and (partial) correlation.
"""

from .correlation import (
    CorrelationMatrix,
    correlation,
    load_correlation_matrix,
    partial_correlation,
)
from .dataset import Dataset, load_dataset, permute_columns, save_dataset
from .exceptions import DataError, DataParseError, DegenerateDataError, SingularMatrixError

__all__ = [
    "CorrelationMatrix",
    "DataError",
    "DataParseError",
    "Dataset",
    "DegenerateDataError",
    "SingularMatrixError",
    "correlation",
    "load_correlation_matrix",
    "load_dataset",
    "partial_correlation",
    "permute_columns",
    "save_dataset",
]
