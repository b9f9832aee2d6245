"""
Continuous tabular datasets: loading, saving and column permutation.
"""

import logging
from pathlib import Path
from typing import List, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.graph.models import NodeId

from .exceptions import DataParseError

logger = logging.getLogger(__name__)


class Dataset(BaseModel):
    """n-by-p matrix of i.i.d. cases with named columns."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    variables: List[str] = Field(..., description="Column names in order")
    values: np.ndarray = Field(..., description="n-by-p matrix, rows are cases")

    @model_validator(mode="after")
    def _check_shape(self) -> "Dataset":
        if self.values.ndim != 2:
            raise ValueError("Dataset values must be a 2-dimensional matrix")
        if self.values.shape[1] != len(self.variables):
            raise ValueError(
                f"Column count {self.values.shape[1]} does not match "
                f"{len(self.variables)} variable names"
            )
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("Variable names must be unique")
        if self.values.shape[0] < 2:
            raise ValueError(f"Need at least 2 cases, got {self.values.shape[0]}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("Dataset contains missing or non-finite values")
        self.values.setflags(write=False)
        return self

    @property
    def nodes(self) -> List[NodeId]:
        return [NodeId(i, name) for i, name in enumerate(self.variables)]

    @property
    def num_cases(self) -> int:
        return self.values.shape[0]

    @property
    def num_variables(self) -> int:
        return self.values.shape[1]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.values, columns=self.variables)


def load_dataset(path: Union[str, Path], delimiter: str = "\t") -> Dataset:
    """Load a delimited file with a header row of variable names.

    Args:
        path: File to read
        delimiter: Column separator, tab or comma

    Returns:
        Dataset with columns in header order

    Raises:
        DataParseError: On duplicate names, ragged rows, non-numeric cells or fewer than 2 rows
    """
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as handle:
            header = handle.readline().rstrip("\r\n").split(delimiter)
    except OSError as e:
        raise DataParseError(f"Cannot read data file {path}: {e}")

    seen = set()
    for name in header:
        if name in seen:
            raise DataParseError(f"Duplicate variable name {name!r} in header", row=1, column=name)
        seen.add(name)

    try:
        frame = pd.read_csv(
            path,
            sep=delimiter,
            dtype=str,
            keep_default_na=False,
            header=0,
            names=header,
        )
    except pd.errors.ParserError as e:
        raise DataParseError(f"Ragged rows in {path}: {e}")

    if len(frame) < 2:
        raise DataParseError(f"Need at least 2 data rows in {path}, found {len(frame)}")

    values = np.empty(frame.shape, dtype=float)
    for j, name in enumerate(header):
        raw = frame[name]
        if raw.isna().any():
            row = int(np.flatnonzero(raw.isna().to_numpy())[0]) + 2
            raise DataParseError(f"Ragged row {row}: missing value for {name!r}", row=row, column=name)
        parsed = pd.to_numeric(raw, errors="coerce")
        bad = parsed.isna().to_numpy()
        if bad.any():
            index = int(np.flatnonzero(bad)[0])
            row = index + 2
            raise DataParseError(
                f"Non-numeric value {raw.iloc[index]!r} at row {row}, column {name!r}",
                row=row,
                column=name,
            )
        values[:, j] = parsed.to_numpy(dtype=float)

    infinite = ~np.isfinite(values)
    if infinite.any():
        index, j = (int(k) for k in np.argwhere(infinite)[0])
        raise DataParseError(
            f"Non-finite value at row {index + 2}, column {header[j]!r}", row=index + 2, column=header[j]
        )

    dataset = Dataset(variables=header, values=values)
    logger.info(
        "Loaded dataset %s: %d cases, %d variables",
        path, dataset.num_cases, dataset.num_variables,
    )
    return dataset


def save_dataset(dataset: Dataset, path: Union[str, Path], delimiter: str = "\t") -> None:
    """Write a dataset with full round-trip precision."""
    dataset.to_frame().to_csv(path, sep=delimiter, index=False, float_format="%.17g")
    logger.info("Wrote dataset %s: %d x %d", path, dataset.num_cases, dataset.num_variables)


def permute_columns(dataset: Dataset, seed: int) -> Dataset:
    """Same data with columns in a random order."""
    order = np.random.default_rng(seed).permutation(dataset.num_variables)
    return Dataset(
        variables=[dataset.variables[j] for j in order],
        values=np.ascontiguousarray(dataset.values[:, order]),
    )
