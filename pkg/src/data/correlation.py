"""
Correlation matrices and partial correlations.
"""

import logging
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.graph.models import NodeId

from .dataset import Dataset
from .exceptions import DataParseError, DegenerateDataError, SingularMatrixError

logger = logging.getLogger(__name__)

MAX_ABS_CORRELATION = 1.0 - 1e-12
SYMMETRY_TOLERANCE = 1e-12


class CorrelationMatrix(BaseModel):
    """Symmetric correlation matrix plus the sample size it was estimated from.

    Immutable; concurrent `partial_correlation` calls are safe.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    variables: List[str] = Field(..., description="Variable names in matrix order")
    entries: np.ndarray = Field(..., description="p-by-p correlation matrix")
    sample_size: int = Field(..., gt=0, description="Number of cases behind the estimate")

    @model_validator(mode="after")
    def _check_matrix(self) -> "CorrelationMatrix":
        entries = self.entries
        p = len(self.variables)
        if entries.shape != (p, p):
            raise ValueError(f"Expected a {p}x{p} matrix, got {entries.shape}")
        if not np.allclose(np.diag(entries), 1.0, atol=SYMMETRY_TOLERANCE, rtol=0.0):
            raise ValueError("Correlation matrix must have a unit diagonal")
        if not np.allclose(entries, entries.T, atol=SYMMETRY_TOLERANCE, rtol=0.0):
            raise ValueError("Correlation matrix must be symmetric")
        if np.any(np.abs(entries) > 1.0 + SYMMETRY_TOLERANCE):
            raise ValueError("Correlation entries must lie in [-1, 1]")
        entries.setflags(write=False)
        return self

    @property
    def nodes(self) -> List[NodeId]:
        return [NodeId(i, name) for i, name in enumerate(self.variables)]

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    def partial_correlation(self, x: int, y: int, given: Sequence[int]) -> float:
        return partial_correlation(self, x, y, given)


def correlation(dataset: Dataset) -> CorrelationMatrix:
    """Pearson correlation of every column pair, two-pass.

    Raises:
        DegenerateDataError: If a column is constant
    """
    values = dataset.values
    # exact test on the raw values; the std of a constant column can be 1e-17
    constant = np.flatnonzero(np.ptp(values, axis=0) == 0.0)
    if constant.size:
        raise DegenerateDataError(f"Column {dataset.variables[constant[0]]!r} has zero variance")
    centered = values - values.mean(axis=0)
    covariance = centered.T @ centered / (dataset.num_cases - 1)
    std = np.sqrt(np.diag(covariance))
    entries = covariance / np.outer(std, std)
    entries = np.clip((entries + entries.T) / 2.0, -1.0, 1.0)
    np.fill_diagonal(entries, 1.0)
    logger.debug("Computed %dx%d correlation matrix", *entries.shape)
    return CorrelationMatrix(
        variables=list(dataset.variables),
        entries=entries,
        sample_size=dataset.num_cases,
    )


def clamp_correlation(r: float) -> float:
    """Saturate |r| at 1 - 1e-12 so Fisher Z and log(1 - r^2) stay finite."""
    return max(-MAX_ABS_CORRELATION, min(MAX_ABS_CORRELATION, r))


def partial_correlation(c: CorrelationMatrix, x: int, y: int, given: Sequence[int]) -> float:
    """Partial correlation of x and y given `given`.

    The marginal case returns the matrix entry as stored; conditioned results
    are clamped to +/-(1 - 1e-12).

    The submatrix is always assembled in the order (min(x, y), max(x, y),
    sorted(given)), so the result is exactly symmetric in x, y and independent
    of the order of `given`.

    Raises:
        SingularMatrixError: If the conditioning submatrix cannot be repaired
    """
    if x == y:
        raise ValueError("Partial correlation needs two distinct variables")
    given = sorted(set(given))
    if x in given or y in given:
        raise ValueError("x and y may not be in the conditioning set")
    if x > y:
        x, y = y, x
    entries = c.entries

    if not given:
        return float(entries[x, y])

    if len(given) == 1:
        z = given[0]
        r_xz, r_yz = entries[x, z], entries[y, z]
        denominator = (1.0 - r_xz * r_xz) * (1.0 - r_yz * r_yz)
        if denominator > 0.0:
            return clamp_correlation(float((entries[x, y] - r_xz * r_yz) / np.sqrt(denominator)))

    index = [x, y, *given]
    submatrix = entries[np.ix_(index, index)]
    try:
        precision = np.linalg.inv(submatrix)
    except np.linalg.LinAlgError:
        logger.warning("Singular conditioning set %s; falling back to pseudo-inverse", given)
        precision = np.linalg.pinv(submatrix, hermitian=True)
    scale = precision[0, 0] * precision[1, 1]
    if not np.isfinite(scale) or scale <= 0.0:
        raise SingularMatrixError(
            f"Cannot compute partial correlation of {c.variables[x]!r} and "
            f"{c.variables[y]!r} given {[c.variables[k] for k in given]}"
        )
    r = -precision[0, 1] / np.sqrt(scale)
    if not np.isfinite(r):
        raise SingularMatrixError(
            f"Non-finite partial correlation given {[c.variables[k] for k in given]}"
        )
    return clamp_correlation(float(r))


def load_correlation_matrix(path: Union[str, Path]) -> CorrelationMatrix:
    """Read "n=<sampleSize>", a header line of names, then a p-by-p matrix.

    Raises:
        DataParseError: On a malformed sample-size line or a matrix of the wrong shape
    """
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as handle:
            size_line = handle.readline().strip()
            names = handle.readline().split()
    except OSError as e:
        raise DataParseError(f"Cannot read correlation file {path}: {e}")

    if not size_line.startswith("n="):
        raise DataParseError(f"First line of {path} must be 'n=<sampleSize>'", row=1)
    try:
        sample_size = int(size_line[2:])
    except ValueError:
        raise DataParseError(f"Bad sample size {size_line!r} in {path}", row=1)

    try:
        frame = pd.read_csv(path, sep=r"\s+", header=None, skiprows=2, dtype=float)
    except (ValueError, pd.errors.ParserError) as e:
        raise DataParseError(f"Bad correlation matrix in {path}: {e}")
    entries = frame.to_numpy(dtype=float)
    if entries.shape != (len(names), len(names)):
        raise DataParseError(
            f"Expected a {len(names)}x{len(names)} matrix in {path}, got {entries.shape}"
        )
    try:
        return CorrelationMatrix(variables=names, entries=entries, sample_size=sample_size)
    except ValueError as e:
        raise DataParseError(f"Invalid correlation matrix in {path}: {e}")
