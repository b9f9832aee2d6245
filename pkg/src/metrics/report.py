"""
Benchmark CSV output.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import pandas as pd

from .models import BenchmarkRow, MetricsRecord

logger = logging.getLogger(__name__)

COLUMNS = ["algorithm", "avg_degree", "run", "ap", "ar", "ahp", "ahr", "bid", "elapsed_seconds"]
NA = "NA"
MEAN = "MEAN"


def format_ratio(value: Optional[float]) -> str:
    return NA if value is None else f"{value:.4f}"


def format_degree(value: float) -> str:
    return f"{value:g}"


def _row_values(row: BenchmarkRow) -> Dict[str, str]:
    record: MetricsRecord = row.record
    return {
        "algorithm": row.algorithm.value,
        "avg_degree": format_degree(row.avg_degree),
        "run": MEAN if row.run is None else str(row.run),
        "ap": format_ratio(record.ap),
        "ar": format_ratio(record.ar),
        "ahp": format_ratio(record.ahp),
        "ahr": format_ratio(record.ahr),
        "bid": format_ratio(record.bid),
        "elapsed_seconds": f"{record.elapsed_seconds:.2f}",
    }


def benchmark_frame(rows: Sequence[BenchmarkRow]) -> pd.DataFrame:
    return pd.DataFrame([_row_values(row) for row in rows], columns=COLUMNS)


def write_benchmark_csv(
    path: Union[str, Path],
    rows: Sequence[BenchmarkRow],
    comments: Optional[List[str]] = None,
) -> None:
    """Write benchmark rows, preceded by `#` comment lines.

    Args:
        path: Output file
        rows: Per-run and mean rows in output order
        comments: Lines (without the leading `#`) recording seeds and settings
    """
    path = Path(path)
    with path.open("w", newline="") as handle:
        for comment in comments or []:
            handle.write(f"# {comment}\n")
        benchmark_frame(rows).to_csv(handle, index=False, lineterminator="\n")
    logger.info("Wrote %d benchmark rows to %s", len(rows), path)


def read_benchmark_csv(path: Union[str, Path]) -> pd.DataFrame:
    """Load a benchmark CSV; NA cells come back as NaN."""
    return pd.read_csv(path, comment="#", na_values=[NA], keep_default_na=False)
