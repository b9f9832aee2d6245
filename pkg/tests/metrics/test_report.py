"""
Tests for the benchmark CSV writer.
"""

import math

from src.metrics.models import BenchmarkRow, MetricsRecord
from src.metrics.report import format_degree, format_ratio, read_benchmark_csv, write_benchmark_csv
from src.models.base import Algorithm


def _rows():
    run = MetricsRecord(ap=0.98123, ar=0.9, ahp=None, ahr=0.5, bid=0.0, elapsed_seconds=1.2345)
    return [
        BenchmarkRow(algorithm=Algorithm.PC_MAX, avg_degree=2.0, run=1, record=run),
        BenchmarkRow(algorithm=Algorithm.PC_MAX, avg_degree=2.0, run=None, record=run),
    ]


def test_formatting():
    """Test ratio and degree formatting."""
    assert format_ratio(None) == "NA"
    assert format_ratio(0.5) == "0.5000"
    assert format_degree(2.0) == "2"
    assert format_degree(2.5) == "2.5"


def test_written_file(tmp_path):
    """Test comment lines, exact header and row formatting."""
    path = tmp_path / "table.csv"
    write_benchmark_csv(path, _rows(), comments=["seed_base=1"])
    lines = path.read_text().splitlines()
    assert lines == [
        "# seed_base=1",
        "algorithm,avg_degree,run,ap,ar,ahp,ahr,bid,elapsed_seconds",
        "pc-max,2,1,0.9812,0.9000,NA,0.5000,0.0000,1.23",
        "pc-max,2,MEAN,0.9812,0.9000,NA,0.5000,0.0000,1.23",
    ]


def test_read_back(tmp_path):
    """Test that NA cells read back as NaN and comments are skipped."""
    path = tmp_path / "table.csv"
    write_benchmark_csv(path, _rows(), comments=["note"])
    frame = read_benchmark_csv(path)
    assert list(frame["run"].astype(str)) == ["1", "MEAN"]
    assert math.isnan(frame["ahp"][0])
    assert frame["ap"][0] == 0.9812
