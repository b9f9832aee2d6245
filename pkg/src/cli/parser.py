"""
Command-line parser. Flags default to None so that unset flags fall back to
the loaded settings.
"""

import argparse
from typing import List, NoReturn

from src.exceptions import InvalidConfigError
from src.models.base import Algorithm, TestKind


class UsageError(InvalidConfigError):
    """Raised for malformed command lines."""
    pass


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting on bad input."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def algorithm_list(value: str) -> List[Algorithm]:
    try:
        return [Algorithm(item.strip()) for item in value.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated list of {[a.value for a in Algorithm]}, got '{value}'"
        )


def float_list(value: str) -> List[float]:
    try:
        return [float(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{value}'")


def _add_test_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, help="Significance level")
    parser.add_argument("--penalty", type=float, help="BIC penalty multiplier")
    parser.add_argument("--regime", help="Named parameter preset from config.yaml (standard, large)")


def _add_simulate(subparsers) -> None:
    parser = subparsers.add_parser("simulate", help="Generate a random DAG and sample data from it")
    parser.add_argument("--nodes", type=int, help="Number of variables")
    parser.add_argument("--avg-degree", type=float, help="Average degree of the DAG")
    parser.add_argument("--samples", type=int, help="Number of cases")
    parser.add_argument("--graph-seed", type=int, help="Seed for the DAG")
    parser.add_argument("--param-seed", type=int, help="Seed for the SEM parameters")
    parser.add_argument("--data-seed", type=int, help="Seed for the sampled cases")
    parser.add_argument("--delimiter", default="\t", help="Column delimiter of data.tsv")
    parser.add_argument("--out", required=True, help="Output directory")


def _add_search(subparsers) -> None:
    parser = subparsers.add_parser("search", help="Run one search on a dataset")
    parser.add_argument("--algorithm", type=Algorithm, choices=list(Algorithm), help="Search algorithm")
    parser.add_argument(
        "--test",
        type=TestKind,
        choices=[TestKind.FISHER_Z, TestKind.BIC_DIFF],
        help="Independence test",
    )
    _add_test_flags(parser)
    parser.add_argument("--max-depth", type=int, help="Largest conditioning set size")
    parser.add_argument("--threads", type=int, help="Worker threads")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--data", help="Delimited data file with a header row")
    source.add_argument("--correlation", help="Correlation matrix file (n=<size>, names, matrix)")
    parser.add_argument("--delimiter", default="\t", help="Column delimiter of the data file")
    parser.add_argument(
        "--check-permutations",
        type=int,
        default=0,
        metavar="K",
        help="Re-run on K column permutations and fail if the adjacencies differ",
    )
    parser.add_argument("--out", required=True, help="Output graph file")


def _add_benchmark(subparsers) -> None:
    parser = subparsers.add_parser("benchmark", help="Simulate, search and score repeatedly")
    parser.add_argument("--nodes", type=int, help="Number of variables")
    parser.add_argument("--avg-degrees", type=float_list, help="Comma-separated average degrees")
    parser.add_argument("--reps", type=int, help="Datasets per average degree")
    parser.add_argument("--samples", type=int, help="Cases per dataset")
    parser.add_argument("--algorithms", type=algorithm_list, help="Comma-separated algorithms")
    parser.add_argument("--test", type=TestKind, choices=[TestKind.FISHER_Z, TestKind.BIC_DIFF])
    _add_test_flags(parser)
    parser.add_argument("--max-depth", type=int, help="Largest conditioning set size")
    parser.add_argument("--seed-base", type=int, help="Base of the derived per-run seeds")
    parser.add_argument("--threads", type=int, help="Cells run concurrently")
    parser.add_argument("--out", required=True, help="Output CSV file")


def _add_oracle_check(subparsers) -> None:
    parser = subparsers.add_parser("oracle-check", help="Check all algorithms against d-separation")
    parser.add_argument("--trials", type=int, default=200, help="Number of random DAGs")
    parser.add_argument("--max-nodes", type=int, default=10, help="Largest DAG size")
    parser.add_argument("--avg-degree", type=float, default=3.0, help="Average degree")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the trial sequence")


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="pcmax",
        description="PC, CPC, PC-Stable and PC-Max causal search",
    )
    parser.add_argument("--config", help="YAML settings file (default: $PCMAX_CONFIG or config.yaml)")
    parser.add_argument("--log-level", help="Override the configured log level")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)
    _add_simulate(subparsers)
    _add_search(subparsers)
    _add_benchmark(subparsers)
    _add_oracle_check(subparsers)
    return parser
