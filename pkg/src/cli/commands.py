"""
Subcommand implementations. Each prints its resolved configuration line
first, then `key=value` result lines, and returns the process exit code.
"""

import argparse
import logging
from pathlib import Path
from typing import Dict, FrozenSet, List, NamedTuple, Set, Tuple

import numpy as np
from pydantic import ValidationError

from src.data.correlation import load_correlation_matrix
from src.data.dataset import Dataset, load_dataset, permute_columns, save_dataset
from src.data.exceptions import DataError
from src.exceptions import InvalidConfigError
from src.graph.mixed_graph import MixedGraph
from src.graph.operations import dag_to_cpdag
from src.graph.text_format import write_graph
from src.metrics.comparison import bidirected_fraction, evaluate, mean_record
from src.metrics.models import BenchmarkRow, MetricsRecord
from src.metrics.report import format_degree, write_benchmark_csv
from src.models.base import Algorithm, RandomGraphConfig, SearchConfig, TestKind
from src.search.algorithms import run
from src.search.executor import ParallelExecutor
from src.search.models import SearchResult
from src.sim.random_graph import random_dag
from src.sim.sem import parameterize, simulate
from src.utils.settings import Settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INCONSISTENT = 3


def _validated(model, **values):
    """Build a pydantic model, turning validation failures into config errors."""
    try:
        return model(**values)
    except ValidationError as e:
        raise InvalidConfigError(f"Invalid {model.__name__}: {e}")


def _pick(flag, default):
    return default if flag is None else flag


def _print_config(command: str, **values) -> None:
    fields = " ".join(f"{key}={value}" for key, value in values.items())
    print(f"config command={command} {fields}".rstrip(), flush=True)


def _print_result(key: str, value) -> None:
    print(f"{key}={value}", flush=True)


def _resolve_alpha(args: argparse.Namespace, settings: Settings, default: float) -> float:
    if args.alpha is not None:
        return args.alpha
    if args.regime:
        return settings.regime(args.regime).alpha
    return default


def _prepare_output_dir(path: Path) -> None:
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise DataError(f"Cannot create output directory {path}: {e}")


def _generate(
    nodes: int, avg_degree: float, samples: int, seeds: Tuple[int, int, int], settings: Settings
) -> Tuple[MixedGraph, Dataset]:
    graph_seed, param_seed, data_seed = seeds
    graph_config = _validated(RandomGraphConfig, num_nodes=nodes, avg_degree=avg_degree, seed=graph_seed)
    dag = random_dag(graph_config)
    model = parameterize(dag, param_seed, settings.simulation.sem)
    return dag, simulate(model, samples, data_seed)


def cmd_simulate(args: argparse.Namespace, settings: Settings) -> int:
    """Write data.tsv and truth.graph.txt into the output directory."""
    defaults = settings.simulation
    nodes = _pick(args.nodes, defaults.nodes)
    avg_degree = _pick(args.avg_degree, defaults.avg_degree)
    samples = _pick(args.samples, defaults.samples)
    seeds = (
        _pick(args.graph_seed, defaults.graph_seed),
        _pick(args.param_seed, defaults.param_seed),
        _pick(args.data_seed, defaults.data_seed),
    )
    out = Path(args.out)
    _print_config(
        "simulate",
        nodes=nodes,
        avg_degree=avg_degree,
        samples=samples,
        graph_seed=seeds[0],
        param_seed=seeds[1],
        data_seed=seeds[2],
        out=out,
    )

    dag, dataset = _generate(nodes, avg_degree, samples, seeds, settings)
    _prepare_output_dir(out)
    try:
        save_dataset(dataset, out / "data.tsv", delimiter=args.delimiter)
        write_graph(dag, out / "truth.graph.txt")
    except OSError as e:
        raise DataError(f"Cannot write to {out}: {e}")

    _print_result("data", out / "data.tsv")
    _print_result("truth", out / "truth.graph.txt")
    _print_result("edges", dag.num_edges)
    return EXIT_OK


def _search_config(args: argparse.Namespace, settings: Settings) -> SearchConfig:
    defaults = settings.search
    test = _pick(args.test, defaults.test)
    if test == TestKind.ORACLE:
        raise InvalidConfigError("The oracle test needs a true DAG; use oracle-check")
    return _validated(
        SearchConfig,
        algorithm=_pick(args.algorithm, defaults.algorithm),
        test=test,
        alpha=_resolve_alpha(args, settings, defaults.alpha),
        penalty=_pick(args.penalty, defaults.penalty),
        max_depth=_pick(args.max_depth, defaults.max_depth),
        threads=_pick(args.threads, defaults.threads),
    )


def _adjacencies(graph: MixedGraph) -> Set[FrozenSet[str]]:
    return {frozenset((graph.name(a), graph.name(b))) for a, b in graph.iter_pairs()}


def _check_permutations(config: SearchConfig, dataset: Dataset, result: SearchResult, count: int) -> int:
    reference = _adjacencies(result.graph)
    mismatches = 0
    for k in range(1, count + 1):
        permuted = run(config, permute_columns(dataset, seed=k))
        difference = reference ^ _adjacencies(permuted.graph)
        if difference:
            mismatches += 1
            logger.warning("Permutation %d changed %d adjacencies", k, len(difference))
    _print_result("permutation_mismatches", f"{mismatches}/{count}")
    return EXIT_INCONSISTENT if mismatches else EXIT_OK


def cmd_search(args: argparse.Namespace, settings: Settings) -> int:
    """Run one search and write the result graph."""
    config = _search_config(args, settings)
    if args.check_permutations < 0:
        raise InvalidConfigError("--check-permutations must be >= 0")
    _print_config(
        "search",
        input=args.data or args.correlation,
        algorithm=config.algorithm.value,
        test=config.test.value,
        alpha=config.alpha,
        penalty=config.penalty,
        max_depth="unlimited" if config.max_depth is None else config.max_depth,
        threads=config.threads,
        check_permutations=args.check_permutations,
        out=args.out,
    )

    if args.data:
        data = load_dataset(args.data, delimiter=args.delimiter)
    else:
        if args.check_permutations:
            raise InvalidConfigError("--check-permutations needs --data")
        data = load_correlation_matrix(args.correlation)

    result = run(config, data)
    ambiguous = result.ambiguous_triples if config.algorithm == Algorithm.CPC else None
    try:
        write_graph(result.graph, args.out, ambiguous)
    except OSError as e:
        raise DataError(f"Cannot write {args.out}: {e}")

    _print_result("elapsed_seconds", f"{result.elapsed_seconds:.3f}")
    _print_result("edges", result.graph.num_edges)
    _print_result("bidirected", sum(1 for edge in result.graph.edges() if edge.is_bidirected))
    _print_result("unshielded_triples", result.unshielded_triples)
    _print_result("ambiguity_rate", f"{result.ambiguity_rate:.4f}")

    if args.check_permutations:
        return _check_permutations(config, data, result, args.check_permutations)
    return EXIT_OK


class BenchmarkRun(NamedTuple):
    """One simulated dataset of the benchmark."""
    avg_degree: float
    run: int
    seeds: Tuple[int, int, int]


def run_seeds(seed_base: int, index: int) -> Tuple[int, int, int]:
    """Graph, parameter and data seeds of the index-th dataset."""
    first = seed_base + 3 * index
    return (first, first + 1, first + 2)


def cmd_benchmark(args: argparse.Namespace, settings: Settings) -> int:
    """Simulate datasets, run every algorithm on each, and write the scores."""
    defaults = settings.benchmark
    regime = settings.regime(args.regime) if args.regime else None
    nodes = _pick(args.nodes, regime.nodes if regime and regime.nodes else defaults.nodes)
    degrees = _pick(args.avg_degrees, defaults.avg_degrees)
    reps = _pick(args.reps, defaults.reps)
    samples = _pick(args.samples, defaults.samples)
    algorithms = _pick(args.algorithms, defaults.algorithms)
    seed_base = _pick(args.seed_base, defaults.seed_base)
    threads = _pick(args.threads, defaults.threads)
    alpha = _resolve_alpha(args, settings, settings.search.alpha)
    penalty = _pick(args.penalty, settings.search.penalty)
    test = _pick(args.test, settings.search.test)
    max_depth = _pick(args.max_depth, settings.search.max_depth)
    if not degrees or not algorithms:
        raise InvalidConfigError("Need at least one average degree and one algorithm")
    if reps < 1 or threads < 1:
        raise InvalidConfigError("--reps and --threads must be >= 1")

    _print_config(
        "benchmark",
        nodes=nodes,
        avg_degrees=",".join(format_degree(d) for d in degrees),
        reps=reps,
        samples=samples,
        algorithms=",".join(a.value for a in algorithms),
        test=test.value,
        alpha=alpha,
        penalty=penalty,
        max_depth="unlimited" if max_depth is None else max_depth,
        seed_base=seed_base,
        threads=threads,
        out=args.out,
    )

    runs = [
        BenchmarkRun(degree, rep + 1, run_seeds(seed_base, d * reps + rep))
        for d, degree in enumerate(degrees)
        for rep in range(reps)
    ]
    cells = [(algorithm, index) for algorithm in algorithms for index in range(len(runs))]
    inner_threads = max(1, threads // len(cells)) if len(cells) < threads else 1
    configs = {
        algorithm: _validated(
            SearchConfig,
            algorithm=algorithm,
            test=test,
            alpha=alpha,
            penalty=penalty,
            max_depth=max_depth,
            threads=inner_threads,
        )
        for algorithm in algorithms
    }

    with ParallelExecutor(threads, chunks_per_thread=1) as executor:
        generated = executor.map(
            lambda r: _generate(nodes, r.avg_degree, samples, r.seeds, settings), runs
        )

        def score(cell: Tuple[Algorithm, int]) -> Tuple[MetricsRecord, float]:
            algorithm, index = cell
            dag, dataset = generated[index]
            result = run(configs[algorithm], dataset)
            logger.info("Finished %s on run %d (degree %s)", algorithm.value, runs[index].run, runs[index].avg_degree)
            return evaluate(dag, result), result.ambiguity_rate

        scored = executor.map(score, cells)

    by_cell: Dict[Tuple[Algorithm, int], Tuple[MetricsRecord, float]] = dict(zip(cells, scored))
    rows: List[BenchmarkRow] = []
    for algorithm in algorithms:
        for degree in degrees:
            indices = [i for i, r in enumerate(runs) if r.avg_degree == degree]
            records = [by_cell[(algorithm, i)][0] for i in indices]
            for i, record in zip(indices, records):
                rows.append(BenchmarkRow(algorithm=algorithm, avg_degree=degree, run=runs[i].run, record=record))
            mean = mean_record(records)
            rows.append(BenchmarkRow(algorithm=algorithm, avg_degree=degree, run=None, record=mean))
            ambiguity = float(np.mean([by_cell[(algorithm, i)][1] for i in indices]))
            key = f"{algorithm.value}.{format_degree(degree)}"
            _print_result(f"{key}.ambiguity_rate", f"{ambiguity:.4f}")
            _print_result(f"{key}.elapsed_seconds", f"{mean.elapsed_seconds:.2f}")

    comments = [
        f"nodes={nodes} samples={samples} test={test.value} alpha={alpha} penalty={penalty} "
        f"seed_base={seed_base} seeds=graph,param,data"
    ]
    comments += [
        f"avg_degree={format_degree(r.avg_degree)} run={r.run} seeds={r.seeds[0]},{r.seeds[1]},{r.seeds[2]}"
        for r in runs
    ]
    try:
        write_benchmark_csv(args.out, rows, comments)
    except OSError as e:
        raise DataError(f"Cannot write {args.out}: {e}")
    _print_result("rows", len(rows))
    return EXIT_OK


def oracle_trial(seed: int, trial: int, max_nodes: int, avg_degree: float) -> MixedGraph:
    """Random DAG for one trial; the degree is capped at what the size allows."""
    rng = np.random.default_rng([seed, trial])
    nodes = int(rng.integers(min(2, max_nodes), max_nodes + 1))
    graph_seed = int(rng.integers(0, 2**63))
    return random_dag(
        RandomGraphConfig(num_nodes=nodes, avg_degree=min(avg_degree, nodes - 1), seed=graph_seed)
    )


def cmd_oracle_check(args: argparse.Namespace, settings: Settings) -> int:
    """Run every algorithm with the d-separation oracle and count exact patterns."""
    if args.trials < 1 or args.max_nodes < 1 or args.avg_degree < 0 or args.seed < 0:
        raise InvalidConfigError("--trials and --max-nodes must be >= 1, --avg-degree and --seed >= 0")
    _print_config(
        "oracle-check",
        trials=args.trials,
        max_nodes=args.max_nodes,
        avg_degree=args.avg_degree,
        seed=args.seed,
    )

    exact = {algorithm: 0 for algorithm in Algorithm}
    bidirected = 0
    for trial in range(args.trials):
        dag = oracle_trial(args.seed, trial, args.max_nodes, args.avg_degree)
        pattern = dag_to_cpdag(dag)
        for algorithm in Algorithm:
            config = SearchConfig(algorithm=algorithm, test=TestKind.ORACLE)
            result = run(config, dag=dag)
            if result.graph == pattern and not result.ambiguous_triples:
                exact[algorithm] += 1
            else:
                logger.warning("%s missed the pattern on trial %d", algorithm.value, trial)
            if algorithm == Algorithm.PC_MAX and bidirected_fraction(result.graph) > 0:
                bidirected += 1

    for algorithm in Algorithm:
        _print_result(algorithm.value, f"{exact[algorithm]}/{args.trials} exact")
    _print_result("pc-max.bidirected", bidirected)
    if any(count != args.trials for count in exact.values()) or bidirected:
        return EXIT_INCONSISTENT
    return EXIT_OK
