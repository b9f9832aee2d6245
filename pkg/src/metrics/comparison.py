"""
Adjacency and arrowhead accuracy of an estimated graph against the true pattern.
"""

import logging
from typing import Iterable, List, Optional, Set, Tuple

import numpy as np

from src.graph.mixed_graph import MixedGraph
from src.graph.models import Endpoint
from src.graph.operations import dag_to_cpdag
from src.search.models import SearchResult

from .exceptions import MetricsError
from .models import ConfusionCounts, MetricsRecord

logger = logging.getLogger(__name__)


def _require_same_nodes(truth: MixedGraph, estimate: MixedGraph) -> None:
    if truth.names() != estimate.names():
        raise MetricsError("Graphs to compare must have the same nodes in the same order")


def _counts(truth: Set, estimate: Set) -> ConfusionCounts:
    return ConfusionCounts(
        tp=len(truth & estimate),
        fp=len(estimate - truth),
        fn=len(truth - estimate),
    )


def _arrowheads(graph: MixedGraph) -> Set[Tuple[int, int]]:
    """(x, y) for every arrowhead at y on an edge x - y."""
    heads = set()
    for edge in graph.edges():
        if edge.end_at_b == Endpoint.ARROW:
            heads.add((edge.a, edge.b))
        if edge.end_at_a == Endpoint.ARROW:
            heads.add((edge.b, edge.a))
    return heads


def adjacency_confusion(truth: MixedGraph, estimate: MixedGraph) -> ConfusionCounts:
    """Counts over unordered adjacent pairs, orientation ignored.

    Raises:
        MetricsError: If the node sets differ
    """
    _require_same_nodes(truth, estimate)
    return _counts(truth.skeleton_pairs(), estimate.skeleton_pairs())


def arrowhead_confusion(truth: MixedGraph, estimate: MixedGraph) -> ConfusionCounts:
    """Counts over arrowheads, one per edge end.

    A bidirected estimated edge can score one true and one false arrowhead.

    Raises:
        MetricsError: If the node sets differ
    """
    _require_same_nodes(truth, estimate)
    return _counts(_arrowheads(truth), _arrowheads(estimate))


def _ratio(numerator: int, denominator: int) -> Optional[float]:
    return numerator / denominator if denominator else None


def precision_recall(counts: ConfusionCounts) -> Tuple[Optional[float], Optional[float]]:
    """Precision and recall, None where the denominator is zero."""
    return _ratio(counts.tp, counts.tp + counts.fp), _ratio(counts.tp, counts.tp + counts.fn)


def bidirected_fraction(graph: MixedGraph) -> float:
    edges = graph.edges()
    if not edges:
        return 0.0
    return sum(1 for edge in edges if edge.is_bidirected) / len(edges)


def evaluate(true_dag: MixedGraph, result: SearchResult) -> MetricsRecord:
    """Score a search result against the pattern of the true DAG."""
    pattern = dag_to_cpdag(true_dag)
    ap, ar = precision_recall(adjacency_confusion(pattern, result.graph))
    ahp, ahr = precision_recall(arrowhead_confusion(pattern, result.graph))
    return MetricsRecord(
        ap=ap,
        ar=ar,
        ahp=ahp,
        ahr=ahr,
        bid=bidirected_fraction(result.graph),
        elapsed_seconds=result.elapsed_seconds,
    )


def _mean(values: Iterable[Optional[float]]) -> Optional[float]:
    present: List[float] = [value for value in values if value is not None]
    return float(np.mean(present)) if present else None


def mean_record(records: List[MetricsRecord]) -> MetricsRecord:
    """Field-wise arithmetic mean, skipping undefined ratios.

    Raises:
        MetricsError: If `records` is empty
    """
    if not records:
        raise MetricsError("Cannot average zero records")
    return MetricsRecord(
        ap=_mean(r.ap for r in records),
        ar=_mean(r.ar for r in records),
        ahp=_mean(r.ahp for r in records),
        ahr=_mean(r.ahr for r in records),
        bid=_mean(r.bid for r in records) or 0.0,
        elapsed_seconds=_mean(r.elapsed_seconds for r in records) or 0.0,
    )
