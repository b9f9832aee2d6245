"""
Collider orientation strategies: by recorded sepset (PC), by conservative
classification (CPC) and by maximum p-value (PC-Max).
"""

import logging
from collections import defaultdict
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from src.graph.mixed_graph import MixedGraph
from src.graph.models import Triple
from src.graph.operations import orient_collider, unshielded_triples, would_create_bidirected
from src.graph.sepsets import SepsetMap
from src.indep.base import IndependenceTest

from .adjacency import run_test
from .exceptions import ConsistencyError
from .executor import ParallelExecutor
from .models import ColliderRecord, TripleClass

logger = logging.getLogger(__name__)

Candidate = Tuple[Tuple[int, ...], float]
Scored = Tuple[Tuple[int, ...], float, float]


def candidate_sets(
    graph: MixedGraph,
    x: int,
    z: int,
    max_depth: Optional[int] = None,
) -> Iterator[Tuple[int, ...]]:
    """Subsets of adj(x) \\ {z} and of adj(z) \\ {x}, by increasing size, without repeats."""
    adj_x = [k for k in graph.adjacents(x) if k != z]
    adj_z = [k for k in graph.adjacents(z) if k != x]
    largest = max(len(adj_x), len(adj_z))
    if max_depth is not None:
        largest = min(largest, max_depth)
    for size in range(largest + 1):
        seen: Set[Tuple[int, ...]] = set()
        for neighbors in (adj_x, adj_z):
            for subset in combinations(neighbors, size):
                if subset not in seen:
                    seen.add(subset)
                    yield subset


def orient_colliders_sepset(graph: MixedGraph, sepsets: SepsetMap) -> MixedGraph:
    """Orient every unshielded x - y - z whose sepset omits y, in place.

    Orientations are applied unconditionally, so bidirected edges can appear.

    Raises:
        ConsistencyError: If the endpoints of an unshielded triple have no sepset
    """
    oriented = 0
    for triple in unshielded_triples(graph):
        sepset = sepsets.get(triple.x, triple.z)
        if sepset is None:
            raise ConsistencyError(
                f"No sepset recorded for nonadjacent pair ({graph.name(triple.x)}, {graph.name(triple.z)})"
            )
        if triple.y not in sepset:
            orient_collider(graph, triple)
            oriented += 1
            logger.debug("Collider %s -> %s <- %s", graph.name(triple.x), graph.name(triple.y), graph.name(triple.z))
    logger.info("Oriented %d colliders from sepsets", oriented)
    return graph


def independence_sets(
    graph: MixedGraph,
    test: IndependenceTest,
    x: int,
    z: int,
    max_depth: Optional[int] = None,
) -> List[Tuple[int, ...]]:
    """Every candidate set given which x and z test independent."""
    return [s for s in candidate_sets(graph, x, z, max_depth) if run_test(test, x, z, s).independent]


def _classify(y: int, independent: Sequence[Tuple[int, ...]]) -> TripleClass:
    if not independent:
        return TripleClass.AMBIGUOUS
    containing = sum(1 for s in independent if y in s)
    if containing == 0:
        return TripleClass.COLLIDER
    if containing == len(independent):
        return TripleClass.NONCOLLIDER
    return TripleClass.AMBIGUOUS


def classify_triple_cpc(
    graph: MixedGraph,
    test: IndependenceTest,
    triple: Triple,
    max_depth: Optional[int] = None,
) -> TripleClass:
    """Conservative classification of one unshielded triple.

    An empty independence list makes the triple ambiguous.
    """
    independent = independence_sets(graph, test, triple.x, triple.z, max_depth)
    if not independent:
        logger.warning(
            "No set separates %s and %s; marking (%s, %s, %s) ambiguous",
            graph.name(triple.x), graph.name(triple.z),
            graph.name(triple.x), graph.name(triple.y), graph.name(triple.z),
        )
    return _classify(triple.y, independent)


def _group_by_endpoints(triples: Sequence[Triple]) -> Dict[Tuple[int, int], List[Triple]]:
    grouped: Dict[Tuple[int, int], List[Triple]] = defaultdict(list)
    for triple in triples:
        grouped[triple.endpoints].append(triple)
    return grouped


def orient_colliders_cpc(
    graph: MixedGraph,
    test: IndependenceTest,
    max_depth: Optional[int] = None,
    executor: Optional[ParallelExecutor] = None,
) -> Tuple[MixedGraph, Set[Triple], int]:
    """Classify every unshielded triple, orient the colliders in place.

    Triples sharing endpoints share one independence list. Colliders are
    oriented unconditionally.

    Returns:
        The graph, the ambiguous triples and the number of unshielded triples
    """
    executor = executor or ParallelExecutor(1)
    triples = unshielded_triples(graph)
    grouped = _group_by_endpoints(triples)
    pairs = sorted(grouped)
    found = executor.map(lambda pair: independence_sets(graph, test, pair[0], pair[1], max_depth), pairs)

    ambiguous: Set[Triple] = set()
    colliders: List[Triple] = []
    for pair, independent in zip(pairs, found):
        if not independent:
            logger.warning(
                "No set separates %s and %s; their %d triples are ambiguous",
                graph.name(pair[0]), graph.name(pair[1]), len(grouped[pair]),
            )
        for triple in grouped[pair]:
            verdict = _classify(triple.y, independent)
            if verdict == TripleClass.COLLIDER:
                colliders.append(triple)
            elif verdict == TripleClass.AMBIGUOUS:
                ambiguous.add(triple)
    for triple in sorted(colliders):
        orient_collider(graph, triple)
    logger.info(
        "Classified %d unshielded triples: %d colliders, %d ambiguous",
        len(triples), len(colliders), len(ambiguous),
    )
    return graph, ambiguous, len(triples)


def _rank(names: Sequence[str], candidate: Scored) -> Tuple[float, int, Tuple[str, ...]]:
    subset, score, _ = candidate
    return (score, len(subset), tuple(sorted(names[k] for k in subset)))


def _best_sepset(
    graph: MixedGraph,
    test: IndependenceTest,
    x: int,
    z: int,
    max_depth: Optional[int] = None,
) -> Optional[Scored]:
    best: Optional[Scored] = None
    names = test.variables
    for subset in candidate_sets(graph, x, z, max_depth):
        result = run_test(test, x, z, subset)
        candidate = (subset, test.ranking_key(result), result.p_value)
        if best is None or _rank(names, candidate) < _rank(names, best):
            best = candidate
    return best


def max_p_sepset(
    graph: MixedGraph,
    test: IndependenceTest,
    x: int,
    z: int,
    max_depth: Optional[int] = None,
) -> Optional[Candidate]:
    """Candidate set with the largest p-value for x and z.

    Score-based tests rank by their score instead, lowest first. Ties go to
    the smaller set, then to the lexicographically smaller list of node
    names.

    Returns:
        (set, p-value), or None if there are no candidates
    """
    best = _best_sepset(graph, test, x, z, max_depth)
    if best is None:
        return None
    subset, _, p_value = best
    return subset, p_value


def _triple_rank(names: Sequence[str], record: ColliderRecord) -> Tuple[float, str, str, str]:
    first, last = sorted((names[record.triple.x], names[record.triple.z]))
    return (record.score, first, names[record.triple.y], last)


def orient_colliders_maxp(
    graph: MixedGraph,
    test: IndependenceTest,
    max_depth: Optional[int] = None,
    executor: Optional[ParallelExecutor] = None,
) -> Tuple[MixedGraph, List[ColliderRecord], int, int]:
    """Orient colliders chosen by their maximum-p sepsets, in place.

    The sepset searches run in parallel, one per endpoint pair. The
    resulting collider candidates are then applied one by one from the
    highest p-value down (lowest score for score-based tests), skipping any
    that would make an edge bidirected.

    Args:
        graph: Skeleton after the adjacency phase
        test: Independence test over the graph's variables
        max_depth: Largest conditioning set size, None for unlimited
        executor: Worker pool; serial if omitted

    Returns:
        The graph, the oriented collider records, the number of skipped
        candidates and the number of unshielded triples
    """
    executor = executor or ParallelExecutor(1)
    triples = unshielded_triples(graph)
    grouped = _group_by_endpoints(triples)
    pairs = sorted(grouped)
    found = executor.map(lambda pair: _best_sepset(graph, test, pair[0], pair[1], max_depth), pairs)

    candidates: List[ColliderRecord] = []
    for pair, best in zip(pairs, found):
        if best is None:
            logger.warning(
                "No candidate sets for %s and %s; treating their triples as noncolliders",
                graph.name(pair[0]), graph.name(pair[1]),
            )
            continue
        subset, score, p_value = best
        for triple in grouped[pair]:
            if triple.y not in subset:
                candidates.append(
                    ColliderRecord(triple=triple, p_value=p_value, score=score, sepset=frozenset(subset))
                )

    names = test.variables
    candidates.sort(key=lambda record: _triple_rank(names, record))
    oriented: List[ColliderRecord] = []
    skipped = 0
    for record in candidates:
        if would_create_bidirected(graph, record.triple):
            skipped += 1
            logger.debug(
                "Skipped collider %s -> %s <- %s (p=%.6g)",
                graph.name(record.triple.x), graph.name(record.triple.y), graph.name(record.triple.z), record.p_value,
            )
            continue
        orient_collider(graph, record.triple)
        oriented.append(record)
    if skipped:
        logger.warning("Skipped %d of %d collider candidates to avoid bidirected edges", skipped, len(candidates))
    logger.info("Oriented %d colliders by maximum p-value over %d unshielded triples", len(oriented), len(triples))
    return graph, oriented, skipped, len(triples)
