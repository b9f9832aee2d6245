"""
Meek orientation rules R1-R4, applied to a fixpoint.

Arrowheads of bidirected edges count as ordinary arrowheads in rule
antecedents and are never re-oriented. Ambiguous triples block every rule
that would read them as definite noncolliders, and their edges are never
oriented by the closure.
"""

import logging
from collections import deque
from itertools import combinations
from typing import AbstractSet, Optional, Set, Tuple

from .mixed_graph import MixedGraph
from .models import Endpoint, Triple, pair_key

logger = logging.getLogger(__name__)


class MeekRules:
    """Applies R1-R4 to a graph in place."""

    def __init__(self, ambiguous: Optional[AbstractSet[Triple]] = None):
        self.ambiguous: AbstractSet[Triple] = ambiguous or frozenset()
        self._frozen_pairs: Set[Tuple[int, int]] = set()
        for triple in self.ambiguous:
            self._frozen_pairs.add(pair_key(triple.x, triple.y))
            self._frozen_pairs.add(pair_key(triple.z, triple.y))
        self.orientations = 0

    def _is_ambiguous(self, x: int, y: int, z: int) -> bool:
        return Triple.of(x, y, z) in self.ambiguous

    def orient_implied(self, graph: MixedGraph) -> MixedGraph:
        """Run all rules until nothing changes."""
        changed = True
        passes = 0
        while changed:
            changed = False
            passes += 1
            for a, b in [pair for pair in graph.iter_pairs() if graph.is_undirected(*pair)]:
                if pair_key(a, b) in self._frozen_pairs:
                    continue
                for tail, head in ((a, b), (b, a)):
                    if not graph.is_undirected(tail, head):
                        break
                    rule = self._implied_rule(graph, tail, head)
                    if rule and self._is_safe(graph, tail, head):
                        graph.set_endpoint(tail, head, Endpoint.ARROW)
                        self.orientations += 1
                        changed = True
                        logger.debug(
                            "%s: %s --> %s", rule, graph.name(tail), graph.name(head)
                        )
                        break
        logger.debug("Meek closure: %d orientations in %d passes", self.orientations, passes)
        return graph

    def _implied_rule(self, graph: MixedGraph, b: int, c: int) -> Optional[str]:
        """Name of the first rule implying b --> c, if any."""
        if self._rule1(graph, b, c):
            return "R1"
        if self._rule2(graph, b, c):
            return "R2"
        if self._rule3(graph, b, c):
            return "R3"
        if self._rule4(graph, b, c):
            return "R4"
        return None

    def _rule1(self, graph: MixedGraph, b: int, c: int) -> bool:
        # a *-> b --- c, a and c nonadjacent
        for a in graph.adjacents(b):
            if a == c or not graph.has_arrow_at(a, b) or graph.is_adjacent(a, c):
                continue
            if not self._is_ambiguous(a, b, c):
                return True
        return False

    def _rule2(self, graph: MixedGraph, b: int, c: int) -> bool:
        # b --> a --> c and b --- c
        for a in graph.adjacents(b):
            if a != c and graph.is_directed(b, a) and graph.is_adjacent(a, c) and graph.is_directed(a, c):
                return True
        return False

    def _rule3(self, graph: MixedGraph, b: int, c: int) -> bool:
        # b --- a *-> c, b --- d *-> c, a and d nonadjacent
        candidates = [
            a for a in graph.adjacents(b)
            if a != c and graph.is_undirected(b, a)
            and graph.is_adjacent(a, c) and graph.has_arrow_at(a, c)
        ]
        for a, d in combinations(candidates, 2):
            if not graph.is_adjacent(a, d) and not self._is_ambiguous(a, b, d):
                return True
        return False

    def _rule4(self, graph: MixedGraph, b: int, c: int) -> bool:
        # b --- a --> d --> c, b adjacent to d, a and c nonadjacent
        for a in graph.adjacents(b):
            if a == c or not graph.is_undirected(b, a) or graph.is_adjacent(a, c):
                continue
            if self._is_ambiguous(a, b, c):
                continue
            for d in graph.children(a):
                if d != b and graph.is_adjacent(b, d) and graph.is_adjacent(d, c) and graph.is_directed(d, c):
                    return True
        return False

    def _is_safe(self, graph: MixedGraph, b: int, c: int) -> bool:
        """Orienting b --> c must not add an unshielded collider or a directed cycle."""
        for d in graph.adjacents(c):
            if d != b and graph.has_arrow_at(d, c) and not graph.is_adjacent(d, b):
                return False
        return not _directed_path_exists(graph, c, b)


def _directed_path_exists(graph: MixedGraph, source: int, target: int) -> bool:
    seen = {source}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        if node == target:
            return True
        for child in graph.children(node):
            if child not in seen:
                seen.add(child)
                queue.append(child)
    return False


def meek_closure(graph: MixedGraph, ambiguous: Optional[AbstractSet[Triple]] = None) -> MixedGraph:
    """Apply Meek rules R1-R4 to `graph` in place, respecting ambiguous triples."""
    return MeekRules(ambiguous).orient_implied(graph)
