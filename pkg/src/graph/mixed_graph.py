"""
Mixed graph with per-edge endpoint marks.

One type covers skeletons, patterns (CPDAGs) and DAGs. Marks are stored per
ordered pair: ``_ends[x][y]`` is the mark at ``y`` on the edge ``x - y``.
"""

import logging
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .exceptions import GraphPreconditionError, InvalidGraphError
from .models import Edge, Endpoint, NodeId, pair_key

logger = logging.getLogger(__name__)


class MixedGraph:
    """Adjacency structure with TAIL/ARROW marks at both ends of every edge.

    At most one edge per pair, no self-loops. Read-only queries may run
    concurrently as long as nobody mutates the graph.
    """

    def __init__(self, nodes: Sequence[NodeId]):
        names = [node.name for node in nodes]
        if len(set(names)) != len(names):
            raise InvalidGraphError("Duplicate node names")
        for position, node in enumerate(nodes):
            if node.index != position:
                raise InvalidGraphError(
                    f"Node indices must be dense 0..n-1, got {node.index} at position {position}"
                )
        self._nodes: List[NodeId] = list(nodes)
        self._by_name: Dict[str, int] = {node.name: node.index for node in nodes}
        self._ends: List[Dict[int, Endpoint]] = [{} for _ in nodes]

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "MixedGraph":
        return cls([NodeId(i, name) for i, name in enumerate(names)])

    @classmethod
    def from_adjacency(cls, nodes: Sequence[NodeId], adjacency: Sequence[Set[int]]) -> "MixedGraph":
        """Build an undirected graph from symmetric adjacency sets."""
        graph = cls(nodes)
        for x, neighbors in enumerate(adjacency):
            for y in neighbors:
                if x < y:
                    graph.add_undirected(x, y)
        return graph

    # Nodes

    @property
    def nodes(self) -> List[NodeId]:
        return list(self._nodes)

    @property
    def num_nodes(self) -> int:
        return len(self._nodes)

    def name(self, index: int) -> str:
        return self._nodes[index].name

    def index_of(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise InvalidGraphError(f"Unknown node: {name}")

    def names(self) -> List[str]:
        return [node.name for node in self._nodes]

    # Edges

    def _check_pair(self, x: int, y: int) -> None:
        if x == y:
            raise InvalidGraphError(f"Self-loop on {self.name(x)}")
        n = len(self._nodes)
        if not (0 <= x < n and 0 <= y < n):
            raise InvalidGraphError(f"Node index out of range: ({x}, {y})")

    def add_edge(self, x: int, y: int, end_at_x: Endpoint, end_at_y: Endpoint) -> None:
        """Add (or replace) the edge x - y with the given marks."""
        self._check_pair(x, y)
        self._ends[x][y] = end_at_y
        self._ends[y][x] = end_at_x

    def add_undirected(self, x: int, y: int) -> None:
        self.add_edge(x, y, Endpoint.TAIL, Endpoint.TAIL)

    def add_directed(self, x: int, y: int) -> None:
        """Add x --> y."""
        self.add_edge(x, y, Endpoint.TAIL, Endpoint.ARROW)

    def remove_edge(self, x: int, y: int) -> None:
        if y not in self._ends[x]:
            raise GraphPreconditionError(f"No edge {self.name(x)} - {self.name(y)}")
        del self._ends[x][y]
        del self._ends[y][x]

    def is_adjacent(self, x: int, y: int) -> bool:
        return y in self._ends[x]

    def adjacents(self, x: int) -> List[int]:
        """Neighbors of x in index order."""
        return sorted(self._ends[x])

    def endpoint(self, x: int, y: int) -> Endpoint:
        """Mark at y on the edge x - y."""
        try:
            return self._ends[x][y]
        except KeyError:
            raise GraphPreconditionError(f"No edge {self.name(x)} - {self.name(y)}")

    def set_endpoint(self, x: int, y: int, mark: Endpoint) -> None:
        """Set the mark at y on the existing edge x - y."""
        if y not in self._ends[x]:
            raise GraphPreconditionError(f"No edge {self.name(x)} - {self.name(y)}")
        self._ends[x][y] = mark

    def has_arrow_at(self, x: int, y: int) -> bool:
        """True if the edge x - y exists and has an arrowhead at y."""
        return self._ends[x].get(y) == Endpoint.ARROW

    def is_directed(self, x: int, y: int) -> bool:
        """True for x --> y."""
        ends = self._ends[x]
        return ends.get(y) == Endpoint.ARROW and self._ends[y][x] == Endpoint.TAIL

    def is_undirected(self, x: int, y: int) -> bool:
        ends = self._ends[x]
        return ends.get(y) == Endpoint.TAIL and self._ends[y][x] == Endpoint.TAIL

    def is_bidirected(self, x: int, y: int) -> bool:
        ends = self._ends[x]
        return ends.get(y) == Endpoint.ARROW and self._ends[y][x] == Endpoint.ARROW

    def parents(self, y: int) -> List[int]:
        """Nodes x with x --> y."""
        return [x for x in self.adjacents(y) if self.is_directed(x, y)]

    def children(self, x: int) -> List[int]:
        return [y for y in self.adjacents(x) if self.is_directed(x, y)]

    def get_edge(self, x: int, y: int) -> Optional[Edge]:
        if y not in self._ends[x]:
            return None
        a, b = pair_key(x, y)
        return Edge(a, b, self._ends[b][a], self._ends[a][b])

    def edges(self) -> List[Edge]:
        """All edges in canonical (a < b) order, sorted."""
        result = []
        for a, ends in enumerate(self._ends):
            for b in sorted(ends):
                if a < b:
                    result.append(Edge(a, b, self._ends[b][a], ends[b]))
        return result

    def skeleton_pairs(self) -> Set[Tuple[int, int]]:
        return {(a, b) for a, ends in enumerate(self._ends) for b in ends if a < b}

    def iter_pairs(self) -> Iterator[Tuple[int, int]]:
        for a, ends in enumerate(self._ends):
            for b in sorted(ends):
                if a < b:
                    yield a, b

    @property
    def num_edges(self) -> int:
        return sum(len(ends) for ends in self._ends) // 2

    def copy(self) -> "MixedGraph":
        clone = MixedGraph.__new__(MixedGraph)
        clone._nodes = list(self._nodes)
        clone._by_name = dict(self._by_name)
        clone._ends = [dict(ends) for ends in self._ends]
        return clone

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self._nodes == other._nodes and self._ends == other._ends

    def __repr__(self) -> str:
        return f"MixedGraph(nodes={self.num_nodes}, edges={self.num_edges})"

    def describe_edge(self, edge: Edge) -> str:
        """Render an edge with the glyphs of the graph text format."""
        left, right = self.name(edge.a), self.name(edge.b)
        if edge.is_undirected:
            return f"{left} --- {right}"
        if edge.is_bidirected:
            return f"{left} <-> {right}"
        if edge.end_at_b == Endpoint.ARROW:
            return f"{left} --> {right}"
        return f"{right} --> {left}"
