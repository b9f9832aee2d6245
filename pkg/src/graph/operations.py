"""
Structural operations on mixed graphs: complete graphs, unshielded triples,
collider orientation, cycle checks and DAG-to-pattern conversion.
"""

import logging
from itertools import combinations
from typing import Iterable, List, Sequence, Set

import networkx as nx

from .exceptions import GraphPreconditionError, InvalidGraphError
from .meek import meek_closure
from .mixed_graph import MixedGraph
from .models import Endpoint, NodeId, Triple

logger = logging.getLogger(__name__)


def complete_graph(nodes: Sequence[NodeId]) -> MixedGraph:
    """Complete undirected graph over `nodes`.

    Raises:
        InvalidGraphError: If node names are not unique
    """
    graph = MixedGraph(nodes)
    for x, y in combinations(range(len(nodes)), 2):
        graph.add_undirected(x, y)
    return graph


def unshielded_triples(graph: MixedGraph) -> List[Triple]:
    """Every x - y - z with x, z nonadjacent, whatever the endpoint marks, sorted."""
    triples = []
    for y in range(graph.num_nodes):
        for x, z in combinations(graph.adjacents(y), 2):
            if not graph.is_adjacent(x, z):
                triples.append(Triple.of(x, y, z))
    triples.sort()
    return triples


def _require_unshielded(graph: MixedGraph, triple: Triple) -> None:
    if not (graph.is_adjacent(triple.x, triple.y) and graph.is_adjacent(triple.z, triple.y)):
        raise GraphPreconditionError(
            f"Missing edge in triple ({graph.name(triple.x)}, {graph.name(triple.y)}, "
            f"{graph.name(triple.z)})"
        )
    if graph.is_adjacent(triple.x, triple.z):
        raise GraphPreconditionError(
            f"Triple ({graph.name(triple.x)}, {graph.name(triple.y)}, "
            f"{graph.name(triple.z)}) is shielded"
        )


def would_create_bidirected(graph: MixedGraph, triple: Triple) -> bool:
    """True if orienting x --> y <-- z would put an arrowhead against an existing one.

    Raises:
        GraphPreconditionError: If either edge of the triple is missing
    """
    x, y, z = triple.x, triple.y, triple.z
    return graph.endpoint(y, x) == Endpoint.ARROW or graph.endpoint(y, z) == Endpoint.ARROW


def orient_collider(graph: MixedGraph, triple: Triple) -> MixedGraph:
    """Orient x *-> y <-* z in place and return the graph.

    Only the marks at y change, so an arrowhead already sitting at x or z
    turns the edge bidirected. Callers that must avoid this check
    `would_create_bidirected` first.

    Raises:
        GraphPreconditionError: If the triple is shielded or an edge is missing
    """
    _require_unshielded(graph, triple)
    graph.set_endpoint(triple.x, triple.y, Endpoint.ARROW)
    graph.set_endpoint(triple.z, triple.y, Endpoint.ARROW)
    return graph


def to_networkx(graph: MixedGraph) -> nx.DiGraph:
    """Directed part of the graph (fully directed edges only) as a DiGraph."""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(graph.num_nodes))
    for edge in graph.edges():
        if edge.is_directed:
            if edge.end_at_b == Endpoint.ARROW:
                digraph.add_edge(edge.a, edge.b)
            else:
                digraph.add_edge(edge.b, edge.a)
    return digraph


def has_directed_cycle(graph: MixedGraph) -> bool:
    """True iff following fully directed edges yields a cycle."""
    return not nx.is_directed_acyclic_graph(to_networkx(graph))


def is_dag(graph: MixedGraph) -> bool:
    return all(edge.is_directed for edge in graph.edges()) and not has_directed_cycle(graph)


def require_dag(graph: MixedGraph) -> None:
    """Raises InvalidGraphError unless every edge is directed and there is no cycle."""
    for edge in graph.edges():
        if not edge.is_directed:
            raise InvalidGraphError(
                f"Not a DAG: edge {graph.describe_edge(edge)} is not directed"
            )
    if has_directed_cycle(graph):
        raise InvalidGraphError("Not a DAG: graph has a directed cycle")


def topological_order(dag: MixedGraph) -> List[int]:
    require_dag(dag)
    return list(nx.lexicographical_topological_sort(to_networkx(dag)))


def v_structures(graph: MixedGraph) -> Set[Triple]:
    """Unshielded triples x *-> y <-* z."""
    return {
        triple
        for triple in unshielded_triples(graph)
        if graph.has_arrow_at(triple.x, triple.y) and graph.has_arrow_at(triple.z, triple.y)
    }


def skeleton(graph: MixedGraph) -> MixedGraph:
    """Same adjacencies, all edges undirected."""
    result = MixedGraph(graph.nodes)
    for a, b in graph.iter_pairs():
        result.add_undirected(a, b)
    return result


def dag_to_cpdag(dag: MixedGraph) -> MixedGraph:
    """Pattern of a DAG: skeleton, v-structures oriented, Meek closure applied.

    Raises:
        InvalidGraphError: If the input is cyclic or has an undirected or bidirected edge
    """
    require_dag(dag)
    pattern = skeleton(dag)
    for triple in unshielded_triples(dag):
        if dag.is_directed(triple.x, triple.y) and dag.is_directed(triple.z, triple.y):
            orient_collider(pattern, triple)
    return meek_closure(pattern, set())


def graph_with_directed_edges(nodes: Sequence[NodeId], arcs: Iterable) -> MixedGraph:
    """Convenience constructor from (parent, child) index pairs."""
    graph = MixedGraph(nodes)
    for parent, child in arcs:
        graph.add_directed(parent, child)
    return graph
