"""
Tests for structural graph operations and DAG-to-pattern conversion.
"""

from itertools import product

import pytest

from src.graph.exceptions import GraphPreconditionError, InvalidGraphError
from src.graph.mixed_graph import MixedGraph
from src.graph.models import Triple
from src.graph.operations import (
    complete_graph,
    dag_to_cpdag,
    has_directed_cycle,
    orient_collider,
    require_dag,
    skeleton,
    topological_order,
    unshielded_triples,
    v_structures,
    would_create_bidirected,
)


def test_complete_graph():
    """Test that the complete graph has every pair."""
    graph = complete_graph(MixedGraph.from_names(["A", "B", "C", "D"]).nodes)
    assert graph.num_edges == 6
    assert unshielded_triples(graph) == []


def test_unshielded_triples_sorted(graph_factory):
    """Test listing of unshielded triples in canonical order."""
    graph = graph_factory(["A", "B", "C", "D"], undirected=[("A", "B"), ("B", "C"), ("C", "D")])
    assert unshielded_triples(graph) == [Triple.of(0, 1, 2), Triple.of(1, 2, 3)]


def test_orient_collider(graph_factory):
    """Test orienting X --> Y <-- Z."""
    graph = graph_factory(["X", "Y", "Z"], undirected=[("X", "Y"), ("Y", "Z")])
    orient_collider(graph, Triple.of(0, 1, 2))
    assert graph.is_directed(0, 1)
    assert graph.is_directed(2, 1)


def test_orient_collider_requires_unshielded(graph_factory):
    """Test that a shielded triple is rejected."""
    graph = graph_factory(["X", "Y", "Z"], undirected=[("X", "Y"), ("Y", "Z"), ("X", "Z")])
    with pytest.raises(GraphPreconditionError):
        orient_collider(graph, Triple.of(0, 1, 2))


def test_adversarial_chain_produces_bidirected(graph_factory):
    """Test that two colliders sharing an edge leave it bidirected."""
    graph = graph_factory(["W", "X", "Y", "Z"], undirected=[("W", "X"), ("X", "Y"), ("Y", "Z")])
    first, second = Triple.of(0, 1, 2), Triple.of(1, 2, 3)

    orient_collider(graph, first)
    assert would_create_bidirected(graph, second)
    orient_collider(graph, second)
    assert graph.is_bidirected(1, 2)


def test_would_create_bidirected_false_on_fresh_edges(graph_factory):
    """Test the guard on an undirected triple."""
    graph = graph_factory(["X", "Y", "Z"], undirected=[("X", "Y"), ("Y", "Z")])
    assert not would_create_bidirected(graph, Triple.of(0, 1, 2))


def test_cycle_detection(graph_factory):
    """Test directed cycle detection."""
    cyclic = graph_factory(["A", "B", "C"], directed=[("A", "B"), ("B", "C"), ("C", "A")])
    acyclic = graph_factory(["A", "B", "C"], directed=[("A", "B"), ("B", "C"), ("A", "C")])
    assert has_directed_cycle(cyclic)
    assert not has_directed_cycle(acyclic)
    with pytest.raises(InvalidGraphError):
        require_dag(cyclic)


def test_require_dag_rejects_undirected(graph_factory):
    """Test that an undirected edge is not a DAG edge."""
    with pytest.raises(InvalidGraphError):
        require_dag(graph_factory(["A", "B"], undirected=[("A", "B")]))


def test_topological_order(diamond_dag):
    """Test that parents precede children."""
    order = topological_order(diamond_dag)
    position = {node: i for i, node in enumerate(order)}
    for edge in diamond_dag.edges():
        parent, child = (edge.a, edge.b) if diamond_dag.is_directed(edge.a, edge.b) else (edge.b, edge.a)
        assert position[parent] < position[child]


def test_cpdag_of_chain_is_undirected(chain_dag):
    """Test that a chain has no compelled edges."""
    pattern = dag_to_cpdag(chain_dag)
    assert pattern == skeleton(chain_dag)


def test_cpdag_of_collider(collider_dag):
    """Test that a collider keeps its orientation."""
    assert dag_to_cpdag(collider_dag) == collider_dag


def test_cpdag_of_diamond(diamond_dag):
    """Test that only the v-structure at D is compelled."""
    pattern = dag_to_cpdag(diamond_dag)
    assert pattern.is_undirected(0, 1)
    assert pattern.is_undirected(0, 2)
    assert pattern.is_directed(1, 3)
    assert pattern.is_directed(2, 3)


def test_cpdag_propagates_compelled_edges(dag_factory):
    """Test X --> Y <-- Z, Y --> W is fully compelled."""
    dag = dag_factory(["X", "Y", "Z", "W"], [("X", "Y"), ("Z", "Y"), ("Y", "W")])
    assert dag_to_cpdag(dag) == dag


def _equivalent_dags(dag):
    """All DAGs with the same skeleton and v-structures."""
    pairs = list(dag.iter_pairs())
    target = v_structures(dag)
    found = []
    for directions in product((False, True), repeat=len(pairs)):
        candidate = MixedGraph(dag.nodes)
        for (a, b), flip in zip(pairs, directions):
            if flip:
                candidate.add_directed(b, a)
            else:
                candidate.add_directed(a, b)
        if not has_directed_cycle(candidate) and v_structures(candidate) == target:
            found.append(candidate)
    return found


def test_cpdag_matches_equivalence_class(random_dags):
    """Test that an edge is directed in the pattern iff every equivalent DAG agrees on it."""
    checked = 0
    for dag in random_dags:
        if dag.num_edges > 9:
            continue
        pattern = dag_to_cpdag(dag)
        members = _equivalent_dags(dag)
        assert any(member == dag for member in members)
        for a, b in dag.iter_pairs():
            forward = {member.is_directed(a, b) for member in members}
            if forward == {True}:
                assert pattern.is_directed(a, b)
            elif forward == {False}:
                assert pattern.is_directed(b, a)
            else:
                assert pattern.is_undirected(a, b)
        checked += 1
    assert checked > 10
