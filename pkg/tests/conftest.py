import pytest

from src.graph.mixed_graph import MixedGraph
from src.graph.operations import graph_with_directed_edges
from src.graph.models import Endpoint, NodeId
from src.models.base import RandomGraphConfig
from src.sim.random_graph import random_dag
from src.sim.sem import parameterize, simulate


def make_dag(names, arcs):
    """DAG over `names` with (parent, child) name pairs."""
    nodes = [NodeId(i, name) for i, name in enumerate(names)]
    index = {name: i for i, name in enumerate(names)}
    return graph_with_directed_edges(nodes, [(index[a], index[b]) for a, b in arcs])


def make_graph(names, undirected=(), directed=(), bidirected=()):
    """Mixed graph from name pairs per edge kind."""
    graph = MixedGraph.from_names(names)
    for a, b in undirected:
        graph.add_undirected(graph.index_of(a), graph.index_of(b))
    for a, b in directed:
        graph.add_directed(graph.index_of(a), graph.index_of(b))
    for a, b in bidirected:
        x, y = graph.index_of(a), graph.index_of(b)
        graph.add_edge(x, y, Endpoint.ARROW, Endpoint.ARROW)
    return graph


@pytest.fixture
def chain_dag():
    """X --> Y --> Z."""
    return make_dag(["X", "Y", "Z"], [("X", "Y"), ("Y", "Z")])


@pytest.fixture
def collider_dag():
    """X --> Y <-- Z."""
    return make_dag(["X", "Y", "Z"], [("X", "Y"), ("Z", "Y")])


@pytest.fixture
def diamond_dag():
    """A --> B, A --> C, B --> D, C --> D."""
    return make_dag(["A", "B", "C", "D"], [("A", "B"), ("A", "C"), ("B", "D"), ("C", "D")])


@pytest.fixture
def random_dags():
    """Small random DAGs for oracle sweeps."""
    dags = []
    for seed in range(200):
        nodes = 3 + seed % 8
        dags.append(random_dag(RandomGraphConfig(num_nodes=nodes, avg_degree=min(3.0, nodes - 1), seed=seed)))
    return dags


@pytest.fixture
def collider_dataset(collider_dag):
    """2000 cases from a linear-Gaussian model of the collider."""
    model = parameterize(collider_dag, seed=11)
    return simulate(model, 2000, seed=12)


@pytest.fixture
def medium_problem():
    """30-node DAG of average degree 2 with 1000 cases."""
    dag = random_dag(RandomGraphConfig(num_nodes=30, avg_degree=2.0, seed=5))
    return dag, simulate(parameterize(dag, seed=6), 1000, seed=7)


@pytest.fixture
def dag_factory():
    return make_dag


@pytest.fixture
def graph_factory():
    return make_graph
