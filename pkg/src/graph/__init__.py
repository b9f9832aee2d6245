"""
Mixed graphs with endpoint marks, Meek closure and d-separation.
"""

from .dsep import DSeparationOracle, d_separated
from .exceptions import GraphError, GraphFormatError, GraphPreconditionError, InvalidGraphError
from .meek import MeekRules, meek_closure
from .mixed_graph import MixedGraph
from .models import Edge, Endpoint, NodeId, Triple, pair_key
from .operations import (
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
from .sepsets import SepsetMap
from .text_format import format_graph, parse_graph, read_graph, write_graph

__all__ = [
    "DSeparationOracle",
    "Edge",
    "Endpoint",
    "GraphError",
    "GraphFormatError",
    "GraphPreconditionError",
    "InvalidGraphError",
    "MeekRules",
    "MixedGraph",
    "NodeId",
    "SepsetMap",
    "Triple",
    "complete_graph",
    "d_separated",
    "dag_to_cpdag",
    "format_graph",
    "has_directed_cycle",
    "meek_closure",
    "orient_collider",
    "pair_key",
    "parse_graph",
    "read_graph",
    "require_dag",
    "skeleton",
    "topological_order",
    "unshielded_triples",
    "v_structures",
    "would_create_bidirected",
    "write_graph",
]
