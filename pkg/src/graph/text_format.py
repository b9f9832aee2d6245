"""
Plain-text graph format shared by true graphs and search results.

    Graph Nodes:
    X1;X2;X3

    Graph Edges:
    1. X1 --> X2
    2. X2 --- X3

    Ambiguous triples:
    X1,X2,X3

The "Ambiguous triples:" section is written only when nonempty.
"""

import logging
import re
from pathlib import Path
from typing import AbstractSet, Optional, Set, Tuple, Union

from .exceptions import GraphFormatError
from .mixed_graph import MixedGraph
from .models import Endpoint, Triple

logger = logging.getLogger(__name__)

NODES_HEADER = "Graph Nodes:"
EDGES_HEADER = "Graph Edges:"
AMBIGUOUS_HEADER = "Ambiguous triples:"

_EDGE_LINE = re.compile(r"^\s*\d+\.\s+(\S+)\s+(-->|---|<->)\s+(\S+)\s*$")


def format_graph(graph: MixedGraph, ambiguous: Optional[AbstractSet[Triple]] = None) -> str:
    lines = [NODES_HEADER, ";".join(graph.names()), "", EDGES_HEADER]
    for number, edge in enumerate(graph.edges(), start=1):
        lines.append(f"{number}. {graph.describe_edge(edge)}")
    if ambiguous:
        lines.extend(["", AMBIGUOUS_HEADER])
        for triple in sorted(ambiguous):
            lines.append(f"{graph.name(triple.x)},{graph.name(triple.y)},{graph.name(triple.z)}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Tuple[MixedGraph, Set[Triple]]:
    """Parse the text format into a graph plus its ambiguous triples.

    Raises:
        GraphFormatError: On a missing section, unknown node or malformed line
    """
    lines = [line.rstrip() for line in text.splitlines()]
    try:
        nodes_at = lines.index(NODES_HEADER)
        edges_at = lines.index(EDGES_HEADER)
    except ValueError:
        raise GraphFormatError(f"Expected '{NODES_HEADER}' and '{EDGES_HEADER}' sections")

    node_line = next((line for line in lines[nodes_at + 1:edges_at] if line.strip()), "")
    names = [name for name in node_line.split(";") if name]
    graph = MixedGraph.from_names(names)

    ambiguous_at = lines.index(AMBIGUOUS_HEADER) if AMBIGUOUS_HEADER in lines else len(lines)
    for line_number, line in enumerate(lines[edges_at + 1:ambiguous_at], start=edges_at + 2):
        if not line.strip():
            continue
        match = _EDGE_LINE.match(line)
        if not match:
            raise GraphFormatError(f"Malformed edge on line {line_number}: {line!r}")
        left, glyph, right = match.groups()
        x, y = _lookup(graph, left, line_number), _lookup(graph, right, line_number)
        if glyph == "-->":
            graph.add_edge(x, y, Endpoint.TAIL, Endpoint.ARROW)
        elif glyph == "<->":
            graph.add_edge(x, y, Endpoint.ARROW, Endpoint.ARROW)
        else:
            graph.add_edge(x, y, Endpoint.TAIL, Endpoint.TAIL)

    ambiguous: Set[Triple] = set()
    for line_number, line in enumerate(lines[ambiguous_at + 1:], start=ambiguous_at + 2):
        if not line.strip():
            continue
        parts = [part.strip() for part in line.split(",")]
        if len(parts) != 3:
            raise GraphFormatError(f"Malformed triple on line {line_number}: {line!r}")
        x, y, z = (_lookup(graph, part, line_number) for part in parts)
        ambiguous.add(Triple.of(x, y, z))
    return graph, ambiguous


def _lookup(graph: MixedGraph, name: str, line_number: int) -> int:
    try:
        return graph.index_of(name)
    except Exception:
        raise GraphFormatError(f"Unknown node {name!r} on line {line_number}")


def write_graph(
    graph: MixedGraph,
    path: Union[str, Path],
    ambiguous: Optional[AbstractSet[Triple]] = None,
) -> None:
    Path(path).write_text(format_graph(graph, ambiguous), encoding="utf-8")
    logger.info("Wrote graph with %d edges to %s", graph.num_edges, path)


def read_graph(path: Union[str, Path]) -> Tuple[MixedGraph, Set[Triple]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"Cannot read graph file {path}: {e}")
    return parse_graph(text)
