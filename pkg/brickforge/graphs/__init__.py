"""Graph core: immutable graphs, edits, validation, I/O and named graphs."""

from .core import (
    Edge,
    Graph,
    VertexId,
    add_edge,
    add_vertices,
    delete_edge,
    delete_vertex,
    delete_vertices,
    is_connected,
    normalize_edge,
    relabel,
)
from .io import (
    GraphFormat,
    format_edgelist,
    format_graph6,
    parse_edgelist,
    parse_graph6,
    read_graph,
    read_graphs,
    write_graph,
    write_graphs,
)
from .named import NamedGraph, named_graph, parse_named
from .validator import GraphValidator, ValidationIssue

__all__ = [
    "Edge",
    "Graph",
    "GraphFormat",
    "GraphValidator",
    "NamedGraph",
    "ValidationIssue",
    "VertexId",
    "add_edge",
    "add_vertices",
    "delete_edge",
    "delete_vertex",
    "delete_vertices",
    "format_edgelist",
    "format_graph6",
    "is_connected",
    "named_graph",
    "normalize_edge",
    "parse_edgelist",
    "parse_graph6",
    "parse_named",
    "read_graph",
    "read_graphs",
    "relabel",
    "write_graph",
    "write_graphs",
]
