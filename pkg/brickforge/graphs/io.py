"""
Reading and writing graphs.

EdgeList is the primary interchange format: a header line ``n m`` followed
by ``m`` lines ``u v`` (0-indexed, ASCII, LF line endings). Graph6 goes
through networkx's reference codec.
"""

from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, List, Tuple

import networkx as nx

from brickforge.exceptions import GraphParseError
from brickforge.graphs.core import Graph, normalize_edge


class GraphFormat(str, Enum):
    EDGELIST = "edgelist"
    GRAPH6 = "graph6"


GRAPH6_HEADER = ">>graph6<<"


def parse_edgelist(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GraphParseError("empty input", line=1, position=0)

    (n, _), (m, _) = _parse_pair(lines[0], 1)
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(
            f"header announces {m} edges, found {len(body)}",
            line=len(lines) + (1 if len(body) < m else 0),
            position=0,
        )

    edges: List[Tuple[int, int]] = []
    seen: Dict[Tuple[int, int], int] = {}
    for offset, raw in enumerate(body, start=2):
        pair = _parse_pair(raw, offset)
        for w, column in pair:
            if not 0 <= w < n:
                raise GraphParseError(
                    f"vertex {w} out of range 0..{n - 1}", line=offset, position=column
                )
        (u, _), (v, column) = pair
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", line=offset, position=column)
        edge = normalize_edge(u, v)
        if edge in seen:
            raise GraphParseError(
                f"edge {edge} already listed on line {seen[edge]}", line=offset, position=0
            )
        seen[edge] = offset
        edges.append(edge)

    return Graph.from_edges(n, edges)


def _parse_pair(raw: str, line: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Parse ``"a b"`` into ``((a, column_of_a), (b, column_of_b))``."""
    parts = raw.split(" ")
    if len(parts) != 2:
        raise GraphParseError(f"expected two integers, got {raw!r}", line=line, position=0)
    values = []
    position = 0
    for part in parts:
        if not (part.isascii() and part.isdecimal()):
            raise GraphParseError(
                f"not a non-negative integer: {part!r}", line=line, position=position
            )
        values.append((int(part), position))
        position += len(part) + 1
    return values[0], values[1]


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):].strip()
    if not data:
        raise GraphParseError("empty graph6 string", position=0)
    for position, char in enumerate(data):
        if not 63 <= ord(char) <= 126:
            raise GraphParseError(f"invalid graph6 byte {char!r}", position=position)
    try:
        nx_graph = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise GraphParseError(str(exc), position=0) from exc
    return from_networkx(nx_graph)


def format_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def read_graphs(path: str, fmt: GraphFormat = GraphFormat.EDGELIST) -> List[Graph]:
    """Read one EdgeList graph, or every line of a Graph6 file."""
    text = Path(path).read_text(encoding="ascii")
    if GraphFormat(fmt) is GraphFormat.EDGELIST:
        return [parse_edgelist(text)]
    graphs = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphParseError as exc:
            raise GraphParseError(str(exc), line=line_no) from exc
    return graphs


def read_graph(path: str, fmt: GraphFormat = GraphFormat.EDGELIST) -> Graph:
    graphs = read_graphs(path, fmt)
    if len(graphs) != 1:
        raise GraphParseError(f"expected one graph in {path}, found {len(graphs)}")
    return graphs[0]


def write_graph(g: Graph, fmt: GraphFormat = GraphFormat.EDGELIST) -> str:
    if GraphFormat(fmt) is GraphFormat.EDGELIST:
        return format_edgelist(g)
    return format_graph6(g) + "\n"


def write_graphs(graphs: Iterable[Graph], fmt: GraphFormat = GraphFormat.GRAPH6) -> str:
    return "".join(write_graph(g, fmt) for g in graphs)


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(g.vertices())
    nx_graph.add_edges_from(g.edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    nodes = sorted(nx_graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return Graph.from_edges(
        len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges() if u != v)
    )
