import re
from enum import Enum
from typing import Optional, Tuple

from brickforge.exceptions import BadParameter
from brickforge.graphs.core import Graph

DEFAULT_RUNGS = 4


class NamedGraph(str, Enum):
    K4 = "K4"
    PRISM = "Prism"
    PETERSEN = "Petersen"
    WHEEL = "Wheel"
    TRIPLE_LADDER = "TripleLadder"
    LADDER_PLUS = "LadderPlus"


_NAME_PATTERN = re.compile(r"^\s*([A-Za-z0-9]+)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def parse_named(text: str) -> Tuple[NamedGraph, Optional[int]]:
    """Parse ``"Wheel(6)"``, ``"prism"`` and similar into a name and parameter."""
    match = _NAME_PATTERN.match(text)
    if not match:
        raise BadParameter(f"not a graph name: {text!r}")
    token, param = match.group(1), match.group(2)
    for name in NamedGraph:
        if name.value.lower() == token.lower():
            return name, int(param) if param is not None else None
    raise BadParameter(f"unknown graph name: {token!r}")


def named_graph(name, param: Optional[int] = None) -> Graph:
    if isinstance(name, str) and not isinstance(name, NamedGraph):
        parsed, parsed_param = parse_named(name)
        name, param = parsed, param if param is not None else parsed_param
    name = NamedGraph(name)

    if name is NamedGraph.K4:
        return complete_graph(4)
    if name is NamedGraph.PRISM:
        return prism()
    if name is NamedGraph.PETERSEN:
        return petersen()
    if name is NamedGraph.WHEEL:
        if param is None:
            raise BadParameter("Wheel needs its order k")
        return wheel(param)

    rungs = DEFAULT_RUNGS if param is None else param
    if rungs < 1:
        raise BadParameter(f"{name.value} needs at least one round, got {rungs}")
    from brickforge.sequences.recipes import ladder_plus_sequence, triple_ladder_sequence

    if name is NamedGraph.TRIPLE_LADDER:
        return triple_ladder_sequence(rungs).final
    return ladder_plus_sequence(rungs).final


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def prism() -> Graph:
    # triangles 0-1-2 and 3-4-5, rungs i - i+3
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return Graph.from_edges(6, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def wheel(k: int) -> Graph:
    """A cycle on ``k - 1`` vertices plus a hub ``k - 1`` joined to all of them."""
    if k < 4:
        raise BadParameter(f"Wheel(k) needs k >= 4, got {k}")
    rim = k - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges.extend((i, rim) for i in range(rim))
    return Graph.from_edges(k, edges)
