"""Immutable simple undirected graphs over dense vertex ids."""

from collections import deque
from dataclasses import dataclass, field
from typing import AbstractSet, Dict, FrozenSet, Iterable, Iterator, List, Sequence, Set, Tuple

from brickforge.exceptions import DuplicateEdge, GraphError, LoopEdge, MissingEdge, MissingVertex

VertexId = int
Edge = Tuple[VertexId, VertexId]


def normalize_edge(u: VertexId, v: VertexId) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    A simple undirected graph on the vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Instances
    are never mutated; every edit returns a new graph.
    """

    adjacency: Tuple[Tuple[VertexId, ...], ...]
    _sets: Tuple[FrozenSet[VertexId], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_sets", tuple(frozenset(row) for row in self.adjacency)
        )

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(tuple(() for _ in range(n)))

    @classmethod
    def from_sets(cls, sets: Sequence[AbstractSet[VertexId]]) -> "Graph":
        """Freeze a list of neighbour sets; symmetry and simplicity are checked."""
        n = len(sets)
        for v, row in enumerate(sets):
            for w in row:
                if w == v:
                    raise LoopEdge(f"loop at vertex {v}")
                if not 0 <= w < n:
                    raise MissingVertex(f"vertex {w} out of range 0..{n - 1}")
                if v not in sets[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        return cls(tuple(tuple(sorted(row)) for row in sets))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        sets: List[Set[VertexId]] = [set() for _ in range(n)]
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if v in sets[u]:
                raise DuplicateEdge(f"edge {normalize_edge(u, v)} listed twice")
            sets[u].add(v)
            sets[v].add(u)
        return cls(tuple(tuple(sorted(row)) for row in sets))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: VertexId) -> Tuple[VertexId, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: VertexId) -> FrozenSet[VertexId]:
        return self._sets[v]

    def degree(self, v: VertexId) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(row) for row in self.adjacency]

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return 0 <= u < self.n and v in self._sets[u]

    def edges(self) -> Iterator[Edge]:
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield (u, v)

    def to_sets(self) -> List[Set[VertexId]]:
        return [set(row) for row in self.adjacency]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertex(n: int, v: VertexId) -> None:
    if not isinstance(v, int) or not 0 <= v < n:
        raise MissingVertex(f"vertex {v} out of range 0..{n - 1}")


def add_edge(g: Graph, u: VertexId, v: VertexId) -> Graph:
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")
    if g.has_edge(u, v):
        raise DuplicateEdge(f"edge {normalize_edge(u, v)} already present")
    sets = g.to_sets()
    sets[u].add(v)
    sets[v].add(u)
    return Graph(tuple(tuple(sorted(row)) for row in sets))


def delete_edge(g: Graph, u: VertexId, v: VertexId) -> Graph:
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if not g.has_edge(u, v):
        raise MissingEdge(f"edge {normalize_edge(u, v)} not present")
    sets = g.to_sets()
    sets[u].discard(v)
    sets[v].discard(u)
    return Graph(tuple(tuple(sorted(row)) for row in sets))


def add_vertices(g: Graph, count: int) -> Graph:
    """Append ``count`` isolated vertices with ids ``n..n+count-1``."""
    return Graph(g.adjacency + tuple(() for _ in range(count)))


def delete_vertices(
    g: Graph, removed: Iterable[VertexId]
) -> Tuple[Graph, Dict[VertexId, VertexId]]:
    """
    Remove vertices and their edges, compacting the remaining ids.

    Returns the new graph and the remap ``old id -> new id`` for every
    surviving vertex; relative order of survivors is preserved.
    """
    gone = set(removed)
    for v in gone:
        _check_vertex(g.n, v)
    remap: Dict[VertexId, VertexId] = {}
    for v in g.vertices():
        if v not in gone:
            remap[v] = len(remap)
    rows = []
    for v in g.vertices():
        if v in gone:
            continue
        rows.append(tuple(remap[w] for w in g.adjacency[v] if w not in gone))
    return Graph(tuple(rows)), remap


def delete_vertex(g: Graph, v: VertexId) -> Tuple[Graph, Dict[VertexId, VertexId]]:
    return delete_vertices(g, (v,))


def relabel(g: Graph, order: Sequence[VertexId]) -> Graph:
    """Return the graph whose vertex ``i`` is vertex ``order[i]`` of ``g``."""
    position = {old: new for new, old in enumerate(order)}
    if len(position) != g.n:
        raise GraphError("relabel order must be a permutation of the vertices")
    rows = [()] * g.n
    for old, new in position.items():
        rows[new] = tuple(sorted(position[w] for w in g.adjacency[old]))
    return Graph(tuple(rows))


def is_connected(g: Graph, without: AbstractSet[VertexId] = frozenset()) -> bool:
    """Whether ``g - without`` is connected (the empty graph counts as connected)."""
    start = next((v for v in g.vertices() if v not in without), None)
    if start is None:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w not in seen and w not in without:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n - len(without)
