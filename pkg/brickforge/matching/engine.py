"""
Perfect-matching existence via Edmonds' blossom algorithm.

The search keeps, per vertex, its mate, its parent in the alternating
forest and the base of the blossom containing it; blossoms are contracted
implicitly by relabelling bases.
"""

from collections import deque
from dataclasses import dataclass
from typing import AbstractSet, FrozenSet, List, Optional, Sequence, Tuple

from brickforge.exceptions import SameVertex
from brickforge.graphs.core import Edge, Graph, delete_edge, delete_vertices, normalize_edge

UNMATCHED = -1


@dataclass(frozen=True)
class Matching:
    edges: FrozenSet[Edge]

    @classmethod
    def from_mates(cls, mates: Sequence[int]) -> "Matching":
        return cls(
            frozenset(
                normalize_edge(v, w)
                for v, w in enumerate(mates)
                if w != UNMATCHED and v < w
            )
        )

    def __len__(self) -> int:
        return len(self.edges)

    def is_valid(self, g: Graph) -> bool:
        covered = set()
        for u, v in self.edges:
            if not g.has_edge(u, v) or u in covered or v in covered:
                return False
            covered.update((u, v))
        return True

    def is_perfect(self, g: Graph) -> bool:
        return self.is_valid(g) and 2 * len(self.edges) == g.n


class BlossomMatcher:
    """
    Maximum-cardinality matching on ``g`` restricted to the vertices not in
    ``excluded`` and to the edges other than ``forbidden``.
    """

    def __init__(
        self,
        g: Graph,
        excluded: AbstractSet[int] = frozenset(),
        forbidden: Optional[Edge] = None,
    ) -> None:
        self.g = g
        self.n = g.n
        self.excluded = excluded
        self.forbidden = normalize_edge(*forbidden) if forbidden else None
        self.mate: List[int] = [UNMATCHED] * self.n
        self.parent: List[int] = [UNMATCHED] * self.n
        self.base: List[int] = list(range(self.n))
        self.used: List[bool] = [False] * self.n
        self.blossom: List[bool] = [False] * self.n

    def _neighbors(self, v: int):
        for w in self.g.neighbors(v):
            if w in self.excluded:
                continue
            if self.forbidden and normalize_edge(v, w) == self.forbidden:
                continue
            yield w

    def _greedy(self) -> None:
        for v in self.g.vertices():
            if v in self.excluded or self.mate[v] != UNMATCHED:
                continue
            for w in self._neighbors(v):
                if self.mate[w] == UNMATCHED:
                    self.mate[v] = w
                    self.mate[w] = v
                    break

    def _lca(self, a: int, b: int) -> int:
        seen = [False] * self.n
        while True:
            a = self.base[a]
            seen[a] = True
            if self.mate[a] == UNMATCHED:
                break
            a = self.parent[self.mate[a]]
        while True:
            b = self.base[b]
            if seen[b]:
                return b
            b = self.parent[self.mate[b]]

    def _mark_path(self, v: int, b: int, child: int) -> None:
        while self.base[v] != b:
            self.blossom[self.base[v]] = True
            self.blossom[self.base[self.mate[v]]] = True
            self.parent[v] = child
            child = self.mate[v]
            v = self.parent[self.mate[v]]

    def _find_path(self, root: int) -> int:
        n = self.n
        self.used = [False] * n
        self.parent = [UNMATCHED] * n
        self.base = list(range(n))
        self.used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in self._neighbors(v):
                if self.base[v] == self.base[to] or self.mate[v] == to:
                    continue
                if to == root or (
                    self.mate[to] != UNMATCHED and self.parent[self.mate[to]] != UNMATCHED
                ):
                    current = self._lca(v, to)
                    self.blossom = [False] * n
                    self._mark_path(v, current, to)
                    self._mark_path(to, current, v)
                    for i in range(n):
                        if self.blossom[self.base[i]]:
                            self.base[i] = current
                            if not self.used[i]:
                                self.used[i] = True
                                queue.append(i)
                elif self.parent[to] == UNMATCHED:
                    self.parent[to] = v
                    if self.mate[to] == UNMATCHED:
                        return to
                    nxt = self.mate[to]
                    self.used[nxt] = True
                    queue.append(nxt)
        return UNMATCHED

    def _augment(self, end: int) -> None:
        v = end
        while v != UNMATCHED:
            pv = self.parent[v]
            ppv = self.mate[pv]
            self.mate[v] = pv
            self.mate[pv] = v
            v = ppv

    def run(self, stop_on_exposed: bool = False) -> List[int]:
        """
        Grow the matching to maximum cardinality and return the mate array.

        With ``stop_on_exposed`` the search ends at the first root left
        exposed; some maximum matching then misses that root, so the graph
        has no perfect matching.
        """
        self._greedy()
        for root in self.g.vertices():
            if root in self.excluded or self.mate[root] != UNMATCHED:
                continue
            end = self._find_path(root)
            if end == UNMATCHED:
                if stop_on_exposed:
                    break
                continue
            self._augment(end)
        return self.mate


def maximum_matching(g: Graph) -> Matching:
    return Matching.from_mates(BlossomMatcher(g).run())


def perfect_matching(
    g: Graph,
    excluded: AbstractSet[int] = frozenset(),
    forbidden: Optional[Edge] = None,
) -> Optional[Matching]:
    """A perfect matching of ``g - excluded`` avoiding ``forbidden``, or None."""
    remaining = g.n - len(excluded)
    if remaining % 2:
        return None
    mates = BlossomMatcher(g, excluded, forbidden).run(stop_on_exposed=True)
    if any(mates[v] == UNMATCHED for v in g.vertices() if v not in excluded):
        return None
    return Matching.from_mates(mates)


def has_perfect_matching(g: Graph, excluded: AbstractSet[int] = frozenset()) -> bool:
    return perfect_matching(g, excluded) is not None


def has_pm_avoiding(g: Graph, forbidden: Edge, removed: Tuple[int, int]) -> bool:
    """Whether ``g - removed`` has a perfect matching that does not use ``forbidden``."""
    a, b = removed
    if a == b:
        raise SameVertex(f"removed vertices must be distinct, got {a} twice")
    reduced = g
    if g.has_edge(*forbidden):
        reduced = delete_edge(g, *forbidden)
    reduced, _ = delete_vertices(reduced, (a, b))
    return has_perfect_matching(reduced)
