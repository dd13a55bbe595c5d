"""
Exact canonical forms for small graphs.

The search refines an ordered partition to an equitable one, individualizes
a vertex of the first non-singleton cell and recurses. Every leaf is a
discrete partition, hence a labelling; the canonical form is the largest
adjacency code over all leaves. Automorphisms found along the way (two
leaves with equal codes) prune sibling branches they map onto each other.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from brickforge.graphs.core import Graph, relabel

Cells = List[List[int]]
Permutation = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total-order key, equal for two graphs exactly when they are isomorphic."""

    data: bytes

    @property
    def n(self) -> int:
        return int.from_bytes(self.data[:2], "big")

    def hex(self) -> str:
        return self.data.hex()

    def __repr__(self) -> str:
        return f"CanonicalForm(n={self.n}, {self.data[2:].hex() or '-'})"


def canonical_form(g: Graph) -> CanonicalForm:
    order, code = _search(g)
    return CanonicalForm(_pack(g.n, code))


def canonical_labeling(g: Graph) -> Tuple[int, ...]:
    """Vertex order whose induced relabelling is the canonical graph."""
    order, _ = _search(g)
    return order


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def _pack(n: int, code: int) -> bytes:
    bits = n * (n - 1) // 2
    return n.to_bytes(2, "big") + code.to_bytes((bits + 7) // 8, "big")


def _code(g: Graph, order: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        row = g.neighbor_set(order[i])
        for j in range(i + 1, n):
            code = (code << 1) | (order[j] in row)
    return code


def refine(g: Graph, cells: Cells) -> Cells:
    """
    Split cells by neighbour counts until the partition is equitable.

    The first cell (in partition order) that splits some other cell is used
    as the splitter, and split fragments are ordered by count, so the result
    does not depend on vertex labels.
    """
    cells = [list(cell) for cell in cells]
    while True:
        split = _split_once(g, cells)
        if split is None:
            return cells
        cells = split


def _split_once(g: Graph, cells: Cells) -> Optional[Cells]:
    for splitter in cells:
        members = frozenset(splitter)
        result: Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                result.append(cell)
                continue
            groups: Dict[int, List[int]] = {}
            for v in cell:
                groups.setdefault(len(g.neighbor_set(v) & members), []).append(v)
            if len(groups) > 1:
                changed = True
                result.extend(groups[key] for key in sorted(groups))
            else:
                result.append(cell)
        if changed:
            return result
    return None


class _Search:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.best_code: Optional[int] = None
        self.best_order: Optional[Permutation] = None
        self.automorphisms: List[Permutation] = []

    def run(self) -> Tuple[Permutation, int]:
        if self.g.n == 0:
            return (), 0
        self._visit([list(self.g.vertices())], ())
        return self.best_order, self.best_code

    def _visit(self, cells: Cells, path: Tuple[int, ...]) -> None:
        cells = refine(self.g, cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            self._leaf(tuple(cell[0] for cell in cells))
            return

        explored: List[int] = []
        for v in sorted(cells[target]):
            if explored and self._equivalent(v, explored, path):
                continue
            explored.append(v)
            rest = [w for w in cells[target] if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self._visit(child, path + (v,))

    def _leaf(self, order: Permutation) -> None:
        code = _code(self.g, order)
        if self.best_code is None or code > self.best_code:
            self.best_code = code
            self.best_order = order
        elif code == self.best_code:
            sigma = [0] * self.g.n
            for a, b in zip(self.best_order, order):
                sigma[a] = b
            self.automorphisms.append(tuple(sigma))

    def _equivalent(self, v: int, explored: List[int], path: Tuple[int, ...]) -> bool:
        """Whether ``v`` shares an orbit with an explored sibling under the path stabilizer."""
        usable = [
            sigma for sigma in self.automorphisms if all(sigma[p] == p for p in path)
        ]
        if not usable:
            return False
        orbit = _orbit(v, usable)
        return any(w in orbit for w in explored)


def _orbit(v: int, generators: Sequence[Permutation]) -> FrozenSet[int]:
    seen = {v}
    stack = [v]
    while stack:
        w = stack.pop()
        for sigma in generators:
            image = sigma[w]
            if image not in seen:
                seen.add(image)
                stack.append(image)
    return frozenset(seen)


def _search(g: Graph) -> Tuple[Permutation, int]:
    return _Search(g).run()
