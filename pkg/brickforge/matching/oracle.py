from typing import AbstractSet, List, Optional

from brickforge.exceptions import TooLarge
from brickforge.graphs.core import Edge, Graph

ORACLE_LIMIT = 16


def brute_force_pm(g: Graph) -> bool:
    """Exhaustive perfect-matching search; the reference for the blossom engine."""
    return brute_force_matching(g) is not None


def brute_force_matching(
    g: Graph, excluded: AbstractSet[int] = frozenset()
) -> Optional[List[Edge]]:
    if g.n > ORACLE_LIMIT:
        raise TooLarge(f"brute-force matching limited to n <= {ORACLE_LIMIT}, got {g.n}")
    free = [v not in excluded for v in g.vertices()]
    if sum(free) % 2:
        return None
    chosen: List[Edge] = []
    return chosen if _extend(g, free, chosen) else None


def _extend(g: Graph, free: List[bool], chosen: List[Edge]) -> bool:
    v = next((i for i, is_free in enumerate(free) if is_free), None)
    if v is None:
        return True
    free[v] = False
    for w in g.neighbors(v):
        if not free[w]:
            continue
        free[w] = False
        chosen.append((v, w))
        if _extend(g, free, chosen):
            return True
        chosen.pop()
        free[w] = True
    free[v] = True
    return False
