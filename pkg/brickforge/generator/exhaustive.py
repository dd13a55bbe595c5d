"""Independent oracle: every labelled graph on n vertices, filtered to minimal bricks."""

import logging
from itertools import combinations
from typing import Dict, FrozenSet, List, Tuple

from tqdm import tqdm

from brickforge.bricks import is_minimal_brick
from brickforge.canonical import CanonicalForm, canonical_form
from brickforge.exceptions import TooLarge
from brickforge.graphs.core import Graph

logger = logging.getLogger(__name__)

QUICK_ORDERS = (4, 6)
LONG_ORDERS = (8,)


def _graph_from_mask(n: int, pairs: List[Tuple[int, int]], mask: int) -> Graph:
    rows = [[] for _ in range(n)]
    for bit, (u, v) in enumerate(pairs):
        if mask >> bit & 1:
            rows[u].append(v)
            rows[v].append(u)
    return Graph(tuple(tuple(sorted(row)) for row in rows))


def exhaustive_minimal_bricks(
    n: int, progress: bool = False, allow_long: bool = False
) -> FrozenSet[CanonicalForm]:
    """
    Canonical forms of all minimal bricks on exactly ``n`` vertices.

    Odd ``n`` gives the empty set. ``n = 8`` sweeps 2^28 labelled graphs
    and needs ``allow_long``; larger orders are refused.
    """
    if n % 2:
        return frozenset()
    if n not in QUICK_ORDERS and not (allow_long and n in LONG_ORDERS):
        raise TooLarge(
            f"exhaustive sweep supports n in {QUICK_ORDERS} (8 with allow_long), got {n}"
        )

    pairs = list(combinations(range(n), 2))
    incident = [[bit for bit, pair in enumerate(pairs) if v in pair] for v in range(n)]
    min_edges = 3 * n // 2
    candidates: Dict[CanonicalForm, Graph] = {}
    total = 1 << len(pairs)
    for mask in tqdm(range(total), desc=f"labelled graphs n={n}", disable=not progress):
        if bin(mask).count("1") < min_edges:
            continue
        if any(sum(mask >> bit & 1 for bit in bits) < 3 for bits in incident):
            continue
        graph = _graph_from_mask(n, pairs, mask)
        candidates.setdefault(canonical_form(graph), graph)

    logger.info(f"n={n}: {len(candidates)} isomorphism classes with minimum degree >= 3")
    found = frozenset(form for form, graph in candidates.items() if is_minimal_brick(graph))
    logger.info(f"n={n}: {len(found)} minimal bricks")
    return found

