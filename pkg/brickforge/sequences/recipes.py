"""
Constructive recipes for the triple ladder and the ladder-plus graph.

Prism labels: top triangle 0, 1, 2, bottom triangle 3, 4, 5 and rungs
0-3, 1-4, 2-5. Every round of the triple ladder stacks two new levels
on three rails: a quasiquartic on two rails, then a quadratic step
on the third.
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from brickforge.exceptions import BadParameter
from brickforge.extensions import ExtensionSpec, Quasiquadratic, Quasiquartic, apply
from brickforge.graphs.core import Graph
from brickforge.sequences.build import BrickSequence, StartGraph, build

logger = logging.getLogger(__name__)


def triple_ladder_specs(rounds: int) -> List[ExtensionSpec]:
    if rounds < 1:
        raise BadParameter(f"the triple ladder needs at least one round, got {rounds}")
    specs: List[ExtensionSpec] = [
        Quasiquartic(u=0, v=3, x=1, y=4),
        # conservative: 2 and 4 are not adjacent after the quartic step
        Quasiquadratic(u=2, v=4, x=8, y=7),
    ]
    alpha, beta, gamma = 7, 9, 2
    n = 12
    for _ in range(rounds - 1):
        a1, a2, b1, b2 = n, n + 1, n + 2, n + 3
        c2 = n + 5
        specs.append(Quasiquartic(u=alpha, v=3, x=beta, y=4))
        specs.append(Quasiquadratic(u=gamma, v=5, x=b1, y=a2))
        alpha, beta, gamma = a2, b2, c2
        n += 6
    return specs


def _cubic_edge(g: Graph, avoid: int) -> Tuple[int, int]:
    for u, v in g.edges():
        if avoid not in (u, v) and g.degree(u) == 3 and g.degree(v) == 3:
            return u, v
    raise BadParameter(f"no edge between cubic vertices avoids {avoid}")


@lru_cache(maxsize=None)
def triple_ladder_sequence(rounds: int) -> BrickSequence:
    sequence = build(StartGraph.PRISM, triple_ladder_specs(rounds))
    logger.debug(f"triple ladder with {rounds} rounds: n={sequence.final.n}")
    return sequence


def ladder_plus_specs(rounds: int) -> List[ExtensionSpec]:
    """
    Quadratic steps with x = y at the first floor(n/5) degree-4 vertices.

    Each step raises its vertex w from degree 4 to 6 while the endpoints of
    the deleted edge uv stay cubic.
    """
    ladder = triple_ladder_sequence(rounds).final
    targets = [w for w in ladder.vertices() if ladder.degree(w) == 4][: ladder.n // 5]
    specs: List[ExtensionSpec] = list(triple_ladder_specs(rounds))
    g = ladder
    for w in targets:
        u, v = _cubic_edge(g, w)
        spec = Quasiquadratic(u=u, v=v, x=w, y=w)
        g, _ = apply(g, spec)
        specs.append(spec)
    return specs


@lru_cache(maxsize=None)
def ladder_plus_sequence(rounds: int) -> BrickSequence:
    sequence = build(StartGraph.PRISM, ladder_plus_specs(rounds))
    logger.debug(f"ladder-plus with {rounds} rounds: n={sequence.final.n}")
    return sequence
