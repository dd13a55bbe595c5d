"""
Recognition of bicritical, 3-connected, brick and minimal-brick graphs.

Every check scans its candidates in lexicographic order and reports the
first failure, so witnesses are deterministic.
"""

import logging
from itertools import combinations

from brickforge.bricks.certificates import (
    BadPair,
    CertificateReport,
    CutPair,
    DeletableEdge,
    TooSmall,
)
from brickforge.graphs.core import Graph, delete_edge, is_connected
from brickforge.matching import has_perfect_matching

logger = logging.getLogger(__name__)


def is_bicritical(g: Graph) -> CertificateReport:
    if g.n < 2:
        return CertificateReport("bicritical", False, TooSmall(g.n))
    if g.n % 2:
        return CertificateReport("bicritical", False, BadPair(0, 1))
    for u, v in combinations(g.vertices(), 2):
        if not has_perfect_matching(g, excluded={u, v}):
            return CertificateReport("bicritical", False, BadPair(u, v))
    return CertificateReport("bicritical", True)


def is_three_connected(g: Graph) -> CertificateReport:
    if g.n < 4:
        return CertificateReport("3-connected", False, TooSmall(g.n))
    for w, z in combinations(g.vertices(), 2):
        if not is_connected(g, without={w, z}):
            return CertificateReport("3-connected", False, CutPair(w, z))
    return CertificateReport("3-connected", True)


def is_brick(g: Graph) -> CertificateReport:
    # connectivity first: it is the cheaper scan
    connectivity = is_three_connected(g)
    if not connectivity:
        return CertificateReport("brick", False, connectivity.witness)
    bicritical = is_bicritical(g)
    if not bicritical:
        return CertificateReport("brick", False, bicritical.witness)
    return CertificateReport("brick", True)


def is_minimal_brick(g: Graph) -> CertificateReport:
    brick = is_brick(g)
    if not brick:
        return CertificateReport("minimal brick", False, brick.witness)
    for u, v in g.edges():
        # G - e has a vertex of degree 2, whose two neighbours then cut it off
        if g.degree(u) == 3 or g.degree(v) == 3:
            continue
        if is_brick(delete_edge(g, u, v)):
            logger.debug(f"edge ({u}, {v}) is deletable in {g!r}")
            return CertificateReport("minimal brick", False, DeletableEdge((u, v)))
    return CertificateReport("minimal brick", True)
