from dataclasses import dataclass
from typing import Optional, Union

from brickforge.graphs.core import Edge, Graph, delete_edge, is_connected


@dataclass(frozen=True)
class BadPair:
    """``G - u - v`` has no perfect matching."""

    u: int
    v: int

    def __str__(self) -> str:
        return f"BadPair({self.u}, {self.v})"


@dataclass(frozen=True)
class CutPair:
    """``G - w - z`` is disconnected."""

    w: int
    z: int

    def __str__(self) -> str:
        return f"CutPair({self.w}, {self.z})"


@dataclass(frozen=True)
class DeletableEdge:
    """``G - e`` is still a brick."""

    edge: Edge

    def __str__(self) -> str:
        return f"DeletableEdge({self.edge[0]}, {self.edge[1]})"


@dataclass(frozen=True)
class TooSmall:
    n: int

    def __str__(self) -> str:
        return f"TooSmall(n={self.n})"


Witness = Union[BadPair, CutPair, DeletableEdge, TooSmall]


@dataclass(frozen=True)
class CertificateReport:
    check: str
    verdict: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.verdict

    def describe(self) -> str:
        if self.verdict:
            return f"{self.check}: yes"
        return f"{self.check}: no ({self.witness})"


def recheck(g: Graph, report: CertificateReport) -> bool:
    """Re-run the sub-check a witness pinpoints; True when the failure reproduces."""
    from brickforge.bricks.checks import is_brick
    from brickforge.matching import has_perfect_matching

    witness = report.witness
    if report.verdict:
        return witness is None
    if isinstance(witness, BadPair):
        return not has_perfect_matching(g, excluded={witness.u, witness.v})
    if isinstance(witness, CutPair):
        return not is_connected(g, without={witness.w, witness.z})
    if isinstance(witness, DeletableEdge):
        return bool(is_brick(delete_edge(g, *witness.edge)))
    if isinstance(witness, TooSmall):
        return witness.n == g.n
    return False
