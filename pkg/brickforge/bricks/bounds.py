"""Degree statistics and the published degree bounds for minimal bricks."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional

from brickforge.bricks.checks import is_minimal_brick
from brickforge.canonical import CanonicalForm, canonical_form
from brickforge.exceptions import NotMinimalBrick
from brickforge.graphs.core import Graph
from brickforge.graphs.named import prism, wheel

logger = logging.getLogger(__name__)

# average degree at or above this makes the degree-3 counting argument apply
HIGH_AVERAGE_DEGREE = Fraction(4) + Fraction(7, 9)

DEGREE3_COUNT = "degree3-count"
DEGREE_SUM = "degree-sum"


@dataclass(frozen=True)
class DegreeStats:
    n: int
    m: int
    histogram: Dict[int, int] = field(default_factory=dict)
    n_deg3: int = 0
    n_deg_le4: int = 0
    avg_degree: Fraction = Fraction(0)

    def count(self, degree: int) -> int:
        return self.histogram.get(degree, 0)

    def fraction(self, degree: int) -> Fraction:
        return Fraction(self.count(degree), self.n) if self.n else Fraction(0)


def degree_stats(g: Graph) -> DegreeStats:
    histogram = Counter(g.degrees())
    return DegreeStats(
        n=g.n,
        m=g.m,
        histogram=dict(sorted(histogram.items())),
        n_deg3=histogram.get(3, 0),
        n_deg_le4=sum(count for degree, count in histogram.items() if degree <= 4),
        avg_degree=Fraction(2 * g.m, g.n) if g.n else Fraction(0),
    )


@lru_cache(maxsize=1)
def average_degree_exceptions() -> Dict[CanonicalForm, str]:
    """The four minimal bricks allowed above the average-degree bound."""
    named = {
        "Prism": prism(),
        "Wheel(4)": wheel(4),
        "Wheel(6)": wheel(6),
        "Wheel(8)": wheel(8),
    }
    return {canonical_form(g): name for name, g in named.items()}


@dataclass(frozen=True)
class DegreeBoundsReport:
    stats: DegreeStats
    deg_le4_ok: bool
    deg3_ok: bool
    avg_degree_ok: bool
    edge_count_ok: bool
    exception: Optional[str]
    theorem_case: str

    @property
    def passed(self) -> bool:
        return self.deg_le4_ok and self.deg3_ok and self.avg_degree_ok

    def as_row(self) -> Dict[str, object]:
        return {
            "n": self.stats.n,
            "m": self.stats.m,
            "n_deg3": self.stats.n_deg3,
            "n_deg_le4": self.stats.n_deg_le4,
            "avg_degree": float(self.stats.avg_degree),
            "deg_le4_ok": self.deg_le4_ok,
            "deg3_ok": self.deg3_ok,
            "avg_degree_ok": self.avg_degree_ok,
            "edge_count_ok": self.edge_count_ok,
            "exception": self.exception or "",
            "theorem_case": self.theorem_case,
        }


def verify_paper_bounds(g: Graph, assume_minimal: bool = False) -> DegreeBoundsReport:
    """
    Check the degree bounds every minimal brick satisfies.

    ``assume_minimal`` skips the minimality check for callers that have
    already run it.
    """
    if not assume_minimal:
        report = is_minimal_brick(g)
        if not report:
            raise NotMinimalBrick(f"{g!r} is not a minimal brick: {report.witness}")

    stats = degree_stats(g)
    n, m = stats.n, stats.m
    exception = average_degree_exceptions().get(canonical_form(g))
    within_average = 2 * m <= 5 * n - 7

    result = DegreeBoundsReport(
        stats=stats,
        deg_le4_ok=9 * stats.n_deg_le4 >= n,
        deg3_ok=stats.n_deg3 >= 3,
        avg_degree_ok=within_average or exception is not None,
        edge_count_ok=2 * m <= 5 * n - 14,
        exception=exception,
        theorem_case=DEGREE3_COUNT if stats.avg_degree >= HIGH_AVERAGE_DEGREE else DEGREE_SUM,
    )
    if not result.passed:
        logger.error(f"degree bounds fail on {g!r}: {result.as_row()}")
    return result
