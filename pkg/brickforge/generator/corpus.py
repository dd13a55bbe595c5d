import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

import pandas as pd

from brickforge.bricks import DegreeBoundsReport, is_minimal_brick, verify_paper_bounds
from brickforge.exceptions import NotMinimalBrick
from brickforge.graphs.core import Graph

logger = logging.getLogger(__name__)

ERROR_POLICIES = {"continue", "fail"}

CorpusEntry = Union[Graph, Tuple[str, Graph], Tuple[str, Graph, Tuple[str, ...]]]


@dataclass
class CorpusIssue:
    graph_id: str
    message: str


@dataclass
class CorpusRow:
    graph_id: str
    bounds: DegreeBoundsReport
    identifications: Tuple[str, ...] = ()

    def as_row(self) -> Dict[str, object]:
        row: Dict[str, object] = {"graph_id": self.graph_id}
        row.update(self.bounds.as_row())
        histogram = self.bounds.stats.histogram
        row["histogram"] = " ".join(f"{degree}:{count}" for degree, count in histogram.items())
        row["identifications"] = ",".join(self.identifications)
        return row


@dataclass
class CorpusReport:
    rows: List[CorpusRow] = field(default_factory=list)
    issues: List[CorpusIssue] = field(default_factory=list)

    def record(self, issue: CorpusIssue) -> None:
        self.issues.append(issue)

    @property
    def checked(self) -> int:
        return len(self.rows)

    @property
    def violations(self) -> List[CorpusRow]:
        return [row for row in self.rows if not row.bounds.passed]

    def _min_fraction(self, counts) -> Optional[Fraction]:
        fractions = [Fraction(counts(row.bounds), row.bounds.stats.n) for row in self.rows]
        return min(fractions) if fractions else None

    @property
    def min_deg_le4_fraction(self) -> Optional[Fraction]:
        return self._min_fraction(lambda bounds: bounds.stats.n_deg_le4)

    @property
    def min_deg3_fraction(self) -> Optional[Fraction]:
        return self._min_fraction(lambda bounds: bounds.stats.n_deg3)

    @property
    def max_deg_ge5_fraction(self) -> Optional[Fraction]:
        fractions = [
            1 - Fraction(row.bounds.stats.n_deg_le4, row.bounds.stats.n) for row in self.rows
        ]
        return max(fractions) if fractions else None

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([row.as_row() for row in self.rows])

    def summary_lines(self) -> List[str]:
        def show(value: Optional[Fraction]) -> str:
            return "-" if value is None else str(value)

        return [
            f"checked={self.checked}",
            f"violations={len(self.violations)}",
            f"issues={len(self.issues)}",
            f"min_deg_le4_fraction={show(self.min_deg_le4_fraction)}",
            f"min_deg3_fraction={show(self.min_deg3_fraction)}",
            f"max_deg_ge5_fraction={show(self.max_deg_ge5_fraction)}",
        ]


def verify_corpus(
    graphs: Iterable[CorpusEntry],
    error_policy: str = "continue",
    report: Optional[CorpusReport] = None,
) -> CorpusReport:
    """
    Run the degree bounds over every minimal brick in ``graphs``.

    Entries are graphs, ``(graph_id, graph)`` pairs or
    ``(graph_id, graph, identifications)`` triples. Graphs that are not
    minimal bricks become issues under ``"continue"`` and raise
    NotMinimalBrick under ``"fail"``.
    """
    if error_policy not in ERROR_POLICIES:
        raise ValueError(
            f"error_policy must be one of {sorted(ERROR_POLICIES)}, got {error_policy!r}"
        )
    active_report = report or CorpusReport()

    for index, entry in enumerate(graphs):
        graph_id, graph, flags = _unpack(entry, index)
        minimality = is_minimal_brick(graph)
        if not minimality:
            message = f"not a minimal brick: {minimality.witness}"
            if error_policy == "fail":
                raise NotMinimalBrick(f"{graph_id}: {message}")
            logger.warning(f"skipping {graph_id}: {message}")
            active_report.record(CorpusIssue(graph_id, message))
            continue
        bounds = verify_paper_bounds(graph, assume_minimal=True)
        if flags:
            logger.warning(f"{graph_id} relies on identifications {', '.join(flags)}")
        active_report.rows.append(CorpusRow(graph_id, bounds, tuple(flags)))

    logger.info(
        f"corpus: {active_report.checked} minimal bricks checked, "
        f"{len(active_report.violations)} violations, {len(active_report.issues)} issues"
    )
    return active_report


def _unpack(entry: CorpusEntry, index: int) -> Tuple[str, Graph, Tuple[str, ...]]:
    if isinstance(entry, Graph):
        return str(index), entry, ()
    if len(entry) == 2:
        return entry[0], entry[1], ()
    return entry[0], entry[1], tuple(entry[2])
