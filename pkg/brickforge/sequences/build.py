"""
Brick-on-brick sequences and their density accounting.

A sequence keeps every intermediate graph. Vertex ids persist along the
sequence (extensions only append), so a vertex created at step i carries
the same id in every later graph.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Tuple

from brickforge.bricks import degree_stats, is_brick, is_minimal_brick
from brickforge.exceptions import (
    LemmaViolation,
    NotABrick,
    PreconditionUnmet,
    SpecInvariantViolated,
)
from brickforge.extensions import ExtensionClass, ExtensionRecord, ExtensionSpec, apply
from brickforge.graphs.core import Graph
from brickforge.graphs.named import complete_graph, prism

logger = logging.getLogger(__name__)


class StartGraph(str, Enum):
    K4 = "K4"
    PRISM = "PRISM"

    def graph(self) -> Graph:
        return complete_graph(4) if self is StartGraph.K4 else prism()


@dataclass(frozen=True)
class BrickSequence:
    start: StartGraph
    steps: Tuple[ExtensionRecord, ...] = ()
    graphs: Tuple[Graph, ...] = ()

    def __post_init__(self) -> None:
        if not self.graphs:
            object.__setattr__(self, "graphs", (self.start.graph(),))
        if len(self.graphs) != len(self.steps) + 1:
            raise ValueError(
                f"a sequence with {len(self.steps)} steps needs {len(self.steps) + 1} graphs"
            )

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def final(self) -> Graph:
        return self.graphs[-1]

    @property
    def specs(self) -> Tuple[ExtensionSpec, ...]:
        return tuple(record.spec for record in self.steps)

    def extended(self, record: ExtensionRecord, graph: Graph) -> "BrickSequence":
        """Append an already applied and checked step."""
        return BrickSequence(self.start, self.steps + (record,), self.graphs + (graph,))


def build(start, specs: Iterable[ExtensionSpec]) -> BrickSequence:
    """
    Apply ``specs`` in turn from the start graph, brick-checking each result.

    Raises NotABrick with the 1-based step index when an intermediate graph
    is not a brick, and SpecInvariantViolated naming the step when a spec
    does not validate against its pre-graph.
    """
    sequence = BrickSequence(StartGraph(start))
    for step, spec in enumerate(specs, start=1):
        try:
            graph, record = apply(sequence.final, spec)
        except SpecInvariantViolated as exc:
            raise SpecInvariantViolated(exc.clause, f"step {step}: {exc}") from exc
        report = is_brick(graph)
        if not report:
            logger.error(f"step {step} ({spec.variant.value}) left the brick class: {report.witness}")
            raise NotABrick(step, report.witness)
        sequence = sequence.extended(record, graph)
    logger.debug(f"built sequence from {sequence.start.value} with {len(sequence)} steps")
    return sequence


@dataclass(frozen=True)
class SequenceStats:
    nu0: int = 0
    nu1: int = 0
    nu2: int = 0
    nu3: int = 0
    nu2c: int = 0
    eps0: int = 0
    eps1: int = 0
    eps2: int = 0
    eps3: int = 0
    eps2c: int = 0

    @property
    def n(self) -> int:
        return self.nu0 + self.nu1 + self.nu2 + self.nu3

    @property
    def m(self) -> int:
        return self.eps0 + self.eps1 + self.eps2 + self.eps3

    def relation_issues(self) -> List[str]:
        issues = []
        if 2 * self.eps0 != 3 * self.nu0:
            issues.append(f"eps0={self.eps0} != 3/2 * nu0={self.nu0}")
        if 2 * self.eps1 > 3 * self.nu1:
            issues.append(f"eps1={self.eps1} > 3/2 * nu1={self.nu1}")
        if self.eps2 - self.eps2c != 2 * (self.nu2 - self.nu2c):
            issues.append(
                f"eps2-eps2c={self.eps2 - self.eps2c} != 2 * (nu2-nu2c)={2 * (self.nu2 - self.nu2c)}"
            )
        if 2 * self.eps2c != 5 * self.nu2c:
            issues.append(f"eps2c={self.eps2c} != 5/2 * nu2c={self.nu2c}")
        if self.eps3 > 2 * self.nu3:
            issues.append(f"eps3={self.eps3} > 2 * nu3={self.nu3}")
        return issues

    def as_lines(self) -> List[str]:
        return [f"{name}={value}" for name, value in self.as_dict().items()]

    def as_dict(self) -> Dict[str, int]:
        return {
            "nu0": self.nu0,
            "nu1": self.nu1,
            "nu2": self.nu2,
            "nu2c": self.nu2c,
            "nu3": self.nu3,
            "eps0": self.eps0,
            "eps1": self.eps1,
            "eps2": self.eps2,
            "eps2c": self.eps2c,
            "eps3": self.eps3,
        }


def stats(seq: BrickSequence) -> SequenceStats:
    """Per-class vertex and edge gains; raises LemmaViolation if the accounting breaks."""
    start = seq.graphs[0]
    totals = {"nu0": start.n, "eps0": start.m}
    keys = {
        ExtensionClass.LINEAR: ("nu1", "eps1"),
        ExtensionClass.QUADRATIC: ("nu2", "eps2"),
        ExtensionClass.QUARTIC: ("nu3", "eps3"),
    }
    for record in seq.steps:
        nu, eps = keys[record.extension_class]
        totals[nu] = totals.get(nu, 0) + record.delta_n
        totals[eps] = totals.get(eps, 0) + record.delta_m
        if record.is_conservative_quadratic:
            totals["nu2c"] = totals.get("nu2c", 0) + record.delta_n
            totals["eps2c"] = totals.get("eps2c", 0) + record.delta_m
    result = SequenceStats(**totals)

    final = seq.final
    issues = result.relation_issues()
    if (result.n, result.m) != (final.n, final.m):
        issues.insert(0, f"sums ({result.n}, {result.m}) != endpoint ({final.n}, {final.m})")
    if issues:
        detail = "; ".join(issues)
        logger.error(f"density accounting broken: {detail}")
        raise LemmaViolation(f"density accounting broken: {detail}")
    return result


def _require_high_degree_minimal(seq: BrickSequence, delta: Fraction) -> Fraction:
    delta = Fraction(delta)
    final = seq.final
    average = Fraction(2 * final.m, final.n)
    if delta <= 0:
        raise PreconditionUnmet(f"delta must be positive, got {delta}")
    if average < 4 + delta:
        raise PreconditionUnmet(f"average degree {average} is below 4 + {delta}")
    report = is_minimal_brick(final)
    if not report:
        raise PreconditionUnmet(f"endpoint is not a minimal brick: {report.witness}")
    return average


def check_lotsofquad(seq: BrickSequence, delta) -> bool:
    """Whether the conservative-quadratic steps added at least ``delta * n`` vertices."""
    delta = Fraction(delta)
    _require_high_degree_minimal(seq, delta)
    result = stats(seq)
    holds = result.nu2c >= delta * seq.final.n
    if not holds:
        logger.error(f"nu2c={result.nu2c} < {delta} * {seq.final.n} on a minimal brick endpoint")
    return holds


@dataclass(frozen=True)
class HighAvgDegreeReport:
    delta: Fraction
    n: int
    avg_degree: Fraction
    n_deg3: int
    required: Fraction
    q: FrozenSet[int] = field(default_factory=frozenset)
    q1: FrozenSet[int] = field(default_factory=frozenset)
    q2: FrozenSet[int] = field(default_factory=frozenset)

    @property
    def holds(self) -> bool:
        return self.n_deg3 >= self.required


def check_highavdeg(seq: BrickSequence, delta) -> HighAvgDegreeReport:
    """
    Degree-3 count of a high-average-degree minimal endpoint against (4*delta - 3)*n.

    Also splits the vertices created by conservative-quadratic steps into
    those some later step uses in its fundament (q1) and the rest (q2);
    q2 vertices keep degree 3 to the end.
    """
    delta = Fraction(delta)
    average = _require_high_degree_minimal(seq, delta)
    final = seq.final

    created: Dict[int, int] = {}
    used = set()
    for index, record in enumerate(seq.steps):
        used.update(v for v in record.fundament if v in created)
        if record.is_conservative_quadratic:
            for v in record.new_vertices:
                created[v] = index
    q = frozenset(created)
    q1 = frozenset(used)
    q2 = q - q1
    wrong = sorted(v for v in q2 if final.degree(v) != 3)
    if wrong:
        logger.error(f"unused conservative-quadratic vertices {wrong} lost degree 3")
        raise LemmaViolation(f"vertices {wrong} were never in a fundament but changed degree")

    report = HighAvgDegreeReport(
        delta=delta,
        n=final.n,
        avg_degree=average,
        n_deg3=degree_stats(final).n_deg3,
        required=(4 * delta - 3) * final.n,
        q=q,
        q1=q1,
        q2=q2,
    )
    if not report.holds:
        logger.error(f"{report.n_deg3} degree-3 vertices, expected at least {report.required}")
    return report
