from dataclasses import dataclass
from typing import List, Sequence

from brickforge.graphs.core import Graph


@dataclass
class ValidationIssue:
    path: str
    message: str


class GraphValidator:
    """Debug validator for the simple-graph invariants of ``Graph``."""

    def __init__(self, require_even: bool = False, min_degree: int = 0) -> None:
        self._require_even = require_even
        self._min_degree = min_degree

    def validate(self, g: Graph) -> List[ValidationIssue]:
        issues: List[ValidationIssue] = []
        n = g.n
        for v, row in enumerate(g.adjacency):
            _validate_row(v, row, n, issues)
            for w in row:
                if 0 <= w < n and w != v and v not in g.adjacency[w]:
                    issues.append(
                        ValidationIssue(
                            path=f"adjacency[{v}]",
                            message=f"neighbour {w} does not list {v}",
                        )
                    )
            if len(row) < self._min_degree:
                issues.append(
                    ValidationIssue(
                        path=f"adjacency[{v}]",
                        message=f"degree {len(row)} below {self._min_degree}",
                    )
                )

        degree_sum = sum(len(row) for row in g.adjacency)
        if degree_sum % 2:
            issues.append(
                ValidationIssue(path="m", message=f"odd degree sum {degree_sum}")
            )
        if self._require_even and n % 2:
            issues.append(ValidationIssue(path="n", message=f"odd order {n}"))
        return issues


def _validate_row(v: int, row: Sequence[int], n: int, issues: List[ValidationIssue]) -> None:
    path = f"adjacency[{v}]"
    if any(not 0 <= w < n for w in row):
        issues.append(ValidationIssue(path=path, message="neighbour out of range"))
    if v in row:
        issues.append(ValidationIssue(path=path, message="loop"))
    if list(row) != sorted(set(row)):
        issues.append(
            ValidationIssue(path=path, message="neighbours not sorted or repeated")
        )


def assert_valid(g: Graph) -> None:
    issues = GraphValidator().validate(g)
    if issues:
        detail = "; ".join(f"{issue.path}: {issue.message}" for issue in issues)
        raise AssertionError(f"invalid graph {g!r}: {detail}")
