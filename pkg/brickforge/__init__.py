"""Bricks, minimal bricks and the strict extensions that generate them."""

from __future__ import annotations

from typing import Iterable, Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from brickforge.bricks import CertificateReport
    from brickforge.generator import CorpusReport, GenerationResult
    from brickforge.graphs import Graph

__all__ = ["check_graph", "generate", "verify_directory"]


def check_graph(graph: "Graph", minimal: bool = False) -> "CertificateReport":
    from brickforge.bricks import is_brick, is_minimal_brick

    return is_minimal_brick(graph) if minimal else is_brick(graph)


def generate(
    max_n: int,
    variants: Optional[Iterable[str]] = None,
    minimal_only: bool = True,
    jobs: int | None = None,
) -> "GenerationResult":
    from brickforge.extensions import parse_variants
    from brickforge.generator import generate_bricks

    return generate_bricks(
        max_n, variants=parse_variants(variants), minimal_only=minimal_only, jobs=jobs
    )


def verify_directory(directory: str, error_policy: str = "continue") -> "CorpusReport":
    from brickforge.pipeline import run_verification

    return run_verification(directory, error_policy=error_policy)
