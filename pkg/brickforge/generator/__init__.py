"""Bounded brick enumeration, the exhaustive oracle and corpus checks."""

from .corpus import CorpusIssue, CorpusReport, CorpusRow, verify_corpus
from .exhaustive import exhaustive_minimal_bricks
from .search import GeneratedBrick, GenerationResult, generate_bricks

__all__ = [
    "CorpusIssue",
    "CorpusReport",
    "CorpusRow",
    "GeneratedBrick",
    "GenerationResult",
    "exhaustive_minimal_bricks",
    "generate_bricks",
    "verify_corpus",
]
