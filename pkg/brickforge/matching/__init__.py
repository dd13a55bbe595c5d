"""Perfect-matching engine and its brute-force oracle."""

from .engine import (
    BlossomMatcher,
    Matching,
    has_perfect_matching,
    has_pm_avoiding,
    maximum_matching,
    perfect_matching,
)
from .oracle import ORACLE_LIMIT, brute_force_matching, brute_force_pm

__all__ = [
    "BlossomMatcher",
    "Matching",
    "ORACLE_LIMIT",
    "brute_force_matching",
    "brute_force_pm",
    "has_perfect_matching",
    "has_pm_avoiding",
    "maximum_matching",
    "perfect_matching",
]
