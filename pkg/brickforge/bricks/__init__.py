"""Brick recognition, certificates and degree bounds."""

from .bounds import (
    DegreeBoundsReport,
    DegreeStats,
    average_degree_exceptions,
    degree_stats,
    verify_paper_bounds,
)
from .certificates import (
    BadPair,
    CertificateReport,
    CutPair,
    DeletableEdge,
    TooSmall,
    Witness,
    recheck,
)
from .checks import is_bicritical, is_brick, is_minimal_brick, is_three_connected

__all__ = [
    "BadPair",
    "CertificateReport",
    "CutPair",
    "DegreeStats",
    "DeletableEdge",
    "DegreeBoundsReport",
    "TooSmall",
    "Witness",
    "average_degree_exceptions",
    "degree_stats",
    "is_bicritical",
    "is_brick",
    "is_minimal_brick",
    "is_three_connected",
    "recheck",
    "verify_paper_bounds",
]
