"""Brick-on-brick sequences, density accounting, lemma witnesses and recipes."""

from .build import (
    BrickSequence,
    HighAvgDegreeReport,
    SequenceStats,
    StartGraph,
    build,
    check_highavdeg,
    check_lotsofquad,
    stats,
)
from .codec import format_sequence, format_sequences, parse_sequence, parse_sequences
from .lemmas import (
    QuadOnQuadWitness,
    ReorderResult,
    build_quadonquad,
    quadonquad_candidates,
    random_quadonquad,
    random_reorder_triple,
    recognise_quasiquadratic,
    reorder,
    translate_spec,
)
from .recipes import (
    ladder_plus_sequence,
    ladder_plus_specs,
    triple_ladder_sequence,
    triple_ladder_specs,
)

__all__ = [
    "BrickSequence",
    "HighAvgDegreeReport",
    "QuadOnQuadWitness",
    "ReorderResult",
    "SequenceStats",
    "StartGraph",
    "build",
    "build_quadonquad",
    "check_highavdeg",
    "check_lotsofquad",
    "format_sequence",
    "format_sequences",
    "ladder_plus_sequence",
    "ladder_plus_specs",
    "parse_sequence",
    "parse_sequences",
    "quadonquad_candidates",
    "random_quadonquad",
    "random_reorder_triple",
    "recognise_quasiquadratic",
    "reorder",
    "stats",
    "translate_spec",
    "triple_ladder_sequence",
    "triple_ladder_specs",
]
