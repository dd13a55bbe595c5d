"""Canonical forms for isomorphism rejection."""

from .form import (
    CanonicalForm,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    is_isomorphic,
    refine,
)

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "is_isomorphic",
    "refine",
]
