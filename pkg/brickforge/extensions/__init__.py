"""The bisplit, the strict extensions, their enumeration and text form."""

from .codec import format_spec, parse_spec
from .core import apply, bisplit, validate_quasiquadratic, validate_quasiquartic
from .enumerate import enumerate_specs, partitions
from .properties import (
    VARIANT_TABLE,
    PropertyIssue,
    VariantInfo,
    check_record_properties,
    expected_delta_m,
    is_induced_subgraph,
)
from .registry import ExtensionRegistry, register_extension, registry
from .specs import (
    ALL_VARIANTS,
    CHOICE_COUNTS,
    Bilinear,
    BisplitSpec,
    ExtensionClass,
    ExtensionRecord,
    ExtensionSpec,
    Pseudolinear,
    Quasiquadratic,
    Quasiquartic,
    StrictLinear1,
    StrictLinear2,
    StrictLinear3,
    Variant,
    parse_variants,
    with_choices,
)

__all__ = [
    "ALL_VARIANTS",
    "Bilinear",
    "BisplitSpec",
    "CHOICE_COUNTS",
    "ExtensionClass",
    "ExtensionRecord",
    "ExtensionRegistry",
    "ExtensionSpec",
    "PropertyIssue",
    "Pseudolinear",
    "Quasiquadratic",
    "Quasiquartic",
    "StrictLinear1",
    "StrictLinear2",
    "StrictLinear3",
    "VARIANT_TABLE",
    "Variant",
    "VariantInfo",
    "apply",
    "bisplit",
    "check_record_properties",
    "enumerate_specs",
    "expected_delta_m",
    "format_spec",
    "is_induced_subgraph",
    "parse_spec",
    "parse_variants",
    "partitions",
    "register_extension",
    "registry",
    "validate_quasiquadratic",
    "validate_quasiquartic",
    "with_choices",
]
