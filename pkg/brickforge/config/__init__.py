"""Runtime settings and generation profile loading."""

from . import settings
from .loader import (
    ConfigValidationIssue,
    GenerationProfile,
    load_generation_profile,
    load_generation_profile_from_dict,
    validate_generation_profile,
)

__all__ = [
    "ConfigValidationIssue",
    "GenerationProfile",
    "load_generation_profile",
    "load_generation_profile_from_dict",
    "settings",
    "validate_generation_profile",
]
