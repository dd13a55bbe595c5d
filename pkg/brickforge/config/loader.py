from dataclasses import dataclass, field
import json
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Optional, Sequence

from brickforge.config import settings
from brickforge.extensions.specs import ALL_VARIANTS, Variant, parse_variants


@dataclass
class ConfigValidationIssue:
    path: str
    message: str


@dataclass
class GenerationProfile:
    profile_id: str
    max_n: int
    variants: FrozenSet[Variant] = field(default_factory=lambda: ALL_VARIANTS)
    minimal_only: bool = True
    jobs: Optional[int] = None
    include_petersen: bool = True
    output_dir: Optional[str] = None


def load_generation_profile(path: str) -> GenerationProfile:
    data = _read_json(path)
    return load_generation_profile_from_dict(data, source_path=path)


def load_generation_profile_from_dict(
    data: Dict[str, Any], source_path: str = "<dict>"
) -> GenerationProfile:
    issues = validate_generation_profile(data)
    if issues:
        message = _format_issues(issues)
        raise ValueError(f"Invalid generation profile ({source_path}): {message}")

    return GenerationProfile(
        profile_id=data["profile_id"],
        max_n=data["max_n"],
        variants=parse_variants(data.get("variants")),
        minimal_only=data.get("minimal_only", True),
        jobs=data.get("jobs"),
        include_petersen=data.get("include_petersen", True),
        output_dir=data.get("output_dir"),
    )


def validate_generation_profile(data: Any) -> List[ConfigValidationIssue]:
    issues: List[ConfigValidationIssue] = []

    if not isinstance(data, dict):
        return [ConfigValidationIssue(path="$", message="Expected object")]

    profile_id = data.get("profile_id")
    if not isinstance(profile_id, str) or not profile_id.strip():
        issues.append(ConfigValidationIssue(path="profile_id", message="Required"))

    max_n = data.get("max_n")
    if not _is_int(max_n):
        issues.append(ConfigValidationIssue(path="max_n", message="Expected integer"))
    elif max_n % 2 or not 4 <= max_n <= settings.CAP:
        issues.append(
            ConfigValidationIssue(
                path="max_n",
                message=f"Expected an even integer in 4..{settings.CAP}",
            )
        )

    issues.extend(_validate_variants(data.get("variants")))

    for key in ("minimal_only", "include_petersen"):
        if key in data and not isinstance(data[key], bool):
            issues.append(ConfigValidationIssue(path=key, message="Expected boolean"))

    jobs = data.get("jobs")
    if jobs is not None and (not _is_int(jobs) or jobs < 1):
        issues.append(ConfigValidationIssue(path="jobs", message="Expected integer >= 1"))

    output_dir = data.get("output_dir")
    if output_dir is not None and (not isinstance(output_dir, str) or not output_dir.strip()):
        issues.append(ConfigValidationIssue(path="output_dir", message="Expected path"))

    unknown = sorted(set(data) - _KNOWN_KEYS)
    for key in unknown:
        issues.append(ConfigValidationIssue(path=str(key), message="Unknown key"))

    return issues


_KNOWN_KEYS = {
    "profile_id",
    "max_n",
    "variants",
    "minimal_only",
    "jobs",
    "include_petersen",
    "output_dir",
}


def _validate_variants(variants: Any) -> List[ConfigValidationIssue]:
    if variants is None:
        return []
    if not isinstance(variants, list):
        return [ConfigValidationIssue(path="variants", message="Expected list")]
    if not variants:
        return [ConfigValidationIssue(path="variants", message="Expected at least one tag")]

    issues: List[ConfigValidationIssue] = []
    allowed = {variant.value for variant in Variant} | {"ALL"}
    for idx, tag in enumerate(variants):
        if not isinstance(tag, str) or tag.strip().upper() not in allowed:
            issues.append(
                ConfigValidationIssue(
                    path=f"variants[{idx}]",
                    message=f"Expected one of {sorted(allowed)}",
                )
            )
    return issues


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _read_json(path: str) -> Dict[str, Any]:
    file_path = Path(path)
    with file_path.open("r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValueError(f"Expected root object in {path}")
    return data


def _format_issues(issues: Sequence[ConfigValidationIssue]) -> str:
    return "; ".join(f"{issue.path}: {issue.message}" for issue in issues)
