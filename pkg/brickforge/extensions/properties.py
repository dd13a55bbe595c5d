"""Per-variant delta table and the checks every applied extension must pass."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from brickforge.extensions.specs import EXTENSION_CLASSES, ExtensionClass, ExtensionRecord, Variant
from brickforge.graphs.core import Graph


@dataclass(frozen=True)
class VariantInfo:
    variant: Variant
    extension_class: ExtensionClass
    delta_n: int
    delta_m: Optional[int]
    max_fundament: int

    @property
    def fundament_ratio(self) -> Fraction:
        return Fraction(self.max_fundament, self.delta_n)


def _info(variant: Variant, delta_n: int, delta_m: Optional[int], max_fundament: int) -> VariantInfo:
    return VariantInfo(variant, EXTENSION_CLASSES[variant], delta_n, delta_m, max_fundament)


# delta_m of the two "quasi" variants depends on the deleted edges
VARIANT_TABLE: Dict[Variant, VariantInfo] = {
    Variant.STRICT_LINEAR_1: _info(Variant.STRICT_LINEAR_1, 2, 3, 6),
    Variant.STRICT_LINEAR_2: _info(Variant.STRICT_LINEAR_2, 4, 5, 10),
    Variant.STRICT_LINEAR_3: _info(Variant.STRICT_LINEAR_3, 4, 5, 6),
    Variant.BILINEAR: _info(Variant.BILINEAR, 4, 6, 6),
    Variant.PSEUDOLINEAR: _info(Variant.PSEUDOLINEAR, 4, 6, 6),
    Variant.QUASIQUADRATIC: _info(Variant.QUASIQUADRATIC, 2, None, 4),
    Variant.QUASIQUARTIC: _info(Variant.QUASIQUARTIC, 4, None, 4),
}


def expected_delta_m(record: ExtensionRecord) -> int:
    info = VARIANT_TABLE[record.variant]
    if info.delta_m is not None:
        return info.delta_m
    if record.variant is Variant.QUASIQUADRATIC:
        return 5 if record.conservative else 4
    return 8 - len(record.deleted_edges)


@dataclass
class PropertyIssue:
    name: str
    message: str


def check_record_properties(
    before: Graph, after: Graph, record: ExtensionRecord
) -> List[PropertyIssue]:
    issues: List[PropertyIssue] = []
    info = VARIANT_TABLE[record.variant]

    delta_n = after.n - before.n
    delta_m = after.m - before.m
    if delta_n != record.delta_n or delta_n != info.delta_n:
        issues.append(
            PropertyIssue("delta_n", f"observed {delta_n}, recorded {record.delta_n}, table {info.delta_n}")
        )
    expected_m = expected_delta_m(record)
    if delta_m != record.delta_m or delta_m != expected_m:
        issues.append(
            PropertyIssue("delta_m", f"observed {delta_m}, recorded {record.delta_m}, table {expected_m}")
        )
    if record.new_vertices != tuple(range(before.n, after.n)):
        issues.append(
            PropertyIssue("new_vertices", f"{record.new_vertices} are not the appended ids")
        )

    outside = [v for v in record.fundament if not 0 <= v < before.n]
    if outside:
        issues.append(PropertyIssue("fundament", f"{sorted(outside)} not in the pre-graph"))

    for v in before.vertices():
        if v not in record.fundament and before.degree(v) != after.degree(v):
            issues.append(
                PropertyIssue(
                    "degree",
                    f"vertex {v} outside the fundament went from degree "
                    f"{before.degree(v)} to {after.degree(v)}",
                )
            )

    if len(record.fundament) > 3 * record.delta_n:
        issues.append(
            PropertyIssue(
                "fundament_size",
                f"|F| = {len(record.fundament)} exceeds 3 * {record.delta_n}",
            )
        )
    if len(record.fundament) > info.max_fundament:
        issues.append(
            PropertyIssue(
                "fundament_size",
                f"|F| = {len(record.fundament)} exceeds the {record.variant.value} maximum {info.max_fundament}",
            )
        )

    if record.is_conservative_quadratic and not is_induced_subgraph(before, after):
        issues.append(PropertyIssue("induced", "pre-graph is not induced in the post-graph"))
    return issues


def is_induced_subgraph(before: Graph, after: Graph) -> bool:
    """Whether ``before`` is the subgraph of ``after`` induced by ids ``0..before.n-1``."""
    if after.n < before.n:
        return False
    kept = {(u, v) for u, v in after.edges() if v < before.n}
    return kept == set(before.edges())
