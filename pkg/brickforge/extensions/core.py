"""
The bisplit and the strict extensions.

Vertex ids of the pre-graph survive every extension: a bisplit keeps the
split vertex's id for its first outer vertex, and all new vertices are
appended in a fixed, variant-specific order.
"""

import logging
from typing import Iterable, List, Sequence, Set, Tuple

from brickforge.exceptions import (
    BadPartition,
    DegreeTooLow,
    LemmaViolation,
    NeighborChoiceInfeasible,
    SpecInvariantViolated,
)
from brickforge.extensions.properties import check_record_properties
from brickforge.extensions.registry import apply_extension, register_extension
from brickforge.extensions.specs import (
    Bilinear,
    BisplitSpec,
    ExtensionRecord,
    ExtensionSpec,
    Pseudolinear,
    Quasiquadratic,
    Quasiquartic,
    StrictLinear1,
    StrictLinear2,
    StrictLinear3,
    Variant,
    with_choices,
)
from brickforge.graphs.core import Graph, normalize_edge

logger = logging.getLogger(__name__)

Sets = List[Set[int]]


def apply(g: Graph, spec: ExtensionSpec, check: bool = True) -> Tuple[Graph, ExtensionRecord]:
    """
    Apply ``spec`` to ``g`` and return the new graph with its record.

    With ``check`` the record is verified against the delta table and the
    fundament properties; a failure there is a LemmaViolation.
    """
    result, record = apply_extension(g, spec)
    if check:
        issues = check_record_properties(g, result, record)
        if issues:
            detail = "; ".join(f"{issue.name}: {issue.message}" for issue in issues)
            logger.error(f"{spec.variant.value} broke the extension properties: {detail}")
            raise LemmaViolation(f"{spec} violates extension properties: {detail}")
    logger.debug(f"applied {spec.variant.value}: n {g.n} -> {result.n}, F={sorted(record.fundament)}")
    return result, record


def bisplit(g: Graph, spec: BisplitSpec) -> Tuple[Graph, int, Tuple[int, int]]:
    """Return the bisplit graph, its inner vertex and its outer vertices ``(v1, v2)``."""
    _check_bisplit(g, spec)
    sets = g.to_sets()
    v2, v0 = _bisplit_sets(sets, spec)
    return _freeze(sets), v0, (spec.v, v2)


def _freeze(sets: Sets) -> Graph:
    return Graph(tuple(tuple(sorted(row)) for row in sets))


def _require_vertex(g: Graph, name: str, value: int) -> None:
    if not isinstance(value, int) or not 0 <= value < g.n:
        raise SpecInvariantViolated(f"{name}∈V(G)", f"{name}={value} with n={g.n}")


def _check_bisplit(g: Graph, spec: BisplitSpec, label: str = "v") -> None:
    _require_vertex(g, label, spec.v)
    if len(spec.n1) < 2 or len(spec.n2) < 2:
        raise BadPartition(
            f"bisplit at {spec.v} needs two neighbours per side, got "
            f"{sorted(spec.n1)} / {sorted(spec.n2)}"
        )
    degree = g.degree(spec.v)
    if degree < 4:
        raise DegreeTooLow(f"bisplit at {spec.v} needs degree >= 4, vertex has degree {degree}")
    if spec.n1 & spec.n2:
        raise BadPartition(f"sides of the bisplit at {spec.v} overlap in {sorted(spec.n1 & spec.n2)}")
    if spec.n1 | spec.n2 != g.neighbor_set(spec.v):
        raise BadPartition(
            f"sides {sorted(spec.n1)} / {sorted(spec.n2)} do not partition "
            f"N({spec.v}) = {list(g.neighbors(spec.v))}"
        )


def _bisplit_sets(sets: Sets, spec: BisplitSpec) -> Tuple[int, int]:
    """Bisplit in place; ``spec.v`` keeps ``n1``. Returns the appended ``(v2, v0)``."""
    v = spec.v
    v2 = len(sets)
    v0 = v2 + 1
    sets.append(set())
    sets.append(set())
    for w in spec.n2:
        sets[w].discard(v)
        sets[v].discard(w)
        sets[w].add(v2)
        sets[v2].add(w)
    _join(sets, v, v0)
    _join(sets, v2, v0)
    return v2, v0


def _join(sets: Sets, a: int, b: int) -> None:
    sets[a].add(b)
    sets[b].add(a)


def _cut(sets: Sets, a: int, b: int) -> None:
    sets[a].discard(b)
    sets[b].discard(a)


def _append(sets: Sets, count: int) -> Tuple[int, ...]:
    start = len(sets)
    sets.extend(set() for _ in range(count))
    return tuple(range(start, start + count))


def _pick(
    candidates: Iterable[int], count: int, given: Sequence[int], label: str
) -> Tuple[int, ...]:
    pool = sorted(set(candidates))
    if not given:
        if len(pool) < count:
            raise NeighborChoiceInfeasible(
                f"need {count} fundament picks from {label}, only {pool} available"
            )
        return tuple(pool[:count])
    picked = tuple(given)
    if len(picked) != count or len(set(picked)) != count or not set(picked) <= set(pool):
        raise NeighborChoiceInfeasible(
            f"picks {list(picked)} for {label} must be {count} distinct vertices of {pool}"
        )
    return picked


def _split_choices(spec: ExtensionSpec, sizes: Sequence[int]) -> List[Tuple[int, ...]]:
    choices = tuple(spec.choices)
    if choices and len(choices) != sum(sizes):
        raise NeighborChoiceInfeasible(
            f"{spec.variant.value} takes {sum(sizes)} fundament picks, got {len(choices)}"
        )
    if not choices:
        return [() for _ in sizes]
    groups = []
    start = 0
    for size in sizes:
        groups.append(choices[start:start + size])
        start += size
    return groups


@register_extension(Variant.STRICT_LINEAR_1)
def _strict_linear_1(g: Graph, spec: StrictLinear1) -> Tuple[Graph, ExtensionRecord]:
    split = spec.bisplit
    _check_bisplit(g, split)
    _require_vertex(g, "u0", spec.u0)
    if spec.u0 == split.v:
        raise SpecInvariantViolated("u0≠v", f"u0={spec.u0}")
    if g.has_edge(spec.u0, split.v):
        raise SpecInvariantViolated("u0≁v", f"u0={spec.u0} is adjacent to v={split.v}")

    given1, given2 = _split_choices(spec, (2, 2))
    picks = _pick(split.n1, 2, given1, "N1") + _pick(split.n2, 2, given2, "N2")

    sets = g.to_sets()
    v2, v0 = _bisplit_sets(sets, split)
    _join(sets, spec.u0, v0)
    record = ExtensionRecord(
        spec=with_choices(spec, picks),
        fundament=frozenset((spec.u0, split.v) + picks),
        new_vertices=(v2, v0),
        delta_n=2,
        delta_m=3,
        bisplit_vertices=frozenset((split.v,)),
    )
    return _freeze(sets), record


@register_extension(Variant.STRICT_LINEAR_2)
def _strict_linear_2(g: Graph, spec: StrictLinear2) -> Tuple[Graph, ExtensionRecord]:
    first, second = spec.bisplit_v, spec.bisplit_u
    _check_bisplit(g, first, "v")
    _check_bisplit(g, second, "u")
    v, u = first.v, second.v
    if u == v:
        raise SpecInvariantViolated("u≠v", f"u=v={u}")
    if g.has_edge(u, v):
        raise SpecInvariantViolated("u≁v", f"u={u} is adjacent to v={v}")

    groups = _split_choices(spec, (2, 2, 2, 2))
    picks = (
        _pick(first.n1, 2, groups[0], "N1(v)")
        + _pick(first.n2, 2, groups[1], "N2(v)")
        + _pick(second.n1, 2, groups[2], "N1(u)")
        + _pick(second.n2, 2, groups[3], "N2(u)")
    )

    sets = g.to_sets()
    v2, v0 = _bisplit_sets(sets, first)
    u2, u0 = _bisplit_sets(sets, second)
    _join(sets, u0, v0)
    record = ExtensionRecord(
        spec=with_choices(spec, picks),
        fundament=frozenset((u, v) + picks),
        new_vertices=(v2, v0, u2, u0),
        delta_n=4,
        delta_m=5,
        bisplit_vertices=frozenset((u, v)),
    )
    return _freeze(sets), record


@register_extension(Variant.STRICT_LINEAR_3)
def _strict_linear_3(g: Graph, spec: StrictLinear3) -> Tuple[Graph, ExtensionRecord]:
    split = spec.bisplit
    _check_bisplit(g, split)
    if not spec.p1 <= split.n1:
        raise BadPartition(f"p1 {sorted(spec.p1)} is not inside N1 {sorted(split.n1)}")
    if len(spec.p1) < 1 or len(spec.p2) < 2:
        raise BadPartition(
            f"second bisplit needs |p1| >= 1 and |N1 - p1| >= 2, got "
            f"{sorted(spec.p1)} / {sorted(spec.p2)}"
        )

    given_p1, given_n2, given_p2 = _split_choices(spec, (1, 2, 2))
    picks = (
        _pick(spec.p1, 1, given_p1, "p1")
        + _pick(split.n2, 2, given_n2, "N2")
        + _pick(spec.p2, 2, given_p2, "N1 - p1")
    )

    sets = g.to_sets()
    u2, u0 = _bisplit_sets(sets, split)
    # u1 kept the id of v; its side with u0 becomes v1
    second = BisplitSpec(split.v, spec.p1 | {u0}, spec.p2)
    v2, v0 = _bisplit_sets(sets, second)
    _join(sets, u0, v0)
    record = ExtensionRecord(
        spec=with_choices(spec, picks),
        fundament=frozenset((split.v,) + picks),
        new_vertices=(u2, u0, v2, v0),
        delta_n=4,
        delta_m=5,
        bisplit_vertices=frozenset((split.v,)),
    )
    return _freeze(sets), record


@register_extension(Variant.BILINEAR)
def _bilinear(g: Graph, spec: Bilinear) -> Tuple[Graph, ExtensionRecord]:
    u, v, w, split = spec.u, spec.v, spec.w, spec.bisplit
    for name, value in (("u", u), ("v", v), ("w", w)):
        _require_vertex(g, name, value)
    if len({u, v, w}) != 3:
        raise SpecInvariantViolated("u,v,w distinct", f"u={u} v={v} w={w}")
    if split.v != u:
        raise SpecInvariantViolated("bisplit at u", f"bisplit names {split.v}, u={u}")
    if not g.has_edge(u, w):
        raise SpecInvariantViolated("w~u", f"w={w} is not a neighbour of u={u}")
    if g.has_edge(v, w):
        raise SpecInvariantViolated("w≁v", f"w={w} is a neighbour of v={v}")
    _check_bisplit(g, split, "u")
    if w not in split.n2:
        raise SpecInvariantViolated("w∈N2", f"w={w} not in {sorted(split.n2)}")

    given_n2, given_n1 = _split_choices(spec, (1, 2))
    picks = _pick(split.n2 - {w}, 1, given_n2, "N2 - w") + _pick(split.n1, 2, given_n1, "N1")

    sets = g.to_sets()
    u2, u0 = _bisplit_sets(sets, split)
    a, b = _append(sets, 2)
    _cut(sets, u2, w)
    _join(sets, u2, a)
    _join(sets, a, b)
    _join(sets, b, w)
    _join(sets, b, u0)
    _join(sets, a, v)
    record = ExtensionRecord(
        spec=with_choices(spec, picks),
        fundament=frozenset((u, v, w) + picks),
        new_vertices=(u2, u0, a, b),
        delta_n=4,
        delta_m=6,
        bisplit_vertices=frozenset((u,)),
    )
    return _freeze(sets), record


@register_extension(Variant.PSEUDOLINEAR)
def _pseudolinear(g: Graph, spec: Pseudolinear) -> Tuple[Graph, ExtensionRecord]:
    u, v = spec.u, spec.v
    _require_vertex(g, "u", u)
    _require_vertex(g, "v", v)
    if u == v:
        raise SpecInvariantViolated("u≠v", f"u=v={u}")
    if g.has_edge(u, v):
        raise SpecInvariantViolated("v≁u", f"v={v} is a neighbour of u={u}")
    split = BisplitSpec(u, spec.n1, spec.n2)
    _check_bisplit(g, split, "u")

    given1, given2 = _split_choices(spec, (2, 2))
    picks = _pick(spec.n1, 2, given1, "N1") + _pick(spec.n2, 2, given2, "N2")

    sets = g.to_sets()
    (u2,) = _append(sets, 1)
    for w in spec.n2:
        _cut(sets, u, w)
        _join(sets, u2, w)
    a, b, c = _append(sets, 3)
    _join(sets, u, a)
    _join(sets, a, b)
    _join(sets, b, c)
    _join(sets, c, u2)
    _join(sets, a, c)
    _join(sets, b, v)
    record = ExtensionRecord(
        spec=with_choices(spec, picks),
        fundament=frozenset((u, v) + picks),
        new_vertices=(u2, a, b, c),
        delta_n=4,
        delta_m=6,
        bisplit_vertices=frozenset((u,)),
    )
    return _freeze(sets), record


def validate_quasiquadratic(g: Graph, spec: Quasiquadratic) -> None:
    for name in ("u", "v", "x", "y"):
        _require_vertex(g, name, getattr(spec, name))
    if spec.u == spec.v:
        raise SpecInvariantViolated("u≠v", f"u=v={spec.u}")
    if spec.x == spec.u:
        raise SpecInvariantViolated("u≠x", f"u=x={spec.u}")
    if spec.y == spec.v:
        raise SpecInvariantViolated("v≠y", f"v=y={spec.v}")
    if {spec.u, spec.v} == {spec.x, spec.y}:
        raise SpecInvariantViolated("{u,v}≠{x,y}", f"both are {sorted({spec.u, spec.v})}")


@register_extension(Variant.QUASIQUADRATIC)
def _quasiquadratic(g: Graph, spec: Quasiquadratic) -> Tuple[Graph, ExtensionRecord]:
    validate_quasiquadratic(g, spec)
    u, v, x, y = spec.u, spec.v, spec.x, spec.y
    conservative = not g.has_edge(u, v)

    sets = g.to_sets()
    deleted = ()
    if not conservative:
        _cut(sets, u, v)
        deleted = (normalize_edge(u, v),)
    u_new, v_new = _append(sets, 2)
    _join(sets, u_new, v_new)
    _join(sets, u_new, u)
    _join(sets, u_new, x)
    _join(sets, v_new, v)
    _join(sets, v_new, y)
    record = ExtensionRecord(
        spec=spec,
        fundament=frozenset((u, v, x, y)),
        new_vertices=(u_new, v_new),
        delta_n=2,
        delta_m=5 - len(deleted),
        conservative=conservative,
        upper_fundament=frozenset((u, v)),
        deleted_edges=deleted,
        identifications=spec.identifications(),
    )
    return _freeze(sets), record


def validate_quasiquartic(g: Graph, spec: Quasiquartic) -> None:
    for name in ("u", "v", "x", "y"):
        _require_vertex(g, name, getattr(spec, name))
    if spec.u == spec.v:
        raise SpecInvariantViolated("u≠v", f"u=v={spec.u}")
    if spec.x == spec.y:
        raise SpecInvariantViolated("x≠y", f"x=y={spec.x}")
    if spec.u == spec.y:
        raise SpecInvariantViolated("u≠y", f"u=y={spec.u}")
    if spec.v == spec.x:
        raise SpecInvariantViolated("v≠x", f"v=x={spec.v}")
    if {spec.u, spec.v} == {spec.x, spec.y}:
        raise SpecInvariantViolated("{u,v}≠{x,y}", f"both are {sorted({spec.u, spec.v})}")


@register_extension(Variant.QUASIQUARTIC)
def _quasiquartic(g: Graph, spec: Quasiquartic) -> Tuple[Graph, ExtensionRecord]:
    validate_quasiquartic(g, spec)
    u, v, x, y = spec.u, spec.v, spec.x, spec.y

    sets = g.to_sets()
    deleted = []
    for a, b in ((u, v), (x, y)):
        if g.has_edge(a, b):
            _cut(sets, a, b)
            deleted.append(normalize_edge(a, b))
    u_new, v_new, x_new, y_new = _append(sets, 4)
    for a, b in ((u_new, v_new), (v_new, y_new), (y_new, x_new), (x_new, u_new)):
        _join(sets, a, b)
    for old, new in ((u, u_new), (v, v_new), (x, x_new), (y, y_new)):
        _join(sets, old, new)
    record = ExtensionRecord(
        spec=spec,
        fundament=frozenset((u, v, x, y)),
        new_vertices=(u_new, v_new, x_new, y_new),
        delta_n=4,
        delta_m=8 - len(deleted),
        conservative=not deleted,
        deleted_edges=tuple(deleted),
        identifications=spec.identifications(),
    )
    return _freeze(sets), record
