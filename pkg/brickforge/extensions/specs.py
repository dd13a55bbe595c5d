"""
Descriptions of the strict extensions and of their applications.

A spec names the pre-graph vertices an extension acts on. Fundament
neighbour picks go in ``choices``; an empty tuple means "use the
lexicographically smallest admissible vertices" and the applied record
always carries the resolved picks.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import ClassVar, FrozenSet, Iterable, Optional, Tuple, Union

from brickforge.graphs.core import Edge


class Variant(str, Enum):
    STRICT_LINEAR_1 = "SL1"
    STRICT_LINEAR_2 = "SL2"
    STRICT_LINEAR_3 = "SL3"
    BILINEAR = "BILIN"
    PSEUDOLINEAR = "PSEUDO"
    QUASIQUADRATIC = "QQUAD"
    QUASIQUARTIC = "QQUART"


class ExtensionClass(str, Enum):
    LINEAR = "linear"
    QUADRATIC = "quadratic"
    QUARTIC = "quartic"


ALL_VARIANTS: FrozenSet[Variant] = frozenset(Variant)


def parse_variants(values: Optional[Iterable[str]]) -> FrozenSet[Variant]:
    """Variant tags (case-insensitive); ``None`` or ``"all"`` selects every variant."""
    if values is None:
        return ALL_VARIANTS
    selected = set()
    for value in values:
        token = str(value).strip().upper()
        if token == "ALL":
            return ALL_VARIANTS
        selected.add(Variant(token))
    return frozenset(selected)


@dataclass(frozen=True)
class BisplitSpec:
    """Split ``v`` into ``v1`` (keeps the id, joined to ``n1``) and ``v2`` (joined to ``n2``)."""

    v: int
    n1: FrozenSet[int]
    n2: FrozenSet[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "n1", frozenset(self.n1))
        object.__setattr__(self, "n2", frozenset(self.n2))

    def without(self, dropped: FrozenSet[int]) -> "BisplitSpec":
        return BisplitSpec(self.v, self.n1 - dropped, self.n2 - dropped)


@dataclass(frozen=True)
class StrictLinear1:
    """Bisplit ``v`` and join the inner vertex to ``u0``; choices: 2 of n1, 2 of n2."""

    variant: ClassVar[Variant] = Variant.STRICT_LINEAR_1
    bisplit: BisplitSpec
    u0: int
    choices: Tuple[int, ...] = ()


@dataclass(frozen=True)
class StrictLinear2:
    """
    Bisplit two non-adjacent vertices and join the inner vertices.

    choices: 2 of each of ``bisplit_v.n1``, ``bisplit_v.n2``,
    ``bisplit_u.n1``, ``bisplit_u.n2``.
    """

    variant: ClassVar[Variant] = Variant.STRICT_LINEAR_2
    bisplit_v: BisplitSpec
    bisplit_u: BisplitSpec
    choices: Tuple[int, ...] = ()


@dataclass(frozen=True)
class StrictLinear3:
    """
    Bisplit ``v`` into ``u1``/``u2`` with inner ``u0``, then bisplit ``u1``.

    The second bisplit puts ``p1`` together with ``u0`` on the side of
    ``v1``; the rest of ``n1`` goes to ``v2``. choices: 1 of p1, 2 of n2,
    2 of ``n1 - p1``.
    """

    variant: ClassVar[Variant] = Variant.STRICT_LINEAR_3
    bisplit: BisplitSpec
    p1: FrozenSet[int]
    choices: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "p1", frozenset(self.p1))

    @property
    def p2(self) -> FrozenSet[int]:
        return self.bisplit.n1 - self.p1


@dataclass(frozen=True)
class Bilinear:
    """Bisplit ``u`` with ``w`` on the ``u2`` side; choices: 1 of ``n2 - {w}``, 2 of n1."""

    variant: ClassVar[Variant] = Variant.BILINEAR
    u: int
    v: int
    w: int
    bisplit: BisplitSpec
    choices: Tuple[int, ...] = ()


@dataclass(frozen=True)
class Pseudolinear:
    variant: ClassVar[Variant] = Variant.PSEUDOLINEAR
    u: int
    v: int
    n1: FrozenSet[int]
    n2: FrozenSet[int]
    choices: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "n1", frozenset(self.n1))
        object.__setattr__(self, "n2", frozenset(self.n2))


@dataclass(frozen=True)
class Quasiquadratic:
    variant: ClassVar[Variant] = Variant.QUASIQUADRATIC
    u: int
    v: int
    x: int
    y: int

    def identifications(self) -> Tuple[str, ...]:
        found = []
        if self.x == self.y:
            found.append("x=y")
        if self.x == self.v:
            found.append("x=v")
        if self.y == self.u:
            found.append("y=u")
        return tuple(found)


@dataclass(frozen=True)
class Quasiquartic:
    variant: ClassVar[Variant] = Variant.QUASIQUARTIC
    u: int
    v: int
    x: int
    y: int

    def identifications(self) -> Tuple[str, ...]:
        found = []
        if self.u == self.x:
            found.append("u=x")
        if self.v == self.y:
            found.append("v=y")
        return tuple(found)


ExtensionSpec = Union[
    StrictLinear1,
    StrictLinear2,
    StrictLinear3,
    Bilinear,
    Pseudolinear,
    Quasiquadratic,
    Quasiquartic,
]

CHOICE_COUNTS = {
    Variant.STRICT_LINEAR_1: 4,
    Variant.STRICT_LINEAR_2: 8,
    Variant.STRICT_LINEAR_3: 5,
    Variant.BILINEAR: 3,
    Variant.PSEUDOLINEAR: 4,
    Variant.QUASIQUADRATIC: 0,
    Variant.QUASIQUARTIC: 0,
}

EXTENSION_CLASSES = {
    Variant.STRICT_LINEAR_1: ExtensionClass.LINEAR,
    Variant.STRICT_LINEAR_2: ExtensionClass.LINEAR,
    Variant.STRICT_LINEAR_3: ExtensionClass.LINEAR,
    Variant.BILINEAR: ExtensionClass.LINEAR,
    Variant.PSEUDOLINEAR: ExtensionClass.LINEAR,
    Variant.QUASIQUADRATIC: ExtensionClass.QUADRATIC,
    Variant.QUASIQUARTIC: ExtensionClass.QUARTIC,
}


def with_choices(spec: ExtensionSpec, choices: Tuple[int, ...]) -> ExtensionSpec:
    if CHOICE_COUNTS[spec.variant] == 0:
        return spec
    return replace(spec, choices=tuple(choices))


@dataclass(frozen=True)
class ExtensionRecord:
    """
    One applied extension.

    ``fundament`` lives in the pre-graph, ``new_vertices`` in the post-graph
    (always the ids ``n .. n + delta_n - 1`` in the variant's fixed order).
    ``bisplit_vertices`` are pre-graph vertices whose id now names an outer
    vertex of a bisplit.
    """

    spec: ExtensionSpec
    fundament: FrozenSet[int]
    new_vertices: Tuple[int, ...]
    delta_n: int
    delta_m: int
    conservative: Optional[bool] = None
    upper_fundament: Optional[FrozenSet[int]] = None
    deleted_edges: Tuple[Edge, ...] = ()
    bisplit_vertices: FrozenSet[int] = frozenset()
    identifications: Tuple[str, ...] = ()

    @property
    def variant(self) -> Variant:
        return self.spec.variant

    @property
    def extension_class(self) -> ExtensionClass:
        return EXTENSION_CLASSES[self.variant]

    @property
    def is_conservative_quadratic(self) -> bool:
        return self.variant is Variant.QUASIQUADRATIC and bool(self.conservative)
