"""Deterministic enumeration of every valid spec on a graph."""

from itertools import combinations, product
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, Optional, Tuple

from brickforge.extensions.specs import (
    ALL_VARIANTS,
    Bilinear,
    BisplitSpec,
    ExtensionSpec,
    Pseudolinear,
    Quasiquadratic,
    Quasiquartic,
    StrictLinear1,
    StrictLinear2,
    StrictLinear3,
    Variant,
)
from brickforge.graphs.core import Graph

Partition = Tuple[FrozenSet[int], FrozenSet[int]]


def enumerate_specs(
    g: Graph, variants: Optional[Iterable[Variant]] = None, reduced: bool = False
) -> Iterator[ExtensionSpec]:
    """
    Yield every valid spec of the requested variants, in variant order.

    Bisplit partitions are listed once per unordered pair {N1, N2} where
    the two sides play symmetric roles. With ``reduced`` the quasiquadratic
    and quasiquartic tuples are also cut down to one per relabelling that
    yields the same graph.
    """
    selected = ALL_VARIANTS if variants is None else frozenset(variants)
    for variant in Variant:
        if variant in selected:
            yield from _ENUMERATORS[variant](g, reduced)


def partitions(neighbors: Iterable[int], symmetric: bool = True) -> Iterator[Partition]:
    """Splits of ``neighbors`` into two sides of size >= 2."""
    ordered = sorted(neighbors)
    everything = frozenset(ordered)
    for size in range(2, len(ordered) - 1):
        for side in combinations(ordered, size):
            n1 = frozenset(side)
            if symmetric and ordered[0] not in n1:
                continue
            yield n1, everything - n1


def _splittable(g: Graph) -> Iterator[int]:
    return (v for v in g.vertices() if g.degree(v) >= 4)


def _strict_linear_1(g: Graph, reduced: bool) -> Iterator[ExtensionSpec]:
    for v in _splittable(g):
        targets = [u0 for u0 in g.vertices() if u0 != v and not g.has_edge(u0, v)]
        for n1, n2 in partitions(g.neighbors(v)):
            for u0 in targets:
                yield StrictLinear1(BisplitSpec(v, n1, n2), u0)


def _strict_linear_2(g: Graph, reduced: bool) -> Iterator[ExtensionSpec]:
    for v, u in combinations(list(_splittable(g)), 2):
        if g.has_edge(u, v):
            continue
        for (vn1, vn2), (un1, un2) in product(
            list(partitions(g.neighbors(v))), list(partitions(g.neighbors(u)))
        ):
            yield StrictLinear2(BisplitSpec(v, vn1, vn2), BisplitSpec(u, un1, un2))


def _strict_linear_3(g: Graph, reduced: bool) -> Iterator[ExtensionSpec]:
    for v in _splittable(g):
        for n1, n2 in partitions(g.neighbors(v), symmetric=False):
            inner = sorted(n1)
            for size in range(1, len(inner) - 1):
                for p1 in combinations(inner, size):
                    yield StrictLinear3(BisplitSpec(v, n1, n2), frozenset(p1))


def _bilinear(g: Graph, reduced: bool) -> Iterator[ExtensionSpec]:
    for u in _splittable(g):
        for w in g.neighbors(u):
            others = [v for v in g.vertices() if v not in (u, w) and not g.has_edge(v, w)]
            if not others:
                continue
            for n1, n2 in partitions(g.neighbors(u), symmetric=False):
                if w not in n2:
                    continue
                for v in others:
                    yield Bilinear(u, v, w, BisplitSpec(u, n1, n2))


def _pseudolinear(g: Graph, reduced: bool) -> Iterator[ExtensionSpec]:
    for u in _splittable(g):
        targets = [v for v in g.vertices() if v != u and not g.has_edge(u, v)]
        for n1, n2 in partitions(g.neighbors(u)):
            for v in targets:
                yield Pseudolinear(u, v, n1, n2)


def _quasiquadratic(g: Graph, reduced: bool) -> Iterator[ExtensionSpec]:
    for u, v, x, y in product(g.vertices(), repeat=4):
        if u == v or u == x or v == y or {u, v} == {x, y}:
            continue
        if reduced and (v, u, y, x) < (u, v, x, y):
            continue
        yield Quasiquadratic(u, v, x, y)


def _quasiquartic(g: Graph, reduced: bool) -> Iterator[ExtensionSpec]:
    for u, v, x, y in product(g.vertices(), repeat=4):
        if u == v or x == y or u == y or v == x or {u, v} == {x, y}:
            continue
        if reduced and min(_quartic_orbit(u, v, x, y)) < (u, v, x, y):
            continue
        yield Quasiquartic(u, v, x, y)


def _quartic_orbit(u: int, v: int, x: int, y: int) -> Tuple[Tuple[int, int, int, int], ...]:
    return ((u, v, x, y), (x, y, u, v), (v, u, y, x), (y, x, v, u))


_ENUMERATORS: Dict[Variant, Callable[[Graph, bool], Iterator[ExtensionSpec]]] = {
    Variant.STRICT_LINEAR_1: _strict_linear_1,
    Variant.STRICT_LINEAR_2: _strict_linear_2,
    Variant.STRICT_LINEAR_3: _strict_linear_3,
    Variant.BILINEAR: _bilinear,
    Variant.PSEUDOLINEAR: _pseudolinear,
    Variant.QUASIQUADRATIC: _quasiquadratic,
    Variant.QUASIQUARTIC: _quasiquartic,
}
