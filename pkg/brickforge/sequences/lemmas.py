"""
Constructive witnesses for the sequence lemmas.

``reorder`` moves a conservative-quadratic step past a later step whose
fundament avoids its new vertices. ``build_quadonquad`` stacks two
conservative-quadratic steps, the second touching a new vertex of the
first, and exhibits an edge whose deletion leaves a brick.
"""

import logging
import random
from dataclasses import dataclass, replace
from itertools import product
from typing import Dict, List, Optional, Tuple

from brickforge.bricks import (
    CertificateReport,
    is_bicritical,
    is_brick,
    is_minimal_brick,
    is_three_connected,
)
from brickforge.exceptions import (
    ExtensionError,
    FundamentConflict,
    FundamentMismatch,
    LemmaViolation,
    PreconditionUnmet,
    SpecInvariantViolated,
)
from brickforge.extensions import (
    Bilinear,
    ExtensionRecord,
    ExtensionSpec,
    Pseudolinear,
    Quasiquadratic,
    StrictLinear1,
    StrictLinear2,
    StrictLinear3,
    apply,
    enumerate_specs,
    validate_quasiquadratic,
)
from brickforge.graphs.core import Edge, Graph, delete_edge, delete_vertices, normalize_edge, relabel

logger = logging.getLogger(__name__)


def _read_quasiquadratic(
    before: Graph, after: Graph, new_vertices: Tuple[int, int]
) -> Optional[Tuple[Quasiquadratic, ExtensionRecord, Tuple[int, int]]]:
    p, q = new_vertices
    if after.n != before.n + 2 or p == q or not after.has_edge(p, q):
        return None
    rest = [v for v in after.vertices() if v not in (p, q)]
    found = None
    for first, second in ((p, q), (q, p)):
        target = relabel(after, rest + [first, second])
        a, b = before.n, before.n + 1
        upper = [w for w in target.neighbors(a) if w != b]
        lower = [w for w in target.neighbors(b) if w != a]
        if len(upper) != 2 or len(lower) != 2:
            continue
        for (u, x), (v, y) in product((upper, upper[::-1]), (lower, lower[::-1])):
            spec = Quasiquadratic(u, v, x, y)
            try:
                validate_quasiquadratic(before, spec)
            except SpecInvariantViolated:
                continue
            graph, record = apply(before, spec)
            if graph != target:
                continue
            if record.conservative:
                return spec, record, (first, second)
            if found is None:
                found = (spec, record, (first, second))
    return found


def recognise_quasiquadratic(
    before: Graph, after: Graph, new_vertices: Tuple[int, int]
) -> Quasiquadratic:
    """
    The quasiquadratic spec taking ``before`` to ``after``.

    ``new_vertices`` are ids of ``after``; its other vertices, in increasing
    order, correspond to ``before``'s ids ``0..n-1``. A conservative reading
    is preferred when several specs fit.
    """
    reading = _read_quasiquadratic(before, after, new_vertices)
    if reading is None:
        raise SpecInvariantViolated(
            "quasiquadratic", f"no quasiquadratic step adds {new_vertices} to the pre-graph"
        )
    return reading[0]


def translate_spec(spec: ExtensionSpec, dropped: frozenset) -> ExtensionSpec:
    """The same extension with ``dropped`` removed from every neighbourhood partition."""
    if isinstance(spec, StrictLinear1):
        return replace(spec, bisplit=spec.bisplit.without(dropped))
    if isinstance(spec, StrictLinear2):
        return replace(
            spec,
            bisplit_v=spec.bisplit_v.without(dropped),
            bisplit_u=spec.bisplit_u.without(dropped),
        )
    if isinstance(spec, StrictLinear3):
        return replace(spec, bisplit=spec.bisplit.without(dropped), p1=spec.p1 - dropped)
    if isinstance(spec, Bilinear):
        return replace(spec, bisplit=spec.bisplit.without(dropped))
    if isinstance(spec, Pseudolinear):
        return replace(spec, n1=spec.n1 - dropped, n2=spec.n2 - dropped)
    return spec


@dataclass(frozen=True)
class ReorderResult:
    bprime: Graph
    first: ExtensionRecord
    second: ExtensionRecord
    new_vertices: Tuple[int, int]


def reorder(a: Graph, rec_b: ExtensionRecord, rec_c: ExtensionRecord) -> ReorderResult:
    """
    Turn ``A -> B -> C`` into ``A -> B' -> C`` with ``B' -> C`` conservative-quadratic.

    ``rec_b`` must be a conservative-quadratic step on ``a`` with new
    vertices p, q; ``rec_c`` a step on its result whose fundament avoids
    p and q. ``B'`` is ``C - {p, q}`` with ids compacted.
    """
    if not rec_b.is_conservative_quadratic:
        raise PreconditionUnmet(f"first step must be conservative-quadratic, got {rec_b.variant.value}")
    p, q = rec_b.new_vertices
    clash = sorted({p, q} & rec_c.fundament)
    if clash:
        raise FundamentConflict(
            f"new vertices {clash} lie in the fundament {sorted(rec_c.fundament)} of the second step"
        )

    b, _ = apply(a, rec_b.spec)
    c, _ = apply(b, rec_c.spec)
    bprime_spec = translate_spec(rec_c.spec, frozenset((p, q)))
    try:
        bprime, first = apply(a, bprime_spec)
    except ExtensionError as exc:
        logger.error(f"second step does not carry over to the first graph: {exc}")
        raise LemmaViolation(f"{rec_c.spec} does not apply without {p}, {q}: {exc}") from exc

    expected, _ = delete_vertices(c, (p, q))
    if bprime != expected:
        logger.error(f"A -> B' does not reproduce C - {{{p}, {q}}}")
        raise LemmaViolation(f"applying {bprime_spec} to A does not give C - {{{p}, {q}}}")
    report = is_brick(bprime)
    if not report:
        logger.error(f"B' is not a brick: {report.witness}")
        raise LemmaViolation(f"B' = C - {{{p}, {q}}} is not a brick: {report.witness}")

    reading = _read_quasiquadratic(bprime, c, (p, q))
    if reading is None or not reading[1].conservative:
        logger.error(f"C is not a conservative-quadratic extension of B' with new vertices {p}, {q}")
        raise LemmaViolation(f"B' -> C is not conservative-quadratic on {p}, {q}")
    _, second, _ = reading
    if (second.delta_n, second.delta_m) != (2, 5):
        raise LemmaViolation(f"B' -> C gains ({second.delta_n}, {second.delta_m}), expected (2, 5)")
    logger.debug(f"reordered {rec_c.variant.value} ahead of the quadratic step on {p}, {q}")
    return ReorderResult(bprime, first, second, (p, q))


def random_reorder_triple(
    g: Graph, rng: random.Random, attempts: int = 50
) -> Tuple[ExtensionRecord, ExtensionRecord]:
    """Draw a conservative-quadratic step on ``g`` and a later step avoiding its new vertices."""
    quadratics = [
        spec
        for spec in enumerate_specs(g, [Quasiquadratic.variant], reduced=True)
        if not g.has_edge(spec.u, spec.v)
    ]
    if not quadratics:
        raise PreconditionUnmet(f"{g!r} admits no conservative-quadratic step")
    for _ in range(attempts):
        b, rec_b = apply(g, rng.choice(quadratics))
        p, q = rec_b.new_vertices
        candidates = list(enumerate_specs(b, reduced=True))
        rng.shuffle(candidates)
        for spec in candidates:
            try:
                _, rec_c = apply(b, spec)
            except ExtensionError:
                continue
            if p not in rec_c.fundament and q not in rec_c.fundament:
                return rec_b, rec_c
    raise PreconditionUnmet(f"no reorderable pair found on {g!r} after {attempts} attempts")


CLAIMS = "claims"
UPPER_VPRIME = "upper-vprime"
UPPER_X = "upper-x"


@dataclass(frozen=True)
class QuadOnQuadWitness:
    """
    Two stacked conservative-quadratic steps and the deletable edge they force.

    ``names`` maps the roles u, v, x, y, u', v' (first step) and r, s, t,
    r', s' (second step: r' joins u' and r, s' joins s and t) to ids of
    the final graph.
    """

    gprime: Graph
    gpp: Graph
    first: ExtensionRecord
    second: ExtensionRecord
    names: Dict[str, int]
    conditions: Dict[str, bool]
    route: str
    edge: Edge
    minimality: CertificateReport
    bicritical: Optional[CertificateReport] = None
    three_connected: Optional[CertificateReport] = None


def _mirror(spec: Quasiquadratic) -> Quasiquadratic:
    return Quasiquadratic(spec.v, spec.u, spec.y, spec.x)


def _roles(first: Quasiquadratic, second: Quasiquadratic, up: int, vp: int, n: int) -> Dict[str, int]:
    """Names for one reading; ``first``/``second`` are already oriented so u' = up lies in {U, X}."""
    if second.u == up:
        r = second.x
    else:
        r = second.u
    # applying ``second`` as oriented puts r' at n and s' at n + 1
    return {
        "u": first.u, "v": first.v, "x": first.x, "y": first.y,
        "u'": up, "v'": vp,
        "r": r, "s": second.v, "t": second.y,
        "r'": n, "s'": n + 1,
    }


def _side_conditions(names: Dict[str, int]) -> Dict[str, bool]:
    st = {names["s"], names["t"]}
    return {
        "v'∉{s,t}": names["v'"] not in st,
        "x∉{s,t}": names["x"] not in st,
        "r∉{x,v'}": names["r"] not in (names["x"], names["v'"]),
    }


def _readings(
    first: Quasiquadratic, second: Quasiquadratic, new: Tuple[int, int], n: int
) -> List[Dict[str, int]]:
    readings = []
    u_new, v_new = new
    for up, vp, oriented in ((u_new, v_new, first), (v_new, u_new, _mirror(first))):
        for candidate in (second, _mirror(second)):
            if up in (candidate.u, candidate.x):
                names = _roles(oriented, candidate, up, vp, n)
                if candidate is not second:
                    names["r'"], names["s'"] = n + 1, n
                readings.append(names)
                break
    return readings


def build_quadonquad(g: Graph, first: Quasiquadratic, second: Quasiquadratic) -> QuadOnQuadWitness:
    """
    Apply ``first`` to the brick ``g`` and ``second`` to the result.

    Both steps must be conservative, and the fundament of ``second`` must
    contain a new vertex of ``first``. The returned witness names an edge
    ``e`` with ``G'' - e`` a brick, so ``G''`` is not minimal.
    """
    if g.has_edge(first.u, first.v):
        raise SpecInvariantViolated("uv∉E", f"first step joins adjacent {first.u}, {first.v}")
    gprime, rec_first = apply(g, first)
    if gprime.has_edge(second.u, second.v):
        raise SpecInvariantViolated("uv∉E", f"second step joins adjacent {second.u}, {second.v}")
    gpp, rec_second = apply(gprime, second)

    new = rec_first.new_vertices
    if not set(new) & rec_second.fundament:
        raise FundamentMismatch(
            f"fundament {sorted(rec_second.fundament)} of the second step misses {new}"
        )

    readings = _readings(first, second, new, gprime.n)
    if not readings:
        raise FundamentMismatch(f"no reading places a new vertex of {new} next to r'")
    chosen = next((names for names in readings if all(_side_conditions(names).values())), readings[0])
    conditions = _side_conditions(chosen)

    if all(conditions.values()):
        route = CLAIMS
        edge = normalize_edge(chosen["u"], chosen["u'"])
    elif not conditions["v'∉{s,t}"] or chosen["r"] == chosen["v'"]:
        route = UPPER_VPRIME
        edge = normalize_edge(chosen["u'"], chosen["v'"])
    else:
        route = UPPER_X
        edge = normalize_edge(chosen["x"], chosen["u'"])

    reduced = delete_edge(gpp, *edge)
    bicritical = three_connected = None
    if route == CLAIMS:
        bicritical = is_bicritical(reduced)
        three_connected = is_three_connected(reduced)
        survives = bool(bicritical) and bool(three_connected)
    else:
        survives = bool(is_brick(reduced))
    if not survives:
        logger.error(f"route {route}: G'' - {edge} is not a brick (names {chosen})")
        raise LemmaViolation(f"G'' - {edge} is not a brick although route {route} applies")

    minimality = is_minimal_brick(gpp)
    if minimality:
        logger.error(f"G'' is minimal although {edge} is deletable")
        raise LemmaViolation(f"G'' reported minimal but {edge} is deletable")

    logger.debug(f"quadonquad route {route}, deletable edge {edge}")
    return QuadOnQuadWitness(
        gprime=gprime,
        gpp=gpp,
        first=rec_first,
        second=rec_second,
        names=chosen,
        conditions=conditions,
        route=route,
        edge=edge,
        minimality=minimality,
        bicritical=bicritical,
        three_connected=three_connected,
    )


def quadonquad_candidates(gprime: Graph, new: Tuple[int, int], first: Quasiquadratic) -> List[Quasiquadratic]:
    """Conservative second steps on ``gprime`` with u' = ``new[0]`` as U and the side conditions met."""
    up, vp = new
    specs = []
    for spec in enumerate_specs(gprime, [Quasiquadratic.variant]):
        if spec.u != up or gprime.has_edge(spec.u, spec.v):
            continue
        names = _roles(first, spec, up, vp, gprime.n)
        if all(_side_conditions(names).values()):
            specs.append(spec)
    return specs


def random_quadonquad(g: Graph, rng: random.Random, attempts: int = 20) -> QuadOnQuadWitness:
    """A random instance whose side conditions hold, so the claims route applies."""
    firsts = [
        spec
        for spec in enumerate_specs(g, [Quasiquadratic.variant], reduced=True)
        if not g.has_edge(spec.u, spec.v)
    ]
    if not firsts:
        raise PreconditionUnmet(f"{g!r} admits no conservative-quadratic step")
    for _ in range(attempts):
        first = rng.choice(firsts)
        gprime, record = apply(g, first)
        seconds = quadonquad_candidates(gprime, record.new_vertices, first)
        if seconds:
            return build_quadonquad(g, first, rng.choice(seconds))
    raise PreconditionUnmet(f"no quadonquad instance found on {g!r} after {attempts} attempts")


