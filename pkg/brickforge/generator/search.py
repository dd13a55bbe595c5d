"""
Extension-driven enumeration of bricks and minimal bricks.

The search runs layer by layer in increasing order. Every layer's parents
are expanded in canonical-form order (optionally across a process pool)
and the children are merged in that same order, so the first sequence
reaching a form becomes its exemplar whatever the worker count.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from tqdm import tqdm

from brickforge.bricks import DeletableEdge, is_minimal_brick
from brickforge.canonical import CanonicalForm, canonical_form
from brickforge.config import settings
from brickforge.exceptions import BadParameter, CapExceeded, LemmaViolation
from brickforge.extensions import (
    ALL_VARIANTS,
    VARIANT_TABLE,
    ExtensionRecord,
    Variant,
    apply,
    enumerate_specs,
)
from brickforge.graphs.core import Graph
from brickforge.graphs.named import petersen
from brickforge.sequences import BrickSequence, StartGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratedBrick:
    form: CanonicalForm
    graph: Graph
    minimal: bool
    sequence: Optional[BrickSequence] = None

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def identifications(self) -> Tuple[str, ...]:
        """Optional identifications used anywhere along the exemplar sequence."""
        if self.sequence is None:
            return ()
        found = []
        for record in self.sequence.steps:
            found.extend(f"{record.variant.value}:{tag}" for tag in record.identifications)
        return tuple(dict.fromkeys(found))


@dataclass
class GenerationResult:
    max_n: int
    variants: FrozenSet[Variant]
    minimal_only: bool
    bricks: Dict[CanonicalForm, GeneratedBrick] = field(default_factory=dict)
    explored: int = 0

    @property
    def forms(self) -> FrozenSet[CanonicalForm]:
        return frozenset(self.bricks)

    def emitted(self) -> List[GeneratedBrick]:
        """Emitted bricks sorted by order, then canonical form."""
        return [self.bricks[form] for form in sorted(self.bricks, key=lambda f: (f.n, f))]

    def forms_of_order(self, n: int) -> FrozenSet[CanonicalForm]:
        return frozenset(form for form in self.bricks if form.n == n)

    def layer_sizes(self) -> Dict[int, int]:
        sizes: Dict[int, int] = {}
        for form in self.bricks:
            sizes[form.n] = sizes.get(form.n, 0) + 1
        return dict(sorted(sizes.items()))


@dataclass(frozen=True)
class _Child:
    form: CanonicalForm
    graph: Graph
    record: ExtensionRecord
    minimal: bool


_Task = Tuple[BrickSequence, FrozenSet[Variant], int, bool, FrozenSet[CanonicalForm]]


def _expand(task: _Task) -> List[_Child]:
    """Children of one parent, one per new canonical form, in spec order."""
    parent, variants, max_n, prune, known = task
    graph = parent.final
    children: List[_Child] = []
    local = set()
    fitting = [v for v in variants if graph.n + VARIANT_TABLE[v].delta_n <= max_n]
    if not fitting:
        return children
    for spec in enumerate_specs(graph, fitting, reduced=True):
        child, record = apply(graph, spec)
        form = canonical_form(child)
        if form in known or form in local:
            continue
        local.add(form)
        minimality = is_minimal_brick(child)
        # a brick fails minimality only through a deletable edge
        if not minimality and not isinstance(minimality.witness, DeletableEdge):
            logger.error(f"{spec} applied to a brick gave a non-brick: {minimality.witness}")
            raise LemmaViolation(f"strict extension {spec} of {graph!r} is not a brick")
        if prune and not minimality:
            continue
        children.append(_Child(form, child, record, bool(minimality)))
    return children


def _check_bounds(max_n: int, cap: int) -> None:
    if max_n % 2 or max_n < 4:
        raise BadParameter(f"max_n must be even and at least 4, got {max_n}")
    if max_n > cap:
        raise CapExceeded(f"max_n={max_n} exceeds the enumeration cap {cap}")


def generate_bricks(
    max_n: int,
    variants: Optional[Iterable[Variant]] = None,
    minimal_only: bool = True,
    prune: Optional[bool] = None,
    jobs: Optional[int] = None,
    include_petersen: bool = True,
    progress: bool = False,
    cap: Optional[int] = None,
) -> GenerationResult:
    """
    Breadth-first closure of K4 and the prism under strict extensions.

    With ``minimal_only`` only minimal bricks are emitted. ``prune``
    (default: ``minimal_only``) drops non-minimal children instead of
    expanding them; passing ``prune=False`` with ``minimal_only`` explores
    every brick and filters at emission.
    """
    _check_bounds(max_n, settings.CAP if cap is None else min(cap, settings.HARD_CAP))
    selected = ALL_VARIANTS if variants is None else frozenset(variants)
    prune = minimal_only if prune is None else prune
    workers = jobs or settings.JOBS
    result = GenerationResult(max_n, selected, minimal_only)

    seen: Dict[CanonicalForm, bool] = {}
    layers: Dict[int, Dict[CanonicalForm, BrickSequence]] = {}
    for start in StartGraph:
        sequence = BrickSequence(start)
        if sequence.final.n <= max_n:
            form = canonical_form(sequence.final)
            seen[form] = True
            layers.setdefault(sequence.final.n, {})[form] = sequence
            result.bricks[form] = GeneratedBrick(form, sequence.final, True, sequence)

    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in range(4, max_n + 1, 2):
            layer = layers.pop(n, {})
            if not layer:
                continue
            parents = [layer[form] for form in sorted(layer)]
            known = frozenset(seen)
            tasks = [(parent, selected, max_n, prune, known) for parent in parents]
            mapped = executor.map(_expand, tasks) if executor else map(_expand, tasks)
            expansions = tqdm(
                zip(parents, mapped), total=len(tasks), desc=f"n={n}", disable=not progress
            )
            for parent, children in expansions:
                result.explored += 1
                for child in children:
                    if child.form in seen:
                        continue
                    seen[child.form] = child.minimal
                    sequence = parent.extended(child.record, child.graph)
                    layers.setdefault(child.graph.n, {})[child.form] = sequence
                    if child.minimal or not minimal_only:
                        result.bricks[child.form] = GeneratedBrick(
                            child.form, child.graph, child.minimal, sequence
                        )
            logger.info(
                f"layer n={n}: expanded {len(parents)} parents, "
                f"{sum(len(v) for v in layers.values())} graphs pending"
            )
    finally:
        if executor:
            executor.shutdown()

    if include_petersen and max_n >= 10:
        graph = petersen()
        form = canonical_form(graph)
        if form not in result.bricks:
            result.bricks[form] = GeneratedBrick(form, graph, True)
    logger.info(f"generated {len(result.bricks)} bricks up to n={max_n}: {result.layer_sizes()}")
    return result

