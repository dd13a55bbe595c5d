from typing import Callable, Dict, Tuple

from brickforge.extensions.specs import ExtensionRecord, ExtensionSpec, Variant
from brickforge.graphs.core import Graph

Applier = Callable[[Graph, ExtensionSpec], Tuple[Graph, ExtensionRecord]]


class ExtensionRegistry:
    def __init__(self) -> None:
        self._registry: Dict[Variant, Applier] = {}

    def register(self, variant: Variant, func: Applier) -> None:
        if not isinstance(variant, Variant):
            raise ValueError(f"Extension variant must be a Variant, got {variant!r}")
        if variant in self._registry:
            raise ValueError(f"Extension already registered: {variant.value}")
        self._registry[variant] = func

    def get(self, variant: Variant) -> Applier:
        if variant not in self._registry:
            raise KeyError(f"Unknown extension: {variant}")
        return self._registry[variant]

    def variants(self) -> Tuple[Variant, ...]:
        return tuple(v for v in Variant if v in self._registry)

    def apply(self, g: Graph, spec: ExtensionSpec) -> Tuple[Graph, ExtensionRecord]:
        func = self.get(spec.variant)
        return func(g, spec)


registry = ExtensionRegistry()


def register_extension(variant: Variant) -> Callable[[Applier], Applier]:
    def decorator(func: Applier) -> Applier:
        registry.register(variant, func)
        return func

    return decorator


def apply_extension(g: Graph, spec: ExtensionSpec) -> Tuple[Graph, ExtensionRecord]:
    return registry.apply(g, spec)
