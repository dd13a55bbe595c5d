"""
Line-oriented text form of extension specs.

One spec per line: the variant tag followed by ``key=value`` fields
separated by single spaces. Vertex sets are comma lists in increasing
order; the optional ``choices`` field keeps its given order.

    SL1 v=0 n1=1,2 n2=3,4 u0=5
    SL2 v=0 n1=1,2 n2=3,4 u=5 un1=1,6 un2=7,8
    SL3 v=0 n1=1,2,3 n2=4,5 p1=1
    BILIN u=0 v=5 w=3 n1=1,2 n2=3,4
    PSEUDO u=0 v=5 n1=1,2 n2=3,4
    QQUAD u=0 v=3 x=1 y=4
    QQUART u=0 v=3 x=1 y=4
"""

from typing import Callable, Dict, Iterable, List, Optional, Tuple

from brickforge.exceptions import GraphParseError
from brickforge.extensions.specs import (
    CHOICE_COUNTS,
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

# field name -> kind, in serialisation order
_FIELDS: Dict[Variant, Tuple[Tuple[str, str], ...]] = {
    Variant.STRICT_LINEAR_1: (("v", "int"), ("n1", "set"), ("n2", "set"), ("u0", "int")),
    Variant.STRICT_LINEAR_2: (
        ("v", "int"), ("n1", "set"), ("n2", "set"), ("u", "int"), ("un1", "set"), ("un2", "set"),
    ),
    Variant.STRICT_LINEAR_3: (("v", "int"), ("n1", "set"), ("n2", "set"), ("p1", "set")),
    Variant.BILINEAR: (("u", "int"), ("v", "int"), ("w", "int"), ("n1", "set"), ("n2", "set")),
    Variant.PSEUDOLINEAR: (("u", "int"), ("v", "int"), ("n1", "set"), ("n2", "set")),
    Variant.QUASIQUADRATIC: (("u", "int"), ("v", "int"), ("x", "int"), ("y", "int")),
    Variant.QUASIQUARTIC: (("u", "int"), ("v", "int"), ("x", "int"), ("y", "int")),
}

_CHOICES = "choices"


def _join(values: Iterable[int]) -> str:
    return ",".join(str(value) for value in values)


def _values(spec: ExtensionSpec) -> Dict[str, object]:
    if isinstance(spec, StrictLinear1):
        split = spec.bisplit
        return {"v": split.v, "n1": split.n1, "n2": split.n2, "u0": spec.u0}
    if isinstance(spec, StrictLinear2):
        first, second = spec.bisplit_v, spec.bisplit_u
        return {
            "v": first.v, "n1": first.n1, "n2": first.n2,
            "u": second.v, "un1": second.n1, "un2": second.n2,
        }
    if isinstance(spec, StrictLinear3):
        split = spec.bisplit
        return {"v": split.v, "n1": split.n1, "n2": split.n2, "p1": spec.p1}
    if isinstance(spec, Bilinear):
        return {"u": spec.u, "v": spec.v, "w": spec.w, "n1": spec.bisplit.n1, "n2": spec.bisplit.n2}
    if isinstance(spec, Pseudolinear):
        return {"u": spec.u, "v": spec.v, "n1": spec.n1, "n2": spec.n2}
    return {"u": spec.u, "v": spec.v, "x": spec.x, "y": spec.y}


def format_spec(spec: ExtensionSpec) -> str:
    values = _values(spec)
    parts = [spec.variant.value]
    for name, kind in _FIELDS[spec.variant]:
        value = values[name]
        parts.append(f"{name}={_join(sorted(value)) if kind == 'set' else value}")
    choices = getattr(spec, "choices", ())
    if choices:
        parts.append(f"{_CHOICES}={_join(choices)}")
    return " ".join(parts)


def parse_spec(text: str, line: Optional[int] = None) -> ExtensionSpec:
    tokens = _tokens(text)
    if not tokens:
        raise GraphParseError("empty spec", line=line, position=0)

    tag, tag_position = tokens[0]
    try:
        variant = Variant(tag.upper())
    except ValueError:
        known = ", ".join(v.value for v in Variant)
        raise GraphParseError(
            f"unknown variant {tag!r} (expected one of {known})", line, tag_position
        ) from None

    kinds = dict(_FIELDS[variant])
    if CHOICE_COUNTS[variant]:
        kinds[_CHOICES] = "list"
    fields: Dict[str, object] = {}
    for token, position in tokens[1:]:
        name, sep, raw = token.partition("=")
        if not sep:
            raise GraphParseError(f"expected key=value, got {token!r}", line, position)
        if name not in kinds:
            raise GraphParseError(f"unknown field {name!r} for {variant.value}", line, position)
        if name in fields:
            raise GraphParseError(f"field {name!r} given twice", line, position)
        fields[name] = _parse_value(raw, kinds[name], line, position + len(name) + 1)

    missing = [name for name, _ in _FIELDS[variant] if name not in fields]
    if missing:
        raise GraphParseError(
            f"{variant.value} is missing {', '.join(missing)}", line, len(text.rstrip())
        )
    return _BUILDERS[variant](fields, tuple(fields.get(_CHOICES, ())))


def _tokens(text: str) -> List[Tuple[str, int]]:
    tokens = []
    position = 0
    for part in text.split(" "):
        if part:
            tokens.append((part.strip(), position))
        position += len(part) + 1
    return tokens


def _parse_value(raw: str, kind: str, line: Optional[int], position: int):
    items = raw.split(",") if kind != "int" else [raw]
    values = []
    offset = position
    for item in items:
        if not item.isdigit():
            raise GraphParseError(f"not a non-negative integer: {item!r}", line, offset)
        values.append(int(item))
        offset += len(item) + 1
    if kind == "int":
        return values[0]
    if kind == "set":
        if len(set(values)) != len(values):
            raise GraphParseError(f"repeated vertex in {raw!r}", line, position)
        return frozenset(values)
    return tuple(values)


def _sl1(f: Dict, choices: Tuple[int, ...]) -> ExtensionSpec:
    return StrictLinear1(BisplitSpec(f["v"], f["n1"], f["n2"]), f["u0"], choices)


def _sl2(f: Dict, choices: Tuple[int, ...]) -> ExtensionSpec:
    return StrictLinear2(
        BisplitSpec(f["v"], f["n1"], f["n2"]), BisplitSpec(f["u"], f["un1"], f["un2"]), choices
    )


def _sl3(f: Dict, choices: Tuple[int, ...]) -> ExtensionSpec:
    return StrictLinear3(BisplitSpec(f["v"], f["n1"], f["n2"]), f["p1"], choices)


def _bilin(f: Dict, choices: Tuple[int, ...]) -> ExtensionSpec:
    return Bilinear(f["u"], f["v"], f["w"], BisplitSpec(f["u"], f["n1"], f["n2"]), choices)


def _pseudo(f: Dict, choices: Tuple[int, ...]) -> ExtensionSpec:
    return Pseudolinear(f["u"], f["v"], f["n1"], f["n2"], choices)


def _quad(f: Dict, choices: Tuple[int, ...]) -> ExtensionSpec:
    return Quasiquadratic(f["u"], f["v"], f["x"], f["y"])


def _quart(f: Dict, choices: Tuple[int, ...]) -> ExtensionSpec:
    return Quasiquartic(f["u"], f["v"], f["x"], f["y"])


_BUILDERS: Dict[Variant, Callable[[Dict, Tuple[int, ...]], ExtensionSpec]] = {
    Variant.STRICT_LINEAR_1: _sl1,
    Variant.STRICT_LINEAR_2: _sl2,
    Variant.STRICT_LINEAR_3: _sl3,
    Variant.BILINEAR: _bilin,
    Variant.PSEUDOLINEAR: _pseudo,
    Variant.QUASIQUADRATIC: _quad,
    Variant.QUASIQUARTIC: _quart,
}
