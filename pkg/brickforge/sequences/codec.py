"""
Sequence text format.

    # comments and blank lines are ignored
    start PRISM
    QQUART u=0 v=3 x=1 y=4
    QQUAD u=2 v=4 x=8 y=7

Files holding several sequences separate them with a line ``---``.
"""

from typing import List, Tuple

from brickforge.exceptions import GraphParseError
from brickforge.extensions import ExtensionSpec, format_spec, parse_spec
from brickforge.sequences.build import BrickSequence, StartGraph

SEPARATOR = "---"


def format_sequence(seq: BrickSequence, comment: str = "") -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"start {seq.start.value}")
    lines.extend(format_spec(record.spec) for record in seq.steps)
    return "\n".join(lines) + "\n"


def parse_sequence(text: str, first_line: int = 1) -> Tuple[StartGraph, List[ExtensionSpec]]:
    start = None
    specs: List[ExtensionSpec] = []
    for number, raw in enumerate(text.splitlines(), start=first_line):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if start is None:
            keyword, _, value = line.strip().partition(" ")
            if keyword != "start":
                raise GraphParseError(f"expected 'start K4|PRISM', got {line.strip()!r}", number, 0)
            try:
                start = StartGraph(value.strip().upper())
            except ValueError:
                raise GraphParseError(
                    f"unknown start graph {value.strip()!r}", number, len(keyword) + 1
                ) from None
            continue
        specs.append(parse_spec(line, line=number))
    if start is None:
        raise GraphParseError("missing 'start' line", first_line, 0)
    return start, specs


def format_sequences(sequences: List[BrickSequence]) -> str:
    return f"{SEPARATOR}\n".join(format_sequence(seq) for seq in sequences)


def parse_sequences(text: str) -> List[Tuple[StartGraph, List[ExtensionSpec]]]:
    blocks: List[Tuple[StartGraph, List[ExtensionSpec]]] = []
    current: List[str] = []
    first = 1
    for number, raw in enumerate(text.splitlines() + [SEPARATOR], start=1):
        if raw.strip() == SEPARATOR:
            if any(line.split("#", 1)[0].strip() for line in current):
                blocks.append(parse_sequence("\n".join(current), first_line=first))
            current = []
            first = number + 1
            continue
        current.append(raw)
    return blocks
