import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List

from brickforge.generator import GeneratedBrick, GenerationResult
from brickforge.graphs.io import format_graph6
from brickforge.sequences import format_sequence
from brickforge.sequences.codec import SEPARATOR

logger = logging.getLogger(__name__)

DEFAULT_STEM = "bricks"


@dataclass
class PersistOptions:
    output_dir: str
    stem: str = DEFAULT_STEM
    write_sequences: bool = True


@dataclass
class PersistSummary:
    graphs_written: int = 0
    sequences_written: int = 0
    sequences_missing: int = 0
    files: List[str] = field(default_factory=list)


def persist_results(result: GenerationResult, options: PersistOptions) -> PersistSummary:
    """
    Write ``<stem>.g6``, ``<stem>.seq`` and ``<stem>.summary.txt``.

    Graphs are written sorted by order and canonical form. Petersen has no
    generating sequence and is left out of the sequence file.
    """
    summary = PersistSummary()
    directory = Path(options.output_dir)
    directory.mkdir(parents=True, exist_ok=True)
    bricks = result.emitted()

    graph_path = directory / f"{options.stem}.g6"
    graph_path.write_text(
        "".join(format_graph6(brick.graph) + "\n" for brick in bricks), encoding="ascii"
    )
    summary.graphs_written = len(bricks)
    summary.files.append(str(graph_path))

    if options.write_sequences:
        blocks = []
        for brick in bricks:
            if brick.sequence is None:
                summary.sequences_missing += 1
                continue
            blocks.append(format_sequence(brick.sequence, comment=_describe(brick)))
        sequence_path = directory / f"{options.stem}.seq"
        sequence_path.write_text(f"{SEPARATOR}\n".join(blocks), encoding="utf-8")
        summary.sequences_written = len(blocks)
        summary.files.append(str(sequence_path))

    summary_path = directory / f"{options.stem}.summary.txt"
    summary_path.write_text("\n".join(summary_lines(result)) + "\n", encoding="utf-8")
    summary.files.append(str(summary_path))

    logger.info(f"wrote {summary.graphs_written} graphs to {directory}: {', '.join(summary.files)}")
    return summary


def summary_lines(result: GenerationResult) -> List[str]:
    lines = [
        f"max_n={result.max_n}",
        f"variants={','.join(sorted(variant.value for variant in result.variants))}",
        f"minimal_only={'yes' if result.minimal_only else 'no'}",
        f"explored={result.explored}",
        f"emitted={len(result.bricks)}",
    ]
    lines.extend(f"n={n} count={count}" for n, count in result.layer_sizes().items())
    return lines


def _describe(brick: GeneratedBrick) -> str:
    text = f"n={brick.n} m={brick.graph.m} minimal={'yes' if brick.minimal else 'no'}"
    if brick.identifications:
        text += f" identifications={','.join(brick.identifications)}"
    return text
