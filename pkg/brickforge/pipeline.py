import logging
from pathlib import Path
from typing import List, Optional, Tuple

from brickforge.adapters import PersistOptions, PersistSummary, persist_results
from brickforge.config.loader import GenerationProfile, load_generation_profile
from brickforge.exceptions import BrickforgeError
from brickforge.generator import (
    CorpusIssue,
    CorpusReport,
    GenerationResult,
    generate_bricks,
    verify_corpus,
)
from brickforge.generator.corpus import ERROR_POLICIES
from brickforge.graphs.core import Graph
from brickforge.graphs.io import GraphFormat, read_graphs

logger = logging.getLogger(__name__)

SUFFIX_FORMATS = {
    ".g6": GraphFormat.GRAPH6,
    ".graph6": GraphFormat.GRAPH6,
    ".el": GraphFormat.EDGELIST,
    ".edgelist": GraphFormat.EDGELIST,
}


def load_corpus(
    directory: str,
    fmt: Optional[GraphFormat] = None,
    error_policy: str = "continue",
    report: Optional[CorpusReport] = None,
) -> List[Tuple[str, Graph]]:
    """
    Read every graph file in ``directory`` (sorted by name).

    Without ``fmt`` the format follows the suffix and files with other
    suffixes are skipped. Graph6 files contribute one entry per line, named
    ``<file>:<line>``.
    """
    if error_policy not in ERROR_POLICIES:
        raise ValueError(f"error_policy must be one of {sorted(ERROR_POLICIES)}")
    active_report = report if report is not None else CorpusReport()
    root = Path(directory)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {directory}")

    entries: List[Tuple[str, Graph]] = []
    for path in sorted(p for p in root.iterdir() if p.is_file()):
        file_fmt = GraphFormat(fmt) if fmt is not None else SUFFIX_FORMATS.get(path.suffix.lower())
        if file_fmt is None:
            logger.debug(f"skipping {path.name}: unknown suffix")
            continue
        try:
            graphs = read_graphs(str(path), file_fmt)
        except (BrickforgeError, OSError, UnicodeDecodeError) as exc:
            if error_policy == "fail":
                raise
            logger.warning(f"skipping unreadable corpus file {path.name}: {exc}")
            active_report.record(CorpusIssue(path.name, f"unreadable: {exc}"))
            continue
        if len(graphs) == 1:
            entries.append((path.name, graphs[0]))
        else:
            entries.extend((f"{path.name}:{index}", g) for index, g in enumerate(graphs, start=1))

    logger.info(f"loaded {len(entries)} graphs from {directory}")
    return entries


def run_verification(
    directory: str,
    fmt: Optional[GraphFormat] = None,
    error_policy: str = "continue",
    report: Optional[CorpusReport] = None,
) -> CorpusReport:
    active_report = report if report is not None else CorpusReport()
    entries = load_corpus(directory, fmt, error_policy=error_policy, report=active_report)
    return verify_corpus(entries, error_policy=error_policy, report=active_report)


def run_generation(
    profile: GenerationProfile,
    output_dir: Optional[str] = None,
    progress: bool = False,
) -> Tuple[GenerationResult, Optional[PersistSummary]]:
    result = generate_bricks(
        profile.max_n,
        variants=profile.variants,
        minimal_only=profile.minimal_only,
        jobs=profile.jobs,
        include_petersen=profile.include_petersen,
        progress=progress,
    )
    target = output_dir or profile.output_dir
    if not target:
        return result, None
    summary = persist_results(result, PersistOptions(output_dir=target, stem=profile.profile_id))
    return result, summary


def run_generation_from_file(
    profile_path: str, output_dir: Optional[str] = None
) -> Tuple[GenerationResult, Optional[PersistSummary]]:
    return run_generation(load_generation_profile(profile_path), output_dir=output_dir)
