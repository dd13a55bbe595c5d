"""
Command-line surface: ``python -m brickforge <command> ...``.

Exit codes: 0 when the check passes, 1 when it fails, 2 on errors
(unreadable input, invalid specs, violated lemmas).
"""

import argparse
import logging
import logging.config
import random
import sys
from dataclasses import replace
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from brickforge.adapters import PersistOptions, persist_results, summary_lines
from brickforge.bricks import degree_stats, is_brick, is_minimal_brick
from brickforge.config import settings
from brickforge.config.loader import GenerationProfile, load_generation_profile
from brickforge.exceptions import BrickforgeError
from brickforge.extensions import apply, enumerate_specs, parse_spec, parse_variants
from brickforge.generator import generate_bricks
from brickforge.graphs.core import Graph
from brickforge.graphs.io import GraphFormat, read_graph, write_graph
from brickforge.graphs.named import named_graph
from brickforge.pipeline import run_verification
from brickforge.sequences import (
    build,
    parse_sequences,
    random_quadonquad,
    random_reorder_triple,
    reorder,
    stats,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

SWEEP_LEMMAS = ("extensions", "reorder", "quadonquad")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _read(path: str, fmt: str) -> Graph:
    return read_graph(path, GraphFormat(fmt))


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    graph = _read(args.path, args.format)
    brick = is_brick(graph)
    if not brick:
        out.write(f"brick: no ({brick.witness})\n")
        return EXIT_FAIL
    minimality = is_minimal_brick(graph)
    if minimality:
        out.write("brick: yes, minimal: yes\n")
    else:
        out.write(f"brick: yes, minimal: no ({minimality.witness})\n")
    if args.minimal and not minimality:
        return EXIT_FAIL
    return EXIT_OK


def cmd_extend(args: argparse.Namespace, out: TextIO) -> int:
    graph = _read(args.path, args.format)
    spec = parse_spec(args.spec)
    extended, record = apply(graph, spec)
    brick = is_brick(extended)
    lines = [
        f"variant={record.variant.value}",
        f"fundament={','.join(str(v) for v in sorted(record.fundament))}",
        f"new_vertices={','.join(str(v) for v in record.new_vertices)}",
        f"delta_n={record.delta_n}",
        f"delta_m={record.delta_m}",
    ]
    if record.conservative is not None:
        lines.append(f"conservative={_yes(record.conservative)}")
    if record.identifications:
        lines.append(f"identifications={','.join(record.identifications)}")
    lines.append(f"brick: {_yes(bool(brick))}" + ("" if brick else f" ({brick.witness})"))
    out.write("\n".join(lines) + "\n")

    text = write_graph(extended, GraphFormat(args.format))
    if args.output:
        with open(args.output, "w", encoding="ascii") as handle:
            handle.write(text)
        logger.info(f"wrote extended graph to {args.output}")
    else:
        out.write(text)
    return EXIT_OK if brick else EXIT_FAIL


def _profile_from_args(args: argparse.Namespace) -> GenerationProfile:
    if args.profile:
        profile = load_generation_profile(args.profile)
    else:
        if args.max_n is None:
            raise ValueError("generate needs --max-n or --profile")
        profile = GenerationProfile(profile_id="bricks", max_n=args.max_n)
    overrides: Dict[str, object] = {}
    if args.max_n is not None:
        overrides["max_n"] = args.max_n
    if args.variants:
        overrides["variants"] = parse_variants(args.variants.split(","))
    if args.minimal is not None:
        overrides["minimal_only"] = args.minimal
    if args.jobs is not None:
        overrides["jobs"] = args.jobs
    if args.petersen is not None:
        overrides["include_petersen"] = args.petersen
    if args.output_dir:
        overrides["output_dir"] = args.output_dir
    return replace(profile, **overrides)


def cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    profile = _profile_from_args(args)
    result = generate_bricks(
        profile.max_n,
        variants=profile.variants,
        minimal_only=profile.minimal_only,
        jobs=profile.jobs,
        include_petersen=profile.include_petersen,
        progress=args.progress,
    )
    for brick in result.emitted():
        out.write(write_graph(brick.graph, GraphFormat.GRAPH6))
    out.write("\n".join(f"# {line}" for line in summary_lines(result)) + "\n")
    if profile.output_dir:
        persist_results(result, PersistOptions(output_dir=profile.output_dir, stem=profile.profile_id))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    fmt = GraphFormat(args.format) if args.format else None
    report = run_verification(args.dir, fmt, error_policy=args.error_policy)
    for issue in report.issues:
        out.write(f"issue {issue.graph_id}: {issue.message}\n")
    for row in report.violations:
        out.write(f"violation {row.graph_id}: {row.as_row()}\n")
    out.write("\n".join(report.summary_lines()) + "\n")
    if args.csv:
        report.to_frame().to_csv(args.csv, index=False)
        logger.info(f"wrote {report.checked} rows to {args.csv}")
    return EXIT_FAIL if report.violations else EXIT_OK


def cmd_stats(args: argparse.Namespace, out: TextIO) -> int:
    result = degree_stats(_read(args.path, args.format))
    lines = [
        f"n={result.n}",
        f"m={result.m}",
        f"avg_degree={result.avg_degree}",
        f"n_deg3={result.n_deg3}",
        f"n_deg_le4={result.n_deg_le4}",
    ]
    lines.extend(f"degree_{degree}={count}" for degree, count in result.histogram.items())
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_sequence(args: argparse.Namespace, out: TextIO) -> int:
    with open(args.path, encoding="utf-8") as handle:
        blocks = parse_sequences(handle.read())
    if not blocks:
        raise ValueError(f"no sequence found in {args.path}")
    status = EXIT_OK
    for index, (start, specs) in enumerate(blocks):
        if index:
            out.write("---\n")
        sequence = build(start, specs)
        accounting = stats(sequence)
        final = sequence.final
        minimality = is_minimal_brick(final)
        out.write(f"start={start.value} steps={len(sequence)} n={final.n} m={final.m}\n")
        out.write("\n".join(accounting.as_lines()) + "\n")
        identity = final.n == accounting.n
        out.write(
            f"identity n=nu0+nu1+nu2+nu3: {final.n}="
            f"{accounting.nu0}+{accounting.nu1}+{accounting.nu2}+{accounting.nu3} {_yes(identity)}\n"
        )
        out.write(f"minimal: {_yes(bool(minimality))}\n")
        if not identity:
            status = EXIT_FAIL
    return status


def _sweep_extensions(g: Graph, rng: random.Random) -> str:
    spec = rng.choice(list(enumerate_specs(g)))
    extended, _ = apply(g, spec)
    if not is_brick(extended):
        return f"{spec} gave a non-brick"
    return ""


def _sweep_reorder(g: Graph, rng: random.Random) -> str:
    rec_b, rec_c = random_reorder_triple(g, rng)
    reorder(g, rec_b, rec_c)
    return ""


def _sweep_quadonquad(g: Graph, rng: random.Random) -> str:
    witness = random_quadonquad(g, rng)
    logger.debug(f"quadonquad route {witness.route}, edge {witness.edge}")
    return ""


_SWEEPS: Dict[str, Callable[[Graph, random.Random], str]] = {
    "extensions": _sweep_extensions,
    "reorder": _sweep_reorder,
    "quadonquad": _sweep_quadonquad,
}


def cmd_sweep(args: argparse.Namespace, out: TextIO) -> int:
    rng = random.Random(args.seed if args.seed is not None else settings.SEED)
    bases = [named_graph(name) for name in args.graphs.split(",")]
    run = _SWEEPS[args.lemma]
    failures = 0
    for index in range(args.count):
        message = run(bases[index % len(bases)], rng)
        if message:
            failures += 1
            out.write(f"failure {index}: {message}\n")
    out.write(f"lemma={args.lemma} instances={args.count} failures={failures}\n")
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brickforge", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--log-level", default=None,
                        help="DEBUG, INFO, WARNING or ERROR (default from settings)")
    commands = parser.add_subparsers(dest="command", required=True)

    formats = [fmt.value for fmt in GraphFormat]

    check = commands.add_parser("check", help="brick and minimal-brick verdict for a graph")
    check.add_argument("path")
    check.add_argument("--format", choices=formats, default=GraphFormat.EDGELIST.value)
    check.add_argument("--minimal", action="store_true", help="fail unless the graph is a minimal brick")
    check.set_defaults(handler=cmd_check)

    extend = commands.add_parser("extend", help="apply one strict extension")
    extend.add_argument("path")
    extend.add_argument("--spec", required=True, help='e.g. "QQUAD u=0 v=4 x=1 y=5"')
    extend.add_argument("--format", choices=formats, default=GraphFormat.EDGELIST.value)
    extend.add_argument("--output", default=None, help="write the extended graph here")
    extend.set_defaults(handler=cmd_extend)

    generate = commands.add_parser("generate", help="enumerate bricks up to --max-n")
    generate.add_argument("--max-n", type=int, default=None)
    generate.add_argument("--profile", default=None, help="generation profile JSON")
    generate.add_argument("--variants", default=None, help="comma list of variant tags, or ALL")
    generate.add_argument("--minimal", action=argparse.BooleanOptionalAction, default=None)
    generate.add_argument("--petersen", action=argparse.BooleanOptionalAction, default=None)
    generate.add_argument("--jobs", type=int, default=None)
    generate.add_argument("--output-dir", default=None)
    generate.add_argument("--progress", action="store_true")
    generate.set_defaults(handler=cmd_generate)

    verify = commands.add_parser("verify", help="degree bounds over a corpus directory")
    verify.add_argument("--dir", required=True)
    verify.add_argument("--format", choices=formats, default=None,
                        help="default: by file suffix (.g6, .el)")
    verify.add_argument("--error-policy", choices=["continue", "fail"], default="continue")
    verify.add_argument("--csv", default=None, help="write the per-graph table here")
    verify.set_defaults(handler=cmd_verify)

    stats_cmd = commands.add_parser("stats", help="degree statistics of a graph")
    stats_cmd.add_argument("path")
    stats_cmd.add_argument("--format", choices=formats, default=GraphFormat.EDGELIST.value)
    stats_cmd.set_defaults(handler=cmd_stats)

    sequence = commands.add_parser("sequence", help="build a sequence file and print its accounting")
    sequence.add_argument("path")
    sequence.set_defaults(handler=cmd_sequence)

    sweep = commands.add_parser("sweep", help="randomised lemma instances")
    sweep.add_argument("--lemma", choices=SWEEP_LEMMAS, default="extensions")
    sweep.add_argument("--count", type=int, default=20)
    sweep.add_argument("--seed", type=int, default=None)
    sweep.add_argument("--graphs", default="Prism,Petersen",
                       help="comma list of named start graphs")
    sweep.set_defaults(handler=cmd_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = args.log_level.upper() if args.log_level else None
    logging.config.dictConfig(settings.logging_config(level))
    stream = out or sys.stdout
    try:
        return args.handler(args, stream)
    except (BrickforgeError, ValueError, OSError) as exc:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


def run(argv: Optional[List[str]] = None) -> None:
    sys.exit(main(argv))
