# -*- coding: utf-8 -*-
"""Command Line Module.

This module ties the package together behind the `origami-mv` command:
pattern generation, validation, line-graph and enumeration counts, the Miura
bijection, grid coloring counts, the Lieb table and SVG rendering.

Exit codes: 0 on success, 1 on domain errors, 2 on usage or input errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from origami_mv.coloring_count import (
    count_colorings_brute,
    count_colorings_matrix,
    count_colorings_transfer,
    lieb_table,
    lieb_tsv,
    plot_lieb,
)
from origami_mv.crease_model import MVAssignment, VertexStar, parse_cpt, serialize_cpt, validate
from origami_mv.enumeration import enumerate_mv, format_assignment_block
from origami_mv.generators import gen_miura, gen_square_twist
from origami_mv.line_graph import build_line_graph, count_mv_by_components, to_dot
from origami_mv.local_rules import (
    blb_pairs,
    classify_degree4,
    degree4_forced_same,
    format_mv_tuple,
    oracle_valid_assignments,
    vertex_valid_assignments,
)
from origami_mv.miura_bijection import (
    coloring_to_mv,
    count_miura_mv,
    format_digit_grid,
    mv_to_coloring,
    parse_digit_grid,
)
from origami_mv.render import render_svg
from origami_mv.utils import (
    ANGLE_TOLERANCE,
    ColoringError,
    CptParseError,
    OrigamiMVError,
    PatternError,
    configure_logging,
    format_metadata,
)
from origami_mv.workflows import CrossValidation, ParallelEnumeration

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Raised instead of exiting when the command line cannot be parsed."""
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Assemble the argument parser with every subcommand."""
    parser = _Parser(prog="origami-mv", description="Count and enumerate mountain-valley assignments.")
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = commands.add_parser("gen", help="generate a crease pattern")
    gen.add_argument("family", choices=["miura", "square-twist"])
    gen.add_argument("--rows", type=_positive, required=True)
    gen.add_argument("--cols", type=_positive, required=True)
    gen.add_argument("--alpha", type=float, default=60.0, help="Miura acute angle in degrees")
    gen.add_argument("--metadata", type=Path, help="write key=value metadata to this file")

    for name, help_text in [("validate", "check local angle conditions"),
                            ("render", "draw the pattern as SVG"),
                            ("verify", "cross-check every count on one pattern")]:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("file", type=Path)

    linegraph = commands.add_parser("linegraph", help="build the origami line graph")
    linegraph.add_argument("file", type=Path)
    linegraph.add_argument("--dot", action="store_true", help="emit DOT instead of a summary")

    count = commands.add_parser("count", help="count valid MV assignments")
    count.add_argument("file", type=Path)
    count.add_argument("--method", choices=["linegraph", "enumerate"], default="linegraph")
    count.add_argument("--split-bits", type=_non_negative, default=0)

    enumerate_ = commands.add_parser("enumerate", help="list valid MV assignments")
    enumerate_.add_argument("file", type=Path)
    enumerate_.add_argument("--limit", type=_non_negative)
    enumerate_.add_argument("--split-bits", type=_non_negative, default=0)

    vertex = commands.add_parser("vertex", help="classify a degree-4 vertex")
    vertex.add_argument("angles", help="comma-separated angles in degrees")

    miura = commands.add_parser("miura", help="Miura-ori bijection with grid colorings")
    miura_commands = miura.add_subparsers(dest="miura_command", required=True, parser_class=_Parser)
    to_coloring = miura_commands.add_parser("to-coloring")
    to_coloring.add_argument("file", type=Path)
    to_coloring.add_argument("--rows", type=_positive, required=True)
    to_coloring.add_argument("--cols", type=_positive, required=True)
    to_coloring.add_argument("--alpha", type=float, default=60.0)
    from_coloring = miura_commands.add_parser("from-coloring")
    from_coloring.add_argument("file", type=Path)
    from_coloring.add_argument("--alpha", type=float, default=60.0)
    miura_count = miura_commands.add_parser("count")
    miura_count.add_argument("--rows", type=_positive, required=True)
    miura_count.add_argument("--cols", type=_positive, required=True)
    miura_count.add_argument("--method", choices=["transfer", "brute", "enumerate"], default="transfer")

    colorings = commands.add_parser("colorings", help="count proper 3-colorings of a grid")
    colorings.add_argument("--rows", type=_positive, required=True)
    colorings.add_argument("--cols", type=_positive, required=True)
    colorings.add_argument("--method", choices=["brute", "transfer", "matrix"], default="transfer")

    lieb = commands.add_parser("lieb", help="per-vertex growth against Lieb's constant")
    lieb.add_argument("--max-n", type=_positive, required=True)
    lieb.add_argument("--plot", type=Path, help="also save a PNG chart")

    leaves = [sub for sub in commands.choices.values() if sub is not miura]
    for sub in leaves + list(miura_commands.choices.values()):
        sub.add_argument("-o", "--out", type=Path, help="write the result here instead of stdout")

    return parser


def _read_text(path: Path) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _read_pattern(path: Path):
    return parse_cpt(_read_text(path))


def _emit(text: str, out: Optional[Path], stdout: TextIO) -> None:
    if out is None:
        stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.debug("wrote %s", out)


def _cmd_gen(args, stdout: TextIO) -> int:
    if args.family == "miura":
        generated = gen_miura(args.rows, args.cols, args.alpha)
    else:
        generated = gen_square_twist(args.rows, args.cols)
    _emit(serialize_cpt(generated.base), args.out, stdout)
    if args.metadata is not None:
        _emit(format_metadata(generated.metadata()), args.metadata, stdout)
    return 0


def _cmd_validate(args, stdout: TextIO) -> int:
    pattern, _ = _read_pattern(args.file)
    report = validate(pattern)
    lines = []
    for check in report.vertices:
        parity = "even" if check.even_degree else "odd"
        line = f"vertex {check.vertex}: degree {check.degree} ({parity})"
        if check.angle_sum_deviation is not None:
            line += ", angle sum " + ("ok" if check.angle_sum_deviation <= ANGLE_TOLERANCE else "off")
        if check.alternating_ok is not None:
            line += ", alternating sum " + ("ok" if check.alternating_ok else "nonzero")
        lines.append(line)
    lines += [f"warning: {w}" for w in report.warnings]
    lines += [f"error: {e}" for e in report.errors]
    lines.append("passed" if report.passed else ("failed" if report.errors else "passed with warnings"))
    _emit("\n".join(lines) + "\n", args.out, stdout)
    return 1 if report.errors else 0


def _cmd_linegraph(args, stdout: TextIO) -> int:
    pattern, _ = _read_pattern(args.file)
    lg = build_line_graph(pattern)
    _emit(to_dot(lg) if args.dot else format_metadata(lg.summary()), args.out, stdout)
    return 0


def _cmd_count(args, stdout: TextIO) -> int:
    pattern, _ = _read_pattern(args.file)
    if args.method == "linegraph":
        result = count_mv_by_components(build_line_graph(pattern))
    else:
        result = ParallelEnumeration(debug_mode=args.verbose).run(pattern, split_bits=args.split_bits).count
    _emit(f"{result}\n", args.out, stdout)
    return 0


def _cmd_enumerate(args, stdout: TextIO) -> int:
    pattern, _ = _read_pattern(args.file)
    if args.split_bits:
        result = ParallelEnumeration(debug_mode=args.verbose).run(
            pattern, split_bits=args.split_bits, materialize=True)
        found: List[MVAssignment] = result.assignments
        if args.limit is not None:
            found = found[:args.limit]
    else:
        found = list(enumerate_mv(pattern, limit=args.limit))
    blocks = [format_assignment_block(pattern, mv) for mv in found]
    _emit("\n".join(blocks), args.out, stdout)
    return 0


def _cmd_vertex(args, stdout: TextIO) -> int:
    try:
        angles = [float(token) for token in args.angles.split(",")]
    except ValueError:
        raise UsageError(f"angles must be comma-separated numbers, got {args.angles!r}") from None
    star = VertexStar.from_angles(angles)
    vertex_class = classify_degree4(star)
    valid = sorted(vertex_valid_assignments(star))
    agrees = oracle_valid_assignments(star) == frozenset(valid)

    def pairs(found) -> str:
        return " ".join(f"{a}-{b}" for a, b in sorted(found)) or "none"

    _emit(format_metadata({
        "angles": " ".join(format(a, "g") for a in star.angles),
        "class": vertex_class,
        "different": pairs(blb_pairs(star)),
        "same": pairs(degree4_forced_same(star)),
        "valid": f"{len(valid)} " + " ".join(format_mv_tuple(t) for t in valid),
        "layer_oracle": "agrees" if agrees else "disagrees",
    }), args.out, stdout)
    return 0


def _miura_file(path: Path, rows: int, cols: int, alpha: float):
    pattern, mv = _read_pattern(path)
    mp = gen_miura(rows, cols, alpha)
    if serialize_cpt(pattern) != serialize_cpt(mp.base):
        raise PatternError(f"{path} is not the {rows}x{cols} Miura-ori with alpha {alpha:g}")
    if mv is None or len(mv) != len(pattern.creases):
        raise PatternError(f"{path} must assign M or V to every crease")
    return mp, mv


def _cmd_miura(args, stdout: TextIO) -> int:
    if args.miura_command == "to-coloring":
        mp, mv = _miura_file(args.file, args.rows, args.cols, args.alpha)
        _emit(format_digit_grid(mv_to_coloring(mp, mv)), args.out, stdout)
    elif args.miura_command == "from-coloring":
        coloring = parse_digit_grid(_read_text(args.file))
        mp = gen_miura(coloring.m, coloring.n, args.alpha)
        mv = coloring_to_mv(coloring.m, coloring.n, coloring, mp)
        _emit(serialize_cpt(mp.base, mv), args.out, stdout)
    else:
        _emit(f"{count_miura_mv(args.rows, args.cols, args.method)}\n", args.out, stdout)
    return 0


def _cmd_colorings(args, stdout: TextIO) -> int:
    counter = {
        "brute": count_colorings_brute,
        "transfer": count_colorings_transfer,
        "matrix": count_colorings_matrix,
    }[args.method]
    _emit(f"{counter(args.rows, args.cols)}\n", args.out, stdout)
    return 0


def _cmd_lieb(args, stdout: TextIO) -> int:
    rows = lieb_table(args.max_n)
    _emit(lieb_tsv(rows), args.out, stdout)
    if args.plot is not None:
        plot_lieb(rows, str(args.plot))
    return 0


def _cmd_render(args, stdout: TextIO) -> int:
    pattern, mv = _read_pattern(args.file)
    _emit(render_svg(pattern, mv), args.out, stdout)
    return 0


def _cmd_verify(args, stdout: TextIO) -> int:
    pattern, _ = _read_pattern(args.file)
    report = CrossValidation(debug_mode=args.verbose).run(pattern)
    _emit(report.to_text(), args.out, stdout)
    return 0


COMMANDS = {
    "gen": _cmd_gen,
    "validate": _cmd_validate,
    "linegraph": _cmd_linegraph,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "vertex": _cmd_vertex,
    "miura": _cmd_miura,
    "colorings": _cmd_colorings,
    "lieb": _cmd_lieb,
    "render": _cmd_render,
    "verify": _cmd_verify,
}


def run(argv: List[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Run one CLI invocation.

    Args:
        argv: Arguments without the program name
        stdout: Stream for results, defaults to sys.stdout
        stderr: Stream for error messages, defaults to sys.stderr

    Returns:
        The exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0

    configure_logging(args.verbose)

    try:
        return COMMANDS[args.command](args, stdout)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    except (CptParseError, ColoringError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except OrigamiMVError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def main():
    """Console entry point."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
