"""Command-line frontend.

Exit codes: 0 success, 1 verification failure (improper coloring, failed
spindle or instance check, solver cap exceeded), 2 usage error.
Negative tuples must be attached with ``=``, e.g. ``--center=-1,0,0,0``.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from vgraph import graphio
from vgraph.errors import DimensionError, GraphParseError, SolverCapExceeded, ValidationError
from vgraph.field import is_unit
from vgraph.lattice import (
    INSTANCES,
    ball,
    bfs_distances,
    embed,
    get_instance,
    induced_subgraph,
    validate_instance,
    verify_unique_representation,
)
from vgraph.linear import LinearColoring, color_vertices, generator_colors, search_linear, verify_on_graph
from vgraph.solver import DEFAULT_VERTEX_CAP, chromatic_number, dsatur, max_clique_lb
from vgraph.spindle import ROLE_NAMES, spindle_at, verify_spindle


class UsageError(Exception):
    pass


def _int_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(a) for a in text.split(",") if a.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _int_range(text: str) -> list[int]:
    """'3', '2,3,4' or '2-5'."""
    try:
        if "-" in text.strip("-"):
            lo, hi = text.split("-", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(a) for a in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers like 3, 2,3,4 or 2-5; got {text!r}") from None


def _fmt_point(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _default_threads() -> int:
    env = os.environ.get("VGRAPH_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker threads (env VGRAPH_THREADS; default 1)")
    common.add_argument("-v", "--verbose", action="count", default=0)

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--instance", choices=sorted(INSTANCES), default="moser")
    source.add_argument("--radius", type=int, default=2)
    source.add_argument("--center", type=_int_tuple, default=None, help="lattice tuple, default origin")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", type=Path, default=None, help="write the graph here")
    output.add_argument("--format", choices=sorted(graphio.FORMATS), default="json")

    parser = argparse.ArgumentParser(prog="vgraph", description="Exact vector graphs and their colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("ball", parents=[common, source, output], help="generate a graph-distance ball and export it")

    color = sub.add_parser("color", help="linear colorings f(v) = w.v mod m")
    color_sub = color.add_subparsers(dest="color_command", required=True)
    apply = color_sub.add_parser("apply", parents=[common, source, output], help="apply and verify a linear coloring")
    apply.add_argument("--weights", type=_int_tuple, required=True)
    apply.add_argument("--modulus", type=int, required=True)
    search = color_sub.add_parser("search", parents=[common], help="list all proper linear colorings mod m")
    search.add_argument("--instance", choices=sorted(INSTANCES), default="moser")
    search.add_argument("--modulus", type=_int_range, required=True)
    search.add_argument("--quiet", action="store_true", help="counts only")

    chrom = sub.add_parser("chromatic", parents=[common, source, output], help="exact chromatic number")
    chrom.add_argument("--input", type=Path, default=None, help="vgraph-1 JSON file instead of a generated ball")
    chrom.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP, help="solver vertex cap")

    spin = sub.add_parser("spindle", parents=[common, output], help="place and verify Moser spindles at a vertex")
    spin.add_argument("--vertex", type=_int_tuple, default=(0, 0, 0, 0))
    spin.add_argument("--roles", type=_int_range, default=list(range(7)))

    ver = sub.add_parser("verify", parents=[common], help="validate an instance")
    ver.add_argument("--instance", choices=sorted(INSTANCES), default="moser")
    ver.add_argument("--radius", type=int, default=3, help="ball radius for the degree check")
    return parser


def _write(args, g, colors=None, num_colors=None) -> None:
    if args.out is None:
        return
    args.out.write_text(graphio.dump(g, args.format, colors, num_colors))
    print(f"wrote {args.format} to {args.out}")


def _source_graph(args):
    inst = get_instance(args.instance)
    center = args.center if args.center is not None else (0,) * inst.rank
    if args.radius < 0:
        raise UsageError("--radius must be nonnegative")
    g = ball(inst, center, args.radius)
    print(f"{inst.name} ball center {_fmt_point(center)} radius {args.radius}: {g.n} vertices, {len(g.edges)} edges")
    return g


def cmd_ball(args) -> int:
    g = _source_graph(args)
    _write(args, g)
    return 0


def cmd_color_apply(args) -> int:
    inst = get_instance(args.instance)
    col = LinearColoring(args.modulus, args.weights)
    if col.rank != inst.rank:
        raise UsageError(f"--weights has {col.rank} entries, instance {inst.name} has rank {inst.rank}")
    gens = generator_colors(col, inst)
    print(f"weights {_fmt_point(col.weights)} mod {col.modulus}")
    print("connection colors: " + " ".join(map(str, gens)))
    proper = all(gens)
    print(f"proper on connection set: {'yes' if proper else 'no'}")
    g = _source_graph(args)
    conflicts = verify_on_graph(col, g)
    print(f"{len(conflicts)} conflicts")
    for i, j in conflicts[:10]:
        print(f"  conflict {_fmt_point(g.vertices[i])} -- {_fmt_point(g.vertices[j])}")
    _write(args, g, color_vertices(col, g), col.modulus)
    return 0 if proper and not conflicts else 1


def cmd_color_search(args) -> int:
    inst = get_instance(args.instance)
    for m in args.modulus:
        if m < 2:
            raise UsageError("--modulus must be >= 2")
        found = search_linear(inst, m, threads=args.threads)
        print(f"modulus {m}: {len(found)} proper linear colorings ({m ** inst.rank} candidates)")
        if not args.quiet:
            for w in found:
                print("  " + _fmt_point(w))
    return 0


def cmd_chromatic(args) -> int:
    if args.input is not None:
        try:
            g, _ = graphio.from_json(args.input.read_text())
        except OSError as exc:
            raise UsageError(str(exc)) from None
        print(f"loaded {args.input}: {g.n} vertices, {len(g.edges)} edges")
    else:
        g = _source_graph(args)
    omega, _ = max_clique_lb(g)
    print(f"clique lower bound = {omega}")
    print(f"dsatur upper bound = {dsatur(g).num_colors}")
    res = chromatic_number(g, cap=args.cap)
    print(f"chi = {res.num_colors}")
    _write(args, g, list(res.assignment), res.num_colors)
    return 0


def cmd_spindle(args) -> int:
    if len(args.vertex) != 4:
        raise UsageError("--vertex must be a rank-4 Moser lattice point")
    bad = [r for r in args.roles if not 0 <= r < 7]
    if bad:
        raise UsageError(f"role {bad[0]} outside 0..6")
    ok = True
    union = set()
    for role in args.roles:
        e = spindle_at(args.vertex, role)
        check = verify_spindle(e)
        ok &= check.passed
        union.update(e.points)
        status = "pass" if check.passed else f"FAIL ({check.failure})"
        print(f"role {role} ({ROLE_NAMES[role]}): {status}")
        print("  points " + " ".join(_fmt_point(p) for p in e.points))
    if args.out is not None:
        _write(args, induced_subgraph(get_instance("moser"), sorted(union)))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    inst = get_instance(args.instance)
    print(f"instance {inst.name}: rank {inst.rank}, {len(inst.connections)} connections")
    units = all(is_unit(embed(inst, c)) for c in inst.connections)
    print(f"unit connection vectors: {'ok' if units else 'FAIL'}")
    unique = verify_unique_representation(inst)
    print(f"unique representation: {'ok' if unique else 'FAIL'}")
    problems = validate_instance(inst)
    print(f"instance validation: {'ok' if not problems else 'FAIL: ' + '; '.join(problems)}")
    origin = (0,) * inst.rank
    g = ball(inst, origin, args.radius)
    dist = bfs_distances(g, g.index[origin])
    expected = 2 * len(inst.connections)
    interior = [i for i in range(g.n) if dist[i] < args.radius]
    regular = all(g.degree(i) == expected for i in interior)
    print(
        f"degree regularity (radius {args.radius}, {len(interior)} interior vertices, degree {expected}): "
        f"{'ok' if regular else 'FAIL'}"
    )
    return 0 if units and unique and not problems and regular else 1


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    if args.threads is None:
        args.threads = _default_threads()
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s")
    handler = {
        "ball": cmd_ball,
        "chromatic": cmd_chromatic,
        "spindle": cmd_spindle,
        "verify": cmd_verify,
    }.get(args.command)
    if args.command == "color":
        handler = cmd_color_apply if args.color_command == "apply" else cmd_color_search
    try:
        return handler(args)
    except (UsageError, DimensionError, ValidationError, GraphParseError) as exc:
        print(f"vgraph: error: {exc}", file=sys.stderr)
        return 2
    except SolverCapExceeded as exc:
        print(f"vgraph: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
