"""DIMACS, JSON ("vgraph-1"), DOT and SVG serialization of finite graphs.

JSON stores lattice coordinates only; together with the named instance they
rebuild the exact embedding.  The float embedding written alongside is
advisory and ignored on read.
"""

from __future__ import annotations

import json
from collections.abc import Sequence

from vgraph.errors import GraphParseError, UnsupportedVersionError, ValidationError
from vgraph.lattice import FiniteGraph, get_instance, from_edge_list

SCHEMA_VERSION = "vgraph-1"

PALETTE = (
    "#e41a1c",
    "#377eb8",
    "#4daf4a",
    "#984ea3",
    "#ff7f00",
    "#ffff33",
    "#a65628",
    "#f781bf",
)
NO_COLOR = "#ffffff"

SVG_SCALE = 100.0
SVG_RADIUS = 4
SVG_MARGIN = 10.0


def _fill(colors, i: int) -> str:
    if colors is None:
        return NO_COLOR
    return PALETTE[colors[i] % len(PALETTE)]


def _check_colors(g: FiniteGraph, colors: Sequence[int] | None) -> None:
    if colors is not None and len(colors) != g.n:
        raise ValidationError(f"{len(colors)} colors for {g.n} vertices")


def to_dimacs(g: FiniteGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {line}" for line in comment.splitlines())
    lines.append(f"p edge {g.n} {len(g.edges)}")
    lines.extend(f"e {i + 1} {j + 1}" for i, j in sorted(g.edges))
    return "\n".join(lines) + "\n"


def to_json(g: FiniteGraph, colors: Sequence[int] | None = None, num_colors: int | None = None) -> str:
    _check_colors(g, colors)
    doc = {
        "version": SCHEMA_VERSION,
        "instance": g.instance.name,
        "rank": g.instance.rank,
        "vertices": [list(p) for p in g.vertices],
        "edges": [list(e) for e in g.edges],
        "embedding": [[round(x, 12), round(y, 12)] for x, y in (v.to_float() for v in g.embedding)],
    }
    if colors is not None:
        doc["colors"] = [int(c) for c in colors]
        doc["num_colors"] = int(num_colors if num_colors is not None else (max(colors) + 1 if colors else 0))
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in value):
        raise GraphParseError(f"{what} must be a list of integers")
    return value


def from_json(text: str) -> tuple[FiniteGraph, list[int] | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"malformed JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise GraphParseError("document must be a JSON object")
    for key in ("version", "instance", "rank", "vertices", "edges"):
        if key not in doc:
            raise GraphParseError(f"missing key {key!r}")
    if doc["version"] != SCHEMA_VERSION:
        raise UnsupportedVersionError(f"unsupported version {doc['version']!r}, expected {SCHEMA_VERSION!r}")
    inst = get_instance(doc["instance"])
    if doc["rank"] != inst.rank:
        raise ValidationError(f"rank {doc['rank']} does not match instance {inst.name!r} (rank {inst.rank})")
    if not isinstance(doc["vertices"], list) or not isinstance(doc["edges"], list):
        raise GraphParseError("vertices and edges must be lists")
    vertices = [tuple(_int_list(v, "vertex")) for v in doc["vertices"]]
    if any(len(v) != inst.rank for v in vertices):
        raise ValidationError(f"vertex of wrong rank for instance {inst.name!r}")
    if len(set(vertices)) != len(vertices):
        raise ValidationError("duplicate vertices")
    if vertices != sorted(vertices):
        raise ValidationError("vertices must be in lexicographic order")
    edges = []
    for e in doc["edges"]:
        e = _int_list(e, "edge")
        if len(e) != 2:
            raise GraphParseError("edge must be a pair of indices")
        edges.append(tuple(e))
    g = from_edge_list(inst, vertices)
    if tuple(edges) != g.edges:
        raise ValidationError("edge list does not match the induced edges of the vertices")
    colors = doc.get("colors")
    if colors is not None:
        colors = _int_list(colors, "colors")
        if len(colors) != g.n:
            raise ValidationError(f"{len(colors)} colors for {g.n} vertices")
        m = doc.get("num_colors")
        if not isinstance(m, int) or m < 1:
            raise ValidationError("colored document needs a positive integer 'num_colors'")
        bad = [c for c in colors if not 0 <= c < m]
        if bad:
            raise ValidationError(f"color {bad[0]} outside [0, {m})")
    return g, colors


def to_dot(g: FiniteGraph, colors: Sequence[int] | None = None) -> str:
    _check_colors(g, colors)
    lines = [f"graph {g.instance.name} {{", "  node [style=filled];"]
    for i, p in enumerate(g.vertices):
        label = "(" + ",".join(map(str, p)) + ")"
        lines.append(f'  v{i} [label="{label}", fillcolor="{_fill(colors, i)}"];')
    lines.extend(f"  v{i} -- v{j};" for i, j in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(g: FiniteGraph, colors: Sequence[int] | None = None) -> str:
    _check_colors(g, colors)
    # SVG y grows downward; negate y so the picture keeps the mathematical
    # (counterclockwise) orientation.
    pts = [(x * SVG_SCALE, -y * SVG_SCALE) for x, y in (v.to_float() for v in g.embedding)]
    if pts:
        min_x = min(p[0] for p in pts) - SVG_MARGIN
        min_y = min(p[1] for p in pts) - SVG_MARGIN
        width = max(p[0] for p in pts) + SVG_MARGIN - min_x
        height = max(p[1] for p in pts) + SVG_MARGIN - min_y
    else:
        min_x = min_y = 0.0
        width = height = 2 * SVG_MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="{min_x:.2f} {min_y:.2f} {width:.2f} {height:.2f}">',
        '<g stroke="#333333" stroke-width="1">',
    ]
    for i, j in g.edges:
        (x1, y1), (x2, y2) = pts[i], pts[j]
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    out.append("</g>")
    out.append('<g stroke="#000000" stroke-width="0.5">')
    for i, (x, y) in enumerate(pts):
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{SVG_RADIUS}" fill="{_fill(colors, i)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


FORMATS = {
    "json": lambda g, colors=None, num_colors=None: to_json(g, colors, num_colors),
    "dimacs": lambda g, colors=None, num_colors=None: to_dimacs(g),
    "dot": lambda g, colors=None, num_colors=None: to_dot(g, colors),
    "svg": lambda g, colors=None, num_colors=None: to_svg(g, colors),
}


def dump(g: FiniteGraph, fmt: str, colors=None, num_colors=None) -> str:
    try:
        writer = FORMATS[fmt]
    except KeyError:
        raise ValidationError(f"unknown format {fmt!r}") from None
    return writer(g, colors, num_colors)
