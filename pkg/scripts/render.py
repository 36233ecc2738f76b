"""Write SVG pictures of the canonical spindle and a colored Moser ball.

    python scripts/render.py OUTDIR [--radius 2]
"""

import argparse
from pathlib import Path

from vgraph import ball, canonical_spindle, induced_subgraph, moser_instance
from vgraph.graphio import to_svg
from vgraph.linear import PAPER_COLORING, color_vertices


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("outdir", type=Path)
    parser.add_argument("--radius", type=int, default=2)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    moser = moser_instance()
    spindle = induced_subgraph(moser, canonical_spindle().points)
    (args.outdir / "spindle.svg").write_text(to_svg(spindle, color_vertices(PAPER_COLORING, spindle)))

    g = ball(moser, (0, 0, 0, 0), args.radius)
    (args.outdir / f"ball_r{args.radius}.svg").write_text(to_svg(g, color_vertices(PAPER_COLORING, g)))
    print(f"wrote spindle.svg and ball_r{args.radius}.svg to {args.outdir}")


if __name__ == "__main__":
    main()
