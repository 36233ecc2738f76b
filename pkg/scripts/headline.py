"""Reproduce the headline numbers: chi of spindle and Moser balls, linear
coloring search counts, and the conflict count of a+3b+2c+d mod 4.

    python scripts/headline.py [--max-radius 4]
"""

import argparse
import time

from vgraph import (
    ball,
    canonical_spindle,
    chromatic_number,
    induced_subgraph,
    moser_instance,
    search_linear,
    verify_on_graph,
)
from vgraph.linear import PAPER_COLORING
from vgraph.solver import dsatur, max_clique_lb


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-radius", type=int, default=4)
    args = parser.parse_args()

    moser = moser_instance()
    origin = (0, 0, 0, 0)

    spindle = induced_subgraph(moser, canonical_spindle().points)
    print(f"spindle: {spindle.n} vertices, {len(spindle.edges)} edges, chi = {chromatic_number(spindle).num_colors}")

    for m in range(2, 7):
        print(f"mod {m}: {len(search_linear(moser, m))} proper linear colorings of {m ** 4}")

    print(f"{'r':>2} {'|V|':>6} {'|E|':>7} {'omega':>5} {'dsatur':>6} {'chi':>3} {'conflicts':>9} {'sec':>6}")
    for r in range(args.max_radius + 1):
        g = ball(moser, origin, r)
        t0 = time.perf_counter()
        chi = chromatic_number(g, cap=None).num_colors
        dt = time.perf_counter() - t0
        omega, _ = max_clique_lb(g)
        conflicts = len(verify_on_graph(PAPER_COLORING, g))
        print(f"{r:>2} {g.n:>6} {len(g.edges):>7} {omega:>5} {dsatur(g).num_colors:>6} {chi:>3} {conflicts:>9} {dt:>6.2f}")


if __name__ == "__main__":
    main()
