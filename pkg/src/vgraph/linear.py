"""Linear colorings f(v) = w . v (mod m) of lattice vertices.

Because f is a group homomorphism to Z/m, f(x) = f(y) for adjacent x, y
iff f(x - y) = 0, so properness on the whole infinite graph reduces to
checking that no connection vector is sent to 0.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from vgraph.errors import DimensionError, ValidationError
from vgraph.lattice import FiniteGraph, VectorGraphInstance


@dataclass(frozen=True)
class LinearColoring:
    modulus: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValidationError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "weights", tuple(int(w) % self.modulus for w in self.weights))

    @property
    def rank(self) -> int:
        return len(self.weights)

    def __call__(self, p: Sequence[int]) -> int:
        return eval_linear(self, p)


# f(v) = a + 3b + 2c + d (mod 4) on coordinates (a, b, c, d) over
# (alpha, alpha_bar, beta, beta_bar).
PAPER_COLORING = LinearColoring(4, (1, 3, 2, 1))


def eval_linear(col: LinearColoring, p: Sequence[int]) -> int:
    if len(p) != col.rank:
        raise DimensionError(f"point {tuple(p)} has rank {len(p)}, coloring has rank {col.rank}")
    return sum(w * a for w, a in zip(col.weights, p)) % col.modulus


def _check(col: LinearColoring, inst: VectorGraphInstance) -> None:
    if col.rank != inst.rank:
        raise DimensionError(f"coloring rank {col.rank} != instance rank {inst.rank}")


def generator_colors(col: LinearColoring, inst: VectorGraphInstance) -> list[int]:
    _check(col, inst)
    return [eval_linear(col, s) for s in inst.connections]


def is_proper_linear(col: LinearColoring, inst: VectorGraphInstance) -> bool:
    return all(generator_colors(col, inst))


def _proper_with_first(inst: VectorGraphInstance, m: int, first: int) -> list[tuple[int, ...]]:
    conns = inst.connections
    found = []
    for rest in itertools.product(range(m), repeat=inst.rank - 1):
        w = (first,) + rest
        if all(sum(a * b for a, b in zip(w, s)) % m for s in conns):
            found.append(w)
    return found


def search_linear(inst: VectorGraphInstance, m: int, threads: int = 1) -> list[tuple[int, ...]]:
    """All weight tuples in [0, m)^n giving a proper linear coloring, sorted.

    The sweep is split on the first weight; ``threads`` only changes how
    the chunks are scheduled, never the result.
    """
    if m < 2:
        raise ValidationError(f"modulus must be >= 2, got {m}")
    if inst.rank == 0:
        return [()] if not inst.connections else []
    if threads <= 1:
        chunks = [_proper_with_first(inst, m, a) for a in range(m)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda a: _proper_with_first(inst, m, a), range(m)))
    return sorted(w for chunk in chunks for w in chunk)


def verify_on_graph(col: LinearColoring, g: FiniteGraph) -> list[tuple[int, int]]:
    """Edges of ``g`` whose endpoints get the same color, checked one by one."""
    if g.vertices and len(g.vertices[0]) != col.rank:
        raise DimensionError(f"graph rank {len(g.vertices[0])} != coloring rank {col.rank}")
    colors = [eval_linear(col, p) for p in g.vertices]
    return [(i, j) for i, j in g.edges if colors[i] == colors[j]]


def color_vertices(col: LinearColoring, g: FiniteGraph) -> list[int]:
    return [eval_linear(col, p) for p in g.vertices]
