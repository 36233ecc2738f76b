"""Vector graphs as Cayley-style graphs on an integer lattice.

A vertex is an integer tuple of coefficients over the instance's generator
basis; two vertices are adjacent when their difference is plus or minus a
connection vector.  Everything combinatorial happens on the integer tuples;
the exact plane embedding is only needed for auditing unit distances.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, cached_property

from vgraph.errors import DimensionError, ValidationError
from vgraph.field import (
    ALPHA,
    ALPHA_BAR,
    BETA,
    BETA_BAR,
    UNIT_X,
    UNIT_Y,
    QReal,
    XYVec,
    is_unit,
    norm_sq,
)

LatticePoint = tuple[int, ...]


def add(p: LatticePoint, q: LatticePoint) -> LatticePoint:
    return tuple(a + b for a, b in zip(p, q))


def sub(p: LatticePoint, q: LatticePoint) -> LatticePoint:
    return tuple(a - b for a, b in zip(p, q))


def neg(p: LatticePoint) -> LatticePoint:
    return tuple(-a for a in p)


@dataclass(frozen=True)
class VectorGraphInstance:
    """A generator basis with exact plane images plus a connection set.

    Construction only checks shapes; :func:`validate_instance` performs the
    mathematical checks (unit lengths, distinctness, injectivity).
    """

    name: str
    basis_embed: tuple[XYVec, ...]
    connections: tuple[LatticePoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis_embed", tuple(self.basis_embed))
        object.__setattr__(self, "connections", tuple(tuple(int(a) for a in c) for c in self.connections))
        for c in self.connections:
            if len(c) != self.rank:
                raise DimensionError(f"connection {c} has rank {len(c)}, instance rank is {self.rank}")

    @property
    def rank(self) -> int:
        return len(self.basis_embed)

    @cached_property
    def directions(self) -> tuple[LatticePoint, ...]:
        """All signed connection vectors, connections first then negations."""
        return self.connections + tuple(neg(c) for c in self.connections)

    @cached_property
    def _direction_set(self) -> frozenset[LatticePoint]:
        return frozenset(self.directions)

    @cached_property
    def _scaled_basis(self):
        # Each of the 8 rational coordinates (x/y times 4 radicals) as a
        # common denominator plus integer numerators per generator.
        rows = []
        for axis in ("x", "y"):
            for k in range(4):
                comps = [getattr(b, axis).components[k] for b in self.basis_embed]
                den = math.lcm(*(c.denominator for c in comps)) if comps else 1
                rows.append((den, tuple(c.numerator * (den // c.denominator) for c in comps)))
        return tuple(rows)

    def __hash__(self):
        return hash((self.name, self.basis_embed, self.connections))


def _check_rank(inst: VectorGraphInstance, *points: Sequence[int]) -> None:
    for p in points:
        if len(p) != inst.rank:
            raise DimensionError(f"point {tuple(p)} has rank {len(p)}, instance {inst.name!r} has rank {inst.rank}")


@cache
def moser_instance() -> VectorGraphInstance:
    """Moser connection set over the basis (alpha, alpha_bar, beta, beta_bar).

    The first connection (1, 1, 1, 1) is the unit vector u = (1, 0).
    """
    inst = VectorGraphInstance(
        name="moser",
        basis_embed=(ALPHA, ALPHA_BAR, BETA, BETA_BAR),
        connections=(
            (1, 1, 1, 1),
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (0, 0, 0, 1),
            (1, 0, -1, 0),
            (0, 1, 0, -1),
        ),
    )
    _assert_valid(inst)
    return inst


@cache
def zsquare_instance() -> VectorGraphInstance:
    inst = VectorGraphInstance(
        name="zsquare",
        basis_embed=(UNIT_X, UNIT_Y),
        connections=((1, 0), (0, 1)),
    )
    _assert_valid(inst)
    return inst


INSTANCES = {"moser": moser_instance, "zsquare": zsquare_instance}


def get_instance(name: str) -> VectorGraphInstance:
    try:
        return INSTANCES[name]()
    except KeyError:
        raise ValidationError(f"unknown instance {name!r}; known: {', '.join(sorted(INSTANCES))}") from None


def _assert_valid(inst: VectorGraphInstance) -> None:
    problems = validate_instance(inst)
    if problems:
        raise ValidationError(f"instance {inst.name!r} is invalid: " + "; ".join(problems))


def validate_instance(inst: VectorGraphInstance) -> list[str]:
    """Return a list of human-readable problems; empty means valid."""
    problems = []
    for c in inst.connections:
        if not is_unit(embed(inst, c)):
            problems.append(f"connection {c} does not embed to a unit vector")
    seen = set()
    for c in inst.connections:
        if c in seen:
            problems.append(f"connection {c} is repeated")
        elif neg(c) in seen:
            problems.append(f"connection {c} is the negation of another connection")
        if not any(c):
            problems.append("zero connection vector")
        seen.add(c)
    if not verify_unique_representation(inst):
        problems.append("basis generators are not linearly independent over Q")
    return problems


def rank_fraction_free(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by Bareiss fraction-free elimination.

    Every intermediate entry stays an integer: each update
    ``(p*a - b*c) // prev_pivot`` is exact.
    """
    m = [list(row) for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, rows):
            for c in range(col + 1, cols):
                m[r][c] = (p * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def coordinate_matrix(inst: VectorGraphInstance) -> list[list[Fraction]]:
    """8 x n rational matrix: rows are (axis, radical) components, columns generators."""
    return [
        [getattr(b, axis).components[k] for b in inst.basis_embed]
        for axis in ("x", "y")
        for k in range(4)
    ]


def verify_unique_representation(inst: VectorGraphInstance) -> bool:
    """True iff the generators are Q-independent, so the embedding is injective."""
    rows = []
    for row in coordinate_matrix(inst):
        den = math.lcm(*(q.denominator for q in row)) if row else 1
        rows.append([q.numerator * (den // q.denominator) for q in row])
    return rank_fraction_free(rows) == inst.rank


def embed(inst: VectorGraphInstance, p: Sequence[int]) -> XYVec:
    _check_rank(inst, p)
    comps = [
        Fraction(sum(a * n for a, n in zip(p, nums)), den)
        for den, nums in inst._scaled_basis
    ]
    return XYVec(QReal._raw(comps[:4]), QReal._raw(comps[4:]))


def is_adjacent(inst: VectorGraphInstance, p: Sequence[int], q: Sequence[int]) -> bool:
    _check_rank(inst, p, q)
    return sub(tuple(p), tuple(q)) in inst._direction_set


def neighbors(inst: VectorGraphInstance, p: Sequence[int]) -> list[LatticePoint]:
    _check_rank(inst, p)
    p = tuple(p)
    return sorted({add(p, d) for d in inst.directions})


@dataclass(frozen=True, eq=False)
class FiniteGraph:
    """A finite induced subgraph of a vector graph.

    Vertices are sorted lexicographically; ``edges`` are index pairs
    ``(i, j)`` with ``i < j`` in sorted order; ``embedding[i]`` is the exact
    plane image of ``vertices[i]``.
    """

    vertices: tuple[LatticePoint, ...]
    edges: tuple[tuple[int, int], ...]
    embedding: tuple[XYVec, ...] = field(repr=False)
    instance: VectorGraphInstance = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[LatticePoint, int]:
        return {p: i for i, p in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in self.vertices]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def __eq__(self, other):
        if not isinstance(other, FiniteGraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and self.embedding == other.embedding
            and self.instance == other.instance
        )

    __hash__ = None


def _build(inst: VectorGraphInstance, points: Iterable[LatticePoint]) -> FiniteGraph:
    vertices = tuple(sorted(points))
    index = {p: i for i, p in enumerate(vertices)}
    edges = []
    for i, p in enumerate(vertices):
        for c in inst.connections:
            for q in (add(p, c), sub(p, c)):
                j = index.get(q)
                if j is not None and j > i:
                    edges.append((i, j))
    edges.sort()
    embedding = tuple(embed(inst, p) for p in vertices)
    return FiniteGraph(vertices, tuple(edges), embedding, inst)


def from_edge_list(inst: VectorGraphInstance, vertices: Sequence[LatticePoint]) -> FiniteGraph:
    """Rebuild the induced graph on already-validated points (any order)."""
    return _build(inst, (tuple(p) for p in vertices))


def ball_points(inst: VectorGraphInstance, center: Sequence[int], radius: int) -> dict[LatticePoint, int]:
    """Breadth-first map from point to graph distance, for distance <= radius."""
    _check_rank(inst, center)
    if radius < 0:
        raise ValidationError("radius must be nonnegative")
    center = tuple(center)
    dist = {center: 0}
    frontier = [center]
    dirs = inst.directions
    for r in range(1, radius + 1):
        nxt = []
        for p in frontier:
            for d in dirs:
                q = add(p, d)
                if q not in dist:
                    dist[q] = r
                    nxt.append(q)
        frontier = nxt
    return dist


def ball(inst: VectorGraphInstance, center: Sequence[int], radius: int) -> FiniteGraph:
    return _build(inst, ball_points(inst, center, radius))


def induced_subgraph(inst: VectorGraphInstance, points: Iterable[Sequence[int]]) -> FiniteGraph:
    pts = [tuple(p) for p in points]
    _check_rank(inst, *pts)
    if len(set(pts)) != len(pts):
        raise ValidationError("induced_subgraph requires pairwise distinct points")
    return _build(inst, pts)


def bfs_distances(g: FiniteGraph, source: int) -> list[int]:
    """Graph distances inside ``g`` from vertex index ``source`` (-1 if unreachable)."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def unit_distance_pairs(g: FiniteGraph) -> list[tuple[int, int]]:
    """All index pairs at exact Euclidean distance 1, independent of ``g.edges``.

    Quadratic in the number of vertices; meant for small windows.
    """
    out = []
    emb = g.embedding
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if norm_sq(emb[i] - emb[j]) == 1:
                out.append((i, j))
    return out
