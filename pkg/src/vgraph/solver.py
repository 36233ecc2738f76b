"""Coloring finite graphs: first-fit, DSATUR, maximum clique, exact chi.

The exact solver decides k-colorability by backtracking with forward
checking (color domains kept as bitmasks).  It always branches on the
uncolored vertex with the fewest remaining colors (ties: higher degree,
then lower index) and pre-colors one maximum clique to break the
color-permutation symmetry.

Every function accepts any graph object exposing ``n`` and ``edges``
(a :class:`~vgraph.lattice.FiniteGraph` or a :class:`SimpleGraph`).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from vgraph.errors import SolverCapExceeded, ValidationError

log = logging.getLogger(__name__)

DEFAULT_VERTEX_CAP = 2000


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Plain graph on vertices 0..n-1, for solver inputs without a lattice."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = set()
        for i, j in self.edges:
            if i == j or not (0 <= i < self.n and 0 <= j < self.n):
                raise ValidationError(f"bad edge ({i}, {j}) for {self.n} vertices")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)


def _adjacency(g) -> Sequence[Sequence[int]]:
    adj = getattr(g, "adjacency", None)
    if adj is not None:
        return adj
    return SimpleGraph(g.n, tuple(g.edges)).adjacency


@dataclass(frozen=True)
class ColoringResult:
    num_colors: int
    assignment: tuple[int, ...]
    optimal: bool = False


@dataclass(frozen=True)
class KColorability:
    """Outcome of a k-colorability search.

    When ``colorable`` is False the search ran to exhaustion, which is the
    refutation; ``nodes`` counts the color assignments tried.
    """

    k: int
    colorable: bool
    assignment: tuple[int, ...] | None
    nodes: int

    def __bool__(self):
        return self.colorable


def is_proper(g, assignment: Sequence[int]) -> bool:
    return len(assignment) == g.n and all(assignment[i] != assignment[j] for i, j in g.edges)


def _result(assignment: list[int], optimal: bool) -> ColoringResult:
    k = max(assignment) + 1 if assignment else 0
    return ColoringResult(k, tuple(assignment), optimal)


def greedy_coloring(g, order: Sequence[int] | None = None) -> ColoringResult:
    """First-fit coloring in ``order`` (default: index order)."""
    adj = _adjacency(g)
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValidationError("order must be a permutation of the vertex indices")
    color = [-1] * g.n
    for v in order:
        used = {color[w] for w in adj[v]}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return _result(color, optimal=False)


def dsatur(g) -> ColoringResult:
    """DSATUR: saturation desc, then degree desc, then lowest index."""
    adj = _adjacency(g)
    n = g.n
    color = [-1] * n
    seen = [set() for _ in range(n)]
    uncolored = set(range(n))
    degree = [len(a) for a in adj]
    while uncolored:
        v = min(uncolored, key=lambda x: (-len(seen[x]), -degree[x], x))
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        uncolored.discard(v)
        for w in adj[v]:
            if color[w] < 0:
                seen[w].add(c)
    return _result(color, optimal=False)


def max_clique(g) -> list[int]:
    """A maximum clique (sorted indices) by simple branch and bound.

    Candidates are extended in index order and a branch is cut when even
    taking every remaining candidate cannot beat the incumbent.
    """
    adj = [frozenset(a) for a in _adjacency(g)]
    best: list[int] = []

    def expand(current: list[int], cand: list[int]) -> None:
        nonlocal best
        if len(current) > len(best):
            best = current[:]
        for pos, v in enumerate(cand):
            if len(current) + len(cand) - pos <= len(best):
                return
            expand(current + [v], [w for w in cand[pos + 1:] if w in adj[v]])

    expand([], list(range(g.n)))
    return best


def max_clique_lb(g) -> tuple[int, list[int]]:
    clique = max_clique(g)
    return len(clique), clique


def _check_cap(g, cap: int | None) -> None:
    if cap is not None and g.n > cap:
        lower, _ = max_clique_lb(g)
        upper = dsatur(g).num_colors
        raise SolverCapExceeded(
            f"graph has {g.n} vertices, above the solver cap of {cap} "
            f"(bounds so far: {lower} <= chi <= {upper})",
            lower=lower,
            upper=upper,
        )


def _search(adj, n: int, k: int, clique: Sequence[int]) -> KColorability:
    full = (1 << k) - 1
    dom = [full] * n
    color = [-1] * n
    trail: list[tuple[int, int]] = []

    def assign(v: int, c: int) -> bool:
        color[v] = c
        bit = 1 << c
        ok = True
        for w in adj[v]:
            if color[w] < 0 and dom[w] & bit:
                trail.append((w, dom[w]))
                dom[w] &= ~bit
                if not dom[w]:
                    ok = False
        return ok

    def undo(mark: int) -> None:
        while len(trail) > mark:
            w, d = trail.pop()
            dom[w] = d

    degree = [len(a) for a in adj]
    uncolored = set(range(n))
    for c, v in enumerate(clique):
        uncolored.discard(v)
        if not assign(v, c):
            return KColorability(k, False, None, 0)
    top = len(clique) - 1

    def pick():
        if not uncolored:
            return None
        # Lowest-index-only tie breaking thrashes on lattice balls of radius 5+.
        return min(uncolored, key=lambda x: (dom[x].bit_count(), -degree[x], x))

    def options(v: int, top: int) -> list[int]:
        # A vertex may open at most one new color (the next unused one).
        limit = min(k, top + 2)
        return [c for c in range(limit) if dom[v] >> c & 1]

    nodes = 0
    v = pick()
    if v is None:
        return KColorability(k, True, tuple(color), 0)
    # frame: [vertex, options, next option position, trail mark, top before]
    stack = [[v, options(v, top), 0, len(trail), top]]
    uncolored.discard(v)
    while stack:
        frame = stack[-1]
        v, opts, pos, mark, top_before = frame
        undo(mark)
        color[v] = -1
        top = top_before
        if pos >= len(opts):
            stack.pop()
            uncolored.add(v)
            continue
        c = opts[pos]
        frame[2] = pos + 1
        nodes += 1
        if not assign(v, c):
            continue
        top = max(top, c)
        w = pick()
        if w is None:
            return KColorability(k, True, tuple(color), nodes)
        uncolored.discard(w)
        stack.append([w, options(w, top), 0, len(trail), top])
    return KColorability(k, False, None, nodes)


def k_colorable(
    g,
    k: int,
    cap: int | None = DEFAULT_VERTEX_CAP,
    clique: Sequence[int] | None = None,
) -> KColorability:
    """Decide whether ``g`` has a proper coloring with ``k`` colors."""
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    _check_cap(g, cap)
    if g.n == 0:
        return KColorability(k, True, (), 0)
    if clique is None:
        clique = max_clique(g)
    if len(clique) > k:
        return KColorability(k, False, None, 0)
    result = _search(_adjacency(g), g.n, k, clique)
    log.debug("k=%d colorable=%s after %d nodes", k, result.colorable, result.nodes)
    return result


def chromatic_number(g, cap: int | None = DEFAULT_VERTEX_CAP) -> ColoringResult:
    """Exact chromatic number with an optimal coloring as witness."""
    _check_cap(g, cap)
    if g.n == 0:
        return ColoringResult(0, (), True)
    clique = max_clique(g)
    upper = dsatur(g)
    for k in range(len(clique), upper.num_colors):
        res = _search(_adjacency(g), g.n, k, clique)
        log.debug("k=%d colorable=%s after %d nodes", k, res.colorable, res.nodes)
        if res.colorable:
            return _result(list(res.assignment), optimal=True)
    return ColoringResult(upper.num_colors, upper.assignment, True)
