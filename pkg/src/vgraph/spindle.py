"""Moser spindles inside the Moser vector graph.

The canonical spindle is two unit rhombi sharing the tip at the origin:
one spanned by (alpha, beta) with far tip alpha + beta, the other spanned
by (-alpha_bar, -beta_bar) with far tip -alpha_bar - beta_bar.  The two far
tips differ by (1, 1, 1, 1), the unit vector u.  Translating the canonical
points puts any lattice vertex in any of the seven roles.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from vgraph.errors import ValidationError
from vgraph.field import norm_sq
from vgraph.lattice import (
    LatticePoint,
    VectorGraphInstance,
    add,
    embed,
    moser_instance,
    sub,
)

CANONICAL_POINTS: tuple[LatticePoint, ...] = (
    (0, 0, 0, 0),  # shared tip, degree 4
    (1, 0, 0, 0),  # alpha
    (0, 0, 1, 0),  # beta
    (1, 0, 1, 0),  # far tip alpha + beta
    (0, -1, 0, 0),  # -alpha_bar
    (0, 0, 0, -1),  # -beta_bar
    (0, -1, 0, -1),  # far tip -alpha_bar - beta_bar
)

ROLE_NAMES = (
    "shared tip",
    "alpha",
    "beta",
    "far tip alpha+beta",
    "-alpha_bar",
    "-beta_bar",
    "far tip -alpha_bar-beta_bar",
)

# Reference spindle on role indices 0..6.
SPINDLE_EDGES: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
    (0, 4), (0, 5), (4, 5), (4, 6), (5, 6),
    (3, 6),
)


@dataclass(frozen=True)
class SpindleEmbedding:
    points: tuple[LatticePoint, ...]
    role_of_anchor: int
    anchor: LatticePoint


@dataclass(frozen=True)
class SpindleCheck:
    passed: bool
    failure: str | None = None
    edges: tuple[tuple[int, int], ...] = ()

    def __bool__(self):
        return self.passed


def canonical_spindle() -> SpindleEmbedding:
    return SpindleEmbedding(CANONICAL_POINTS, 0, CANONICAL_POINTS[0])


def spindle_at(v: Sequence[int], role: int) -> SpindleEmbedding:
    """Translate the canonical spindle so that ``v`` plays ``role``."""
    if not 0 <= role < 7:
        raise ValidationError(f"role must be in 0..6, got {role}")
    v = tuple(v)
    if len(v) != 4:
        raise ValidationError(f"spindle placement needs a rank-4 point, got {v}")
    shift = sub(v, CANONICAL_POINTS[role])
    return SpindleEmbedding(tuple(add(p, shift) for p in CANONICAL_POINTS), role, v)


def _adjacency_sets(n: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    return adj


def _isomorphic(edges_a, edges_b, n: int) -> bool:
    """Backtracking isomorphism test for tiny graphs, pruned by degree."""
    a = _adjacency_sets(n, edges_a)
    b = _adjacency_sets(n, edges_b)
    if sorted(map(len, a)) != sorted(map(len, b)):
        return False
    mapping: list[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j] or len(a[i]) != len(b[j]):
                continue
            if all((mapping[k] in b[j]) == (k in a[i]) for k in range(i)):
                mapping.append(j)
                used[j] = True
                if extend(i + 1):
                    return True
                mapping.pop()
                used[j] = False
        return False

    return extend(0)


def verify_spindle(e: SpindleEmbedding, inst: VectorGraphInstance | None = None) -> SpindleCheck:
    """Exact check that the seven points induce a Moser spindle.

    Returns the first failing check: distinct points, 11 induced edges,
    exact unit edge lengths, isomorphism with the reference spindle.
    """
    inst = inst or moser_instance()
    pts = [tuple(p) for p in e.points]
    if len(pts) != 7 or len(set(pts)) != 7:
        return SpindleCheck(False, "points are not 7 distinct lattice points")
    if any(len(p) != inst.rank for p in pts):
        return SpindleCheck(False, f"points do not have rank {inst.rank}")
    dirs = set(inst.directions)
    edges = tuple((i, j) for i in range(7) for j in range(i + 1, 7) if sub(pts[i], pts[j]) in dirs)
    if len(edges) != 11:
        return SpindleCheck(False, f"induced subgraph has {len(edges)} edges, expected 11", edges)
    emb = [embed(inst, p) for p in pts]
    for i, j in edges:
        if norm_sq(emb[i] - emb[j]) != 1:
            return SpindleCheck(False, f"edge {pts[i]}-{pts[j]} is not exactly unit length", edges)
    if not _isomorphic(edges, SPINDLE_EDGES, 7):
        return SpindleCheck(False, "induced subgraph is not isomorphic to the Moser spindle", edges)
    return SpindleCheck(True, None, edges)
