import itertools
import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from vgraph.errors import DimensionError, ValidationError
from vgraph.field import ALPHA, ALPHA_BAR, BETA, BETA_BAR, QReal, XYVec, norm_sq
from vgraph.lattice import (
    VectorGraphInstance,
    add,
    ball,
    bfs_distances,
    embed,
    induced_subgraph,
    is_adjacent,
    neighbors,
    rank_fraction_free,
    unit_distance_pairs,
    validate_instance,
    verify_unique_representation,
)
from vgraph.spindle import CANONICAL_POINTS

ORIGIN = (0, 0, 0, 0)


def sums_oracle(inst, r):
    """Points reachable as a sum of at most r signed connection vectors."""
    zero = (0,) * inst.rank
    steps = list(inst.directions) + [zero]
    points = {zero}
    for combo in itertools.combinations_with_replacement(steps, r):
        points.add(tuple(map(sum, zip(zero, *combo))))
    return points


def test_moser_instance_contents(moser):
    assert moser.rank == 4
    assert (1, 1, 1, 1) in moser.connections
    assert (1, 0, -1, 0) in moser.connections
    assert len(moser.connections) == 7
    assert validate_instance(moser) == []


def test_zsquare_instance(zsq):
    assert zsq.rank == 2
    assert len(neighbors(zsq, (3, -1))) == 4
    assert is_adjacent(zsq, (0, 0), (1, 0))
    assert not is_adjacent(zsq, (0, 0), (1, 1))
    assert validate_instance(zsq) == []


def test_unique_representation(moser, zsq):
    assert verify_unique_representation(moser)
    assert verify_unique_representation(zsq)
    dup = VectorGraphInstance("dup", (ALPHA, ALPHA), ((1, 0),))
    assert not verify_unique_representation(dup)
    assert any("independent" in p for p in validate_instance(dup))


def test_moser_independence_equations(moser):
    # Coefficient rows for x/y on each radical reduce to the four equations
    # a+b+c+d = 0, a+b-c-d = 0, a-b+c-d = 0, -a+b+c-d = 0.
    eqs = sympy.Matrix([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [-1, 1, 1, -1]])
    assert eqs.nullspace() == []
    from vgraph.lattice import coordinate_matrix

    m = sympy.Matrix([[sympy.Rational(q.numerator, q.denominator) for q in row] for row in coordinate_matrix(moser)])
    assert m.rank() == 4


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=6))
def test_bareiss_rank_matches_sympy(rows):
    assert rank_fraction_free(rows) == sympy.Matrix(rows).rank()


def test_bad_instances_are_reported():
    not_unit = VectorGraphInstance("x", (ALPHA, BETA), ((1, 1),))
    assert any("unit" in p for p in validate_instance(not_unit))
    negated = VectorGraphInstance("y", (ALPHA, BETA), ((1, 0), (-1, 0)))
    assert any("negation" in p for p in validate_instance(negated))
    with pytest.raises(DimensionError):
        VectorGraphInstance("z", (ALPHA, BETA), ((1, 0, 0),))


def test_embed_examples(moser):
    assert embed(moser, ORIGIN) == XYVec(QReal(), QReal())
    assert embed(moser, (1, 1, 1, 1)) == XYVec(QReal(1), QReal())
    alpha = embed(moser, (1, 0, 0, 0))
    assert alpha == XYVec(QReal(Fraction(1, 4), 0, 0, Fraction(1, 12)), QReal(0, Fraction(-1, 12), Fraction(1, 4)))
    angle = math.acos(1 / (2 * math.sqrt(3))) - math.pi / 6
    assert alpha.to_float() == pytest.approx((math.cos(angle), math.sin(angle)), abs=1e-12)
    with pytest.raises(DimensionError):
        embed(moser, (1, 0))


@given(st.tuples(*[st.integers(-6, 6)] * 4))
def test_embed_is_linear_combination(p):
    from vgraph.lattice import moser_instance

    expected = ALPHA * p[0] + ALPHA_BAR * p[1] + BETA * p[2] + BETA_BAR * p[3]
    assert embed(moser_instance(), p) == expected


def test_adjacency_examples(moser):
    assert is_adjacent(moser, ORIGIN, (1, 0, -1, 0))
    assert not is_adjacent(moser, ORIGIN, (2, 0, 0, 0))
    with pytest.raises(DimensionError):
        is_adjacent(moser, ORIGIN, (1, 0))


@given(st.tuples(*[st.integers(-3, 3)] * 4), st.tuples(*[st.integers(-3, 3)] * 4), st.tuples(*[st.integers(-9, 9)] * 4))
def test_adjacency_symmetric_and_translation_invariant(p, q, t):
    from vgraph.lattice import moser_instance

    m = moser_instance()
    assert is_adjacent(m, p, q) == is_adjacent(m, q, p)
    assert is_adjacent(m, p, q) == is_adjacent(m, add(p, t), add(q, t))


def test_neighbors(moser, zsq):
    nb = neighbors(moser, ORIGIN)
    assert len(nb) == 14
    assert nb == sorted(nb)
    assert (-1, -1, -1, -1) in nb
    brute = {tuple(s * a for a in c) for c in moser.connections for s in (1, -1)}
    assert set(nb) == brute and len(brute) == 14
    assert len(neighbors(zsq, (0, 0))) == 4
    with pytest.raises(DimensionError):
        neighbors(moser, (0, 0))


@pytest.mark.parametrize("r, count", [(0, 1), (1, 15), (2, 101), (3, 383), (4, 1051)])
def test_ball_sizes_against_sum_oracle(moser, r, count):
    g = ball(moser, ORIGIN, r)
    oracle = sums_oracle(moser, r)
    assert len(oracle) == count
    assert set(g.vertices) == oracle
    assert list(g.vertices) == sorted(g.vertices)


def test_ball_edges_against_pairwise_oracle(moser):
    g = ball(moser, ORIGIN, 2)
    brute = [(i, j) for i, j in itertools.combinations(range(g.n), 2) if is_adjacent(moser, g.vertices[i], g.vertices[j])]
    assert list(g.edges) == brute
    assert len(ball(moser, ORIGIN, 1).edges) == 26


def test_ball_monotone(moser):
    for r in range(4):
        assert set(ball(moser, ORIGIN, r).vertices) <= set(ball(moser, ORIGIN, r + 1).vertices)


def test_ball_rejects_negative_radius(moser):
    with pytest.raises(ValidationError):
        ball(moser, ORIGIN, -1)


def test_ball_off_origin_is_translate(moser):
    c = (2, -1, 0, 3)
    g0, g1 = ball(moser, ORIGIN, 2), ball(moser, c, 2)
    assert sorted(add(p, c) for p in g0.vertices) == list(g1.vertices)
    assert g0.edges == g1.edges


def test_induced_subgraph(moser):
    tri = induced_subgraph(moser, [ORIGIN, (1, 0, 0, 0), (0, 0, 1, 0)])
    assert len(tri.edges) == 3
    assert len(induced_subgraph(moser, [ORIGIN]).edges) == 0
    assert len(induced_subgraph(moser, CANONICAL_POINTS).edges) == 11
    with pytest.raises(ValidationError):
        induced_subgraph(moser, [ORIGIN, ORIGIN])


def test_unit_distance_pairs(moser, zsq):
    g1 = ball(moser, ORIGIN, 1)
    assert set(g1.edges) <= set(unit_distance_pairs(g1))
    sp = induced_subgraph(moser, CANONICAL_POINTS)
    assert unit_distance_pairs(sp) == list(sp.edges)
    assert len(list(itertools.combinations(range(7), 2))) == 21
    z1 = ball(zsq, (0, 0), 1)
    assert unit_distance_pairs(z1) == list(z1.edges) and len(z1.edges) == 4


def test_degree_regularity(moser):
    g = ball(moser, ORIGIN, 4)
    dist = bfs_distances(g, g.index[ORIGIN])
    for i in range(g.n):
        if dist[i] <= 3:
            assert g.degree(i) == 14


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_edges_exactly_unit(moser, r):
    g = ball(moser, ORIGIN, r)
    for i, j in g.edges:
        assert norm_sq(g.embedding[i] - g.embedding[j]) == 1


def test_injective_up_to_radius_3(moser):
    g = ball(moser, ORIGIN, 3)
    assert len(set(g.embedding)) == g.n


def test_ball_deterministic(moser):
    a, b = ball(moser, ORIGIN, 3), ball(moser, ORIGIN, 3)
    assert a.vertices == b.vertices and a.edges == b.edges
    assert a == b


def test_bfs_distance_matches_ball_radius(moser):
    rng = random.Random(3)
    g = ball(moser, ORIGIN, 3)
    dist = bfs_distances(g, g.index[ORIGIN])
    inner = set(ball(moser, ORIGIN, 2).vertices)
    for i in rng.sample(range(g.n), 50):
        assert (dist[i] <= 2) == (g.vertices[i] in inner)
