import itertools
import random

import pytest

from vgraph.errors import SolverCapExceeded, ValidationError
from vgraph.lattice import ball, induced_subgraph
from vgraph.linear import PAPER_COLORING, verify_on_graph
from vgraph.solver import (
    SimpleGraph,
    chromatic_number,
    dsatur,
    greedy_coloring,
    is_proper,
    k_colorable,
    max_clique_lb,
)
from vgraph.spindle import CANONICAL_POINTS

ORIGIN = (0, 0, 0, 0)
TRIANGLE = SimpleGraph(3, ((0, 1), (1, 2), (0, 2)))
C5 = SimpleGraph(5, tuple((i, (i + 1) % 5) for i in range(5)))


def partitions(n):
    """Restricted growth strings: one labelling per set partition of range(n)."""
    def rec(prefix, top):
        if len(prefix) == n:
            yield prefix
            return
        for c in range(top + 2):
            yield from rec(prefix + [c], max(top, c))

    yield from rec([], -1)


def brute_chromatic(g):
    if g.n == 0:
        return 0
    return min(max(lab) + 1 for lab in partitions(g.n) if all(lab[i] != lab[j] for i, j in g.edges))


def brute_clique(g):
    edges = set(g.edges)
    best = 0
    for size in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            if all((a, b) in edges for a, b in itertools.combinations(sub, 2)):
                best = size
                break
    return best


def random_graph(rng, n):
    p = rng.random()
    return SimpleGraph(n, tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


@pytest.fixture
def spindle(moser):
    return induced_subgraph(moser, CANONICAL_POINTS)


def test_partition_oracle_counts():
    # Bell numbers
    assert [sum(1 for _ in partitions(n)) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


def test_greedy_examples(spindle):
    for order in itertools.permutations(range(3)):
        assert greedy_coloring(TRIANGLE, order).num_colors == 3
    assert greedy_coloring(SimpleGraph(5, ())).num_colors == 1
    res = greedy_coloring(spindle)
    assert res.num_colors >= 4 and is_proper(spindle, res.assignment) and not res.optimal
    with pytest.raises(ValidationError):
        greedy_coloring(TRIANGLE, [0, 0, 1])


def test_dsatur_examples(spindle, zsq):
    assert dsatur(spindle).num_colors == 4
    assert dsatur(C5).num_colors == 3
    z = ball(zsq, (0, 0), 3)
    res = dsatur(z)
    assert res.num_colors == 2 and is_proper(z, res.assignment)


def test_max_clique_examples(spindle, zsq):
    size, witness = max_clique_lb(spindle)
    assert size == 3 == brute_clique(spindle)
    assert all((a, b) in set(spindle.edges) for a, b in itertools.combinations(witness, 2))
    assert max_clique_lb(TRIANGLE)[0] == 3
    assert max_clique_lb(ball(zsq, (0, 0), 2))[0] == 2


def test_chromatic_examples(moser, spindle):
    res = chromatic_number(spindle)
    assert res.num_colors == 4 and res.optimal and is_proper(spindle, res.assignment)
    tri = induced_subgraph(moser, [ORIGIN, (1, 0, 0, 0), (0, 0, 1, 0)])
    assert chromatic_number(tri).num_colors == 3
    assert chromatic_number(ball(moser, ORIGIN, 2)).num_colors == 4
    assert chromatic_number(SimpleGraph(0, ())).num_colors == 0
    assert chromatic_number(SimpleGraph(4, ())).num_colors == 1


def test_k_colorable_examples(moser, spindle):
    three = k_colorable(spindle, 3)
    assert not three and three.assignment is None
    four = k_colorable(spindle, 4)
    assert four and is_proper(spindle, four.assignment)
    g3 = ball(moser, ORIGIN, 3)
    assert verify_on_graph(PAPER_COLORING, g3) == []
    res = k_colorable(g3, 4)
    assert res and is_proper(g3, res.assignment)
    with pytest.raises(ValidationError):
        k_colorable(spindle, 0)


def test_cap(moser):
    g = ball(moser, ORIGIN, 2)
    with pytest.raises(SolverCapExceeded) as info:
        chromatic_number(g, cap=50)
    assert info.value.lower == 3 and info.value.upper >= 4
    with pytest.raises(SolverCapExceeded):
        k_colorable(g, 4, cap=50)


def test_random_graphs_match_brute_force():
    rng = random.Random(2024)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 9))
        res = chromatic_number(g)
        assert is_proper(g, res.assignment)
        assert res.num_colors == brute_chromatic(g)
        lb, _ = max_clique_lb(g)
        assert lb == brute_clique(g)
        assert lb <= res.num_colors <= dsatur(g).num_colors
        k = res.num_colors
        assert k_colorable(g, k)
        if k > 1:
            assert not k_colorable(g, k - 1)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_moser_balls_have_chi_4_or_3(moser, r):
    g = ball(moser, ORIGIN, r)
    res = chromatic_number(g)
    assert is_proper(g, res.assignment)
    # radius 1 holds no full spindle; radius 2 and up do
    assert res.num_colors == (3 if r == 1 else 4)


def test_off_origin_ball(moser):
    g = ball(moser, (3, -1, 2, 0), 3)
    assert chromatic_number(g).num_colors == 4


def test_deterministic(moser):
    g = ball(moser, ORIGIN, 3)
    assert chromatic_number(g) == chromatic_number(g)
    assert dsatur(g) == dsatur(g)
