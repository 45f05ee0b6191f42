import random

import pytest

from brushgame.brushnumber import brush_number, greedy_upper_bound, odd_lower_bound
from brushgame.errors import BudgetExceededError
from brushgame.families import complete, cycle, path, sunlet
from brushgame.graph import graph_from_edges

from oracles import adjacency_of, ref_brush_number


def test_odd_lower_bound_values():
    assert odd_lower_bound(sunlet(4)) == 4
    assert odd_lower_bound(cycle(6)) == 0
    assert odd_lower_bound(complete(4)) == 2
    assert odd_lower_bound(graph_from_edges(3, [])) == 0


def test_small_exact_values():
    assert brush_number(path(5)) == 1
    assert brush_number(cycle(5)) == 2
    assert brush_number(complete(4)) == 4
    assert brush_number(graph_from_edges(4, [])) == 0


def test_matches_reference_search():
    assert ref_brush_number(adjacency_of(cycle(5))) == 2
    assert ref_brush_number(adjacency_of(complete(4))) == 4
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(1, 5)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6
        ]
        g = graph_from_edges(n, edges)
        assert brush_number(g) == ref_brush_number(adjacency_of(g))


def test_bounds_sandwich_random():
    rng = random.Random(8)
    for _ in range(30):
        n = rng.randint(2, 7)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = graph_from_edges(n, edges)
        b = brush_number(g)
        assert odd_lower_bound(g) <= b <= greedy_upper_bound(g)


def test_budget_exceeded_is_an_error_not_a_value():
    with pytest.raises(BudgetExceededError):
        brush_number(complete(7), budget=10)
