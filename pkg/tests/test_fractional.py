import random
from fractions import Fraction

import pytest

from brushgame.cleaning import BrushState
from brushgame.errors import IllegalMoveError
from brushgame.families import complete, cycle, path
from brushgame.fractional import (
    FractionalState,
    as_share,
    frac_fire,
    frac_stabilize,
    simulate_fractional_kn,
)
from brushgame.graph import graph_from_edges
from brushgame.triangle import kn_game_length

HALF = Fraction(1, 2)


def test_share_validation():
    assert as_share("2/4") == HALF
    for bad in (0, -1, Fraction(3, 2), "5/4"):
        with pytest.raises(ValueError):
            as_share(bad)


def test_half_share_k2_single_brush_cleans_everything():
    state = FractionalState(path(2), HALF, {0: 1})
    done, trace = frac_stabilize(state)
    assert done.all_clean()
    assert trace.firing_order == (0, 1)
    assert done.total() == 1


def test_half_share_triangle_cascade_amounts():
    state = FractionalState(complete(3), HALF, {0: 1})
    done, trace = frac_stabilize(state)
    assert done.all_clean()
    assert trace.firing_order == (0, 1, 2)
    # v0 kept nothing, v1 kept nothing, v2 ends with both halves.
    assert done.amount == [Fraction(0), Fraction(0), Fraction(1)]


def test_undersupplied_fire_rejected():
    state = FractionalState(complete(3), Fraction(3, 4), {0: 1})
    with pytest.raises(IllegalMoveError):
        frac_fire(state, 0)
    fired = frac_fire(FractionalState(complete(3), HALF, {0: 1}), 0)
    assert fired.clean[0]
    assert fired.amount[1] == HALF


def test_share_one_reduces_to_ordinary_process():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 16)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4
        ]
        g = graph_from_edges(n, edges)
        config = {v: rng.randint(0, 3) for v in range(n) if rng.random() < 0.5}
        frac_done, _ = frac_stabilize(FractionalState(g, 1, config))
        plain = BrushState(g, config)
        plain._stabilize()
        assert frac_done.clean_set() == plain.clean_set()
        assert [int(a) for a in frac_done.amount] == plain.amount


def test_conservation_and_stability_bound_exact():
    rng = random.Random(15)
    for _ in range(25):
        n = rng.randint(2, 20)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3
        ]
        g = graph_from_edges(n, edges)
        p = Fraction(rng.randint(1, 5), rng.randint(5, 9))
        config = {v: rng.randint(0, 2) for v in range(n)}
        done, _ = frac_stabilize(FractionalState(g, p, config))
        assert done.total() == sum(config.values())  # exact, no tolerance
        for v in g.vertices():
            if not done.clean[v]:
                assert done.amount[v] < p * done.dirty_degree[v]


def test_firing_order_never_matters_fractional():
    rng = random.Random(51)
    for _ in range(20):
        n = rng.randint(2, 14)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4
        ]
        g = graph_from_edges(n, edges)
        p = Fraction(rng.randint(1, 3), rng.randint(3, 7))
        config = {v: rng.randint(0, 2) for v in range(n)}
        base = FractionalState(g, p, config)
        canonical, _ = frac_stabilize(base)
        for _ in range(10):
            order = list(g.vertices())
            rng.shuffle(order)
            rank = {v: i for i, v in enumerate(order)}
            shuffled, _ = frac_stabilize(base, key=lambda v: rank[v])
            assert shuffled.snapshot() == canonical.snapshot()


def test_fractional_kn_identity_cases():
    assert simulate_fractional_kn(2, HALF) == 1
    assert simulate_fractional_kn(50, 1) == kn_game_length(50)
    assert simulate_fractional_kn(1, HALF) == 0


def test_fractional_kn_scales_roughly_with_p():
    base = kn_game_length(600)
    for p in (HALF, Fraction(1, 4)):
        length = simulate_fractional_kn(600, p)
        assert abs(length - p * base) <= Fraction(1, 10) * p * base
