import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brushgame.errors import BudgetExceededError, IllegalMoveError, SymmetryEligibilityError
from brushgame.families import comb_union_seeded, complete, cycle, path, star
from brushgame.game import Player, new_game, play
from brushgame.graph import Graph, graph_from_edges
from brushgame.solver import Solver, game_value, optimal_move

from oracles import adjacency_of, ref_game_value_memo, ref_game_value_plain


def pair(g: Graph, init=None, **kw):
    s = Solver(g, **kw)
    return (
        s.solve(init, Player.MIN).value,
        s.solve(init, Player.MAX).value,
    )


def test_path3_and_single_vertex():
    assert pair(path(3)) == (1, 2)
    assert game_value(path(1)).value == 0
    assert game_value(path(1)).principal_move is None


def test_cycles_constant_values():
    for n in (3, 4, 5, 6):
        assert pair(cycle(n)) == (3, 2)


def test_stars_alternating_values():
    for k in (1, 2, 3):
        assert pair(star(3 * k - 1)) == (2 * k - 1, 2 * k)


def test_k4_against_plain_exhaustive_oracle():
    adj = adjacency_of(complete(4))
    assert ref_game_value_plain(adj, min_to_move=True) == 5
    assert pair(complete(4)) == (
        ref_game_value_plain(adj, min_to_move=True),
        ref_game_value_plain(adj, min_to_move=False),
    )


def test_tiny_graphs_against_plain_oracle():
    for g in (path(2), path(4), cycle(3), cycle(4), star(3)):
        adj = adjacency_of(g)
        assert pair(g) == (
            ref_game_value_plain(adj, min_to_move=True),
            ref_game_value_plain(adj, min_to_move=False),
        )


def test_random_positions_against_memo_oracle():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(2, 5)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6
        ]
        g = graph_from_edges(n, edges)
        init = {v: rng.randint(0, 2) for v in range(n) if rng.random() < 0.5}
        adj = adjacency_of(g)
        assert pair(g, init) == (
            ref_game_value_memo(adj, init, min_to_move=True),
            ref_game_value_memo(adj, init, min_to_move=False),
        )


def test_seeded_comb_unions_are_mover_independent():
    for sizes in [(2,), (3,), (2, 3)]:
        inst = comb_union_seeded(sizes)
        want = sum(sizes) - len(sizes)
        assert pair(inst.graph, inst.init) == (want, want)


def test_optimal_move_examples():
    # Max avoids the endpoints of the path (they end the game at once).
    assert optimal_move(path(3), mover=Player.MAX) == 1
    assert optimal_move(path(2), mover=Player.MIN) == 0
    with pytest.raises(IllegalMoveError):
        optimal_move(path(1), mover=Player.MIN)


def test_optimal_play_reproduces_value():
    rng = random.Random(23)
    for _ in range(10):
        n = rng.randint(2, 5)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6
        ]
        g = graph_from_edges(n, edges)
        value = game_value(g, mover=Player.MIN).value
        state = new_game(g, None, Player.MIN)
        while not state.over():
            config = dict(enumerate(state.brush.amount))
            v = optimal_move(g, config, state.mover)
            play(state, v)
        assert state.turns_elapsed == value


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=2**30))
def test_value_invariant_under_relabeling(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    g = graph_from_edges(n, edges)
    perm = list(range(n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert pair(g) == pair(h)


def test_difference_between_movers_at_most_one():
    rng = random.Random(29)
    for _ in range(15):
        n = rng.randint(2, 6)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = graph_from_edges(n, edges)
        v_min, v_max = pair(g)
        assert abs(v_min - v_max) <= 1


def test_dominating_configs_never_lengthen_the_game():
    rng = random.Random(41)
    for _ in range(15):
        n = rng.randint(2, 5)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6
        ]
        g = graph_from_edges(n, edges)
        low = {v: rng.randint(0, 2) for v in range(n)}
        extra = {v: rng.randint(0, 1) for v in range(n)}
        high = {v: low[v] + extra[v] for v in range(n)}
        slack = 2 * sum(extra.values())
        solver = Solver(g)
        for mover in (Player.MIN, Player.MAX):
            v_high = solver.solve(high, mover).value
            v_low = solver.solve(low, mover).value
            assert v_high <= v_low <= v_high + slack


def test_sorted_symmetry_matches_plain_and_shrinks_the_search():
    plain = Solver(complete(5))
    plain_report = plain.solve(None, Player.MIN)
    sym = Solver(complete(5), symmetry="sorted")
    sym_report = sym.solve(None, Player.MIN)
    assert plain_report.value == sym_report.value == 9
    assert sym.positions < plain.positions

    assert pair(complete(3), symmetry="sorted") == (3, 3)
    assert pair(star(5), symmetry="sorted") == (3, 4)


def test_sorted_symmetry_rejected_off_family():
    with pytest.raises(SymmetryEligibilityError):
        Solver(path(4), symmetry="sorted")
    # auto falls back to the plain key instead
    assert pair(path(4), symmetry="auto") == pair(path(4))


def test_budget_exhaustion_reports_instead_of_guessing():
    report = game_value(complete(5), budget=5)
    assert report.budget_hit
    assert report.value is None
    assert report.positions_explored >= 5
    with pytest.raises(BudgetExceededError):
        optimal_move(complete(5), budget=5)


def test_report_counts_positions():
    report = game_value(path(3))
    assert report.positions_explored > 0
    assert report.principal_move in (0, 1, 2)
