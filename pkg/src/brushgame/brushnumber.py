"""Exact brush number of small graphs, with supporting bounds.

The brush number b(G) is the minimum total size of a configuration that
cleans G.  No polynomial algorithm is implemented here; the exact search
enumerates configurations by increasing total and is intended for graphs
with at most roughly ten vertices.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .cleaning import BrushState, can_clean
from .errors import BudgetExceededError
from .graph import Graph


def odd_lower_bound(g: Graph) -> int:
    """Half the number of odd-degree vertices, a lower bound for b(G).

    Each brush traces an edge-disjoint path through the process, and the
    paths cover all edges, so every odd-degree vertex must start or end
    one; the odd count is always even.
    """
    odd = sum(1 for v in g.vertices() if g.degree(v) % 2 == 1)
    return odd // 2


def greedy_upper_bound(g: Graph) -> int:
    """Total brushes used by a deficit-greedy cleaning (an upper bound).

    Repeatedly stabilise, then top up the dirty vertex with the smallest
    deficit (dirty degree minus current amount) until it fires.
    """
    state = BrushState(g)
    state._stabilize()
    spent = 0
    while not state.all_clean():
        best = None
        best_deficit = None
        for v in g.vertices():
            if state.clean[v]:
                continue
            deficit = state.dirty_degree[v] - state.amount[v]
            if best_deficit is None or deficit < best_deficit:
                best, best_deficit = v, deficit
        assert best is not None and best_deficit is not None and best_deficit > 0
        state.amount[best] += best_deficit
        spent += best_deficit
        state._stabilize()
    return spent


def brush_number(g: Graph, budget: int = 2_000_000) -> int:
    """Exact b(G) by exhaustive search over configuration totals.

    Configurations are enumerated by increasing total, supported only on
    vertices of degree >= 1 (a brush on an isolated vertex is wasted).
    The search runs from the odd-degree lower bound up to the greedy
    upper bound; if every smaller total fails, the greedy total is the
    answer.  `budget` caps the number of configurations tested; running
    out raises BudgetExceededError rather than returning a wrong value.
    """
    support = [v for v in g.vertices() if g.degree(v) >= 1]
    if not support:
        return 0
    upper = greedy_upper_bound(g)
    tested = 0
    for total in range(odd_lower_bound(g), upper):
        if total == 0:
            if can_clean(g, {}):
                return 0
            tested += 1
            continue
        for placement in combinations_with_replacement(support, total):
            tested += 1
            if tested > budget:
                raise BudgetExceededError(
                    f"brush_number tested {budget} configurations without finishing"
                )
            config: dict[int, int] = {}
            for v in placement:
                config[v] = config.get(v, 0) + 1
            if can_clean(g, config):
                return total
    return upper
