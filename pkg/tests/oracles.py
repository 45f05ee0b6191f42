"""Independent reference implementations used only as test oracles.

Everything here works on plain adjacency dicts and deliberately shares no
code with the package, so a bug in the package cannot hide in its oracle.
"""

from __future__ import annotations

from itertools import combinations_with_replacement


def adjacency_of(graph) -> dict[int, set[int]]:
    return {v: set(graph.adjacency[v]) for v in range(graph.vertex_count)}


def ref_stabilize(adj: dict[int, set[int]], amounts: dict[int, int]):
    """Fire any eligible vertex until none is; returns (clean, amounts)."""
    clean: set[int] = set()
    am = {v: amounts.get(v, 0) for v in adj}
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v in clean:
                continue
            dirty_deg = sum(1 for u in adj[v] if u not in clean)
            if am[v] >= dirty_deg:
                clean.add(v)
                am[v] -= dirty_deg
                for u in adj[v]:
                    if u not in clean:
                        am[u] += 1
                changed = True
    return clean, am


def ref_can_clean(adj, amounts) -> bool:
    clean, _ = ref_stabilize(adj, amounts)
    return len(clean) == len(adj)


def ref_brush_number(adj) -> int:
    """Exhaustive minimum over configurations by increasing total."""
    vertices = sorted(adj)
    total = 0
    while True:
        for placement in combinations_with_replacement(vertices, total):
            config: dict[int, int] = {}
            for v in placement:
                config[v] = config.get(v, 0) + 1
            if ref_can_clean(adj, config):
                return total
        total += 1


def _freeze(clean: set[int], am: dict[int, int]):
    return (frozenset(clean), tuple(sorted((v, a) for v, a in am.items() if a and v not in clean)))


def ref_game_value_plain(adj, init=None, min_to_move=True) -> int:
    """Plain exhaustive minimax, no memoization.  Tiny graphs only."""
    clean0, am0 = _restabilize(adj, set(), {v: (init or {}).get(v, 0) for v in adj})

    def recurse(clean, am, is_min):
        if len(clean) == len(adj):
            return 0
        best = None
        for v in sorted(adj):
            if v in clean:
                continue
            am2 = dict(am)
            am2[v] += 1
            c2, a2 = _restabilize(adj, clean, am2)
            value = recurse(c2, a2, not is_min)
            if best is None or (value < best if is_min else value > best):
                best = value
        return best + 1

    return recurse(clean0, am0, min_to_move)


def _restabilize(adj, clean: set[int], am: dict[int, int]):
    """Stabilise from a mid-game position (clean set already nonempty)."""
    clean = set(clean)
    am = dict(am)
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v in clean:
                continue
            dirty_deg = sum(1 for u in adj[v] if u not in clean)
            if am[v] >= dirty_deg:
                clean.add(v)
                am[v] -= dirty_deg
                for u in adj[v]:
                    if u not in clean:
                        am[u] += 1
                changed = True
    return clean, am


def ref_game_value_memo(adj, init=None, min_to_move=True) -> int:
    """Independent memoized minimax for somewhat larger cross-checks."""
    clean0, am0 = _restabilize(adj, set(), {v: (init or {}).get(v, 0) for v in adj})
    memo: dict = {}

    def recurse(clean, am, is_min):
        if len(clean) == len(adj):
            return 0
        key = (_freeze(clean, am), is_min)
        if key in memo:
            return memo[key]
        best = None
        for v in sorted(adj):
            if v in clean:
                continue
            am2 = dict(am)
            am2[v] += 1
            c2, a2 = _restabilize(adj, clean, am2)
            value = recurse(c2, a2, not is_min)
            if best is None or (value < best if is_min else value > best):
                best = value
        memo[key] = best + 1
        return best + 1

    return recurse(clean0, am0, min_to_move)
