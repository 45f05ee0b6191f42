"""Exact game values by memoized minimax over stable positions.

A position is a stable brush state plus the player to move; its value is
the optimal number of remaining turns (Min minimises, Max maximises,
terminal value 0).  Turns already elapsed are irrelevant, so the memo key
is just the position.  Residues on clean vertices can never act again and
are zeroed out of the key.

The optional sorted-multiset symmetry collapses positions that differ
only by an automorphism exchanging interchangeable vertices.  It is valid
for complete graphs, stars (interchangeable leaves) and triangle bouquets
(interchangeable rim pairs), and is rejected on anything else.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, IllegalMoveError, SymmetryEligibilityError
from .game import Player
from .graph import Graph

SYMMETRY_NONE = "none"
SYMMETRY_SORTED = "sorted"
SYMMETRY_AUTO = "auto"

_CLEAN_CODE = -1  # sorts below every residual amount


@dataclass(frozen=True)
class SolveReport:
    value: int | None
    principal_move: int | None
    positions_explored: int
    budget_hit: bool


class _BudgetHit(Exception):
    pass


def _detect_complete(g: Graph) -> bool:
    n = g.vertex_count
    return all(g.degree(v) == n - 1 for v in g.vertices())


def _detect_star_center(g: Graph) -> int | None:
    """Centre vertex of K_{1,l} with l >= 2, else None."""
    n = g.vertex_count
    if n < 3 or g.edge_count != n - 1:
        return None
    centers = [v for v in g.vertices() if g.degree(v) == n - 1]
    if len(centers) != 1:
        return None
    c = centers[0]
    if all(g.degree(v) == 1 for v in g.vertices() if v != c):
        return c
    return None


def _detect_bouquet(g: Graph) -> tuple[int, list[tuple[int, int]]] | None:
    """(centre, rim pairs) if g is a bouquet of triangles at one vertex."""
    n = g.vertex_count
    if n < 3 or n % 2 == 0:
        return None
    k2 = (n - 1) // 2
    centers = [v for v in g.vertices() if g.degree(v) == n - 1]
    if len(centers) != 1:
        return None
    c = centers[0]
    pairs = []
    seen = set()
    for v in g.vertices():
        if v == c or v in seen:
            continue
        if g.degree(v) != 2:
            return None
        others = [u for u in g.adjacency[v] if u != c]
        if len(others) != 1:
            return None
        w = others[0]
        if w in seen or g.degree(w) != 2 or c not in g.adjacency[w]:
            return None
        seen.update((v, w))
        pairs.append((min(v, w), max(v, w)))
    if len(pairs) != k2:
        return None
    return c, sorted(pairs)


class Solver:
    """Reusable exact solver for one graph; the memo is shared across calls,
    so solving both the Min-start and Max-start game costs little more than
    solving one of them."""

    def __init__(self, graph: Graph, symmetry: str = SYMMETRY_NONE, budget: int | None = None):
        self.graph = graph
        self.n = graph.vertex_count
        self.adj = [0] * self.n
        for v in graph.vertices():
            mask = 0
            for u in graph.adjacency[v]:
                mask |= 1 << u
            self.adj[v] = mask
        self.full = (1 << self.n) - 1
        self.budget = budget
        self.positions = 0
        self.memo: dict = {}
        self._key = self._select_key(symmetry)

    # -- symmetry -------------------------------------------------------

    def _select_key(self, symmetry: str):
        if symmetry == SYMMETRY_NONE:
            return self._key_plain
        if symmetry not in (SYMMETRY_SORTED, SYMMETRY_AUTO):
            raise ValueError(f"unknown symmetry mode {symmetry!r}")
        if _detect_complete(self.graph):
            return self._key_complete
        center = _detect_star_center(self.graph)
        if center is not None:
            self._center = center
            return self._key_star
        bq = _detect_bouquet(self.graph)
        if bq is not None:
            self._center, self._pairs = bq
            return self._key_bouquet
        if symmetry == SYMMETRY_AUTO:
            return self._key_plain
        raise SymmetryEligibilityError(
            "sorted-multiset symmetry needs interchangeable vertices "
            "(complete graph, star, or triangle bouquet)"
        )

    def _key_plain(self, clean: int, am: tuple, mover: int):
        return (mover, clean, am)

    def _key_complete(self, clean: int, am: tuple, mover: int):
        dirty = self.full & ~clean
        vals = []
        while dirty:
            b = dirty & -dirty
            vals.append(am[b.bit_length() - 1])
            dirty ^= b
        vals.sort()
        return (mover, tuple(vals))

    def _key_star(self, clean: int, am: tuple, mover: int):
        c = self._center
        center_clean = bool(clean & (1 << c))
        leaves = []
        dirty = self.full & ~clean & ~(1 << c)
        while dirty:
            b = dirty & -dirty
            leaves.append(am[b.bit_length() - 1])
            dirty ^= b
        leaves.sort()
        return (mover, center_clean, am[c], tuple(leaves))

    def _key_bouquet(self, clean: int, am: tuple, mover: int):
        c = self._center
        center_clean = bool(clean & (1 << c))
        codes = []
        for a, b in self._pairs:
            ca = _CLEAN_CODE if clean & (1 << a) else am[a]
            cb = _CLEAN_CODE if clean & (1 << b) else am[b]
            codes.append((ca, cb) if ca <= cb else (cb, ca))
        codes.sort()
        return (mover, center_clean, am[c], tuple(codes))

    # -- core process on bitmasks ----------------------------------------

    def _stabilize(self, clean: int, am: list[int]) -> int:
        """Fire until stable; zero the amount of fired vertices (residues on
        clean vertices never matter to play, so the key stays canonical)."""
        adj = self.adj
        queue = [v for v in range(self.n) if not clean & (1 << v)]
        while queue:
            nxt = []
            fired_any = False
            for v in queue:
                bit = 1 << v
                if clean & bit:
                    continue
                dirty = self.full & ~clean
                if am[v] >= (adj[v] & dirty).bit_count():
                    clean |= bit
                    am[v] = 0
                    fired_any = True
                    nb = adj[v] & dirty & ~bit
                    while nb:
                        nbit = nb & -nb
                        u = nbit.bit_length() - 1
                        am[u] += 1
                        nxt.append(u)
                        nb ^= nbit
                else:
                    nxt.append(v)
            if not fired_any:
                break
            queue = nxt
        return clean

    def _root(self, init) -> tuple[int, tuple]:
        am = [0] * self.n
        if init:
            for v, a in (init.items() if hasattr(init, "items") else enumerate(init)):
                if not 0 <= v < self.n:
                    raise ValueError(f"configuration names vertex {v} outside the graph")
                if a < 0:
                    raise ValueError("configuration amounts must be nonnegative")
                am[v] = a
        clean = self._stabilize(0, am)
        return clean, tuple(am)

    # -- search -----------------------------------------------------------

    def _value(self, clean: int, am: tuple, mover: int) -> int:
        if clean == self.full:
            return 0
        key = self._key(clean, am, mover)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        self.positions += 1
        if self.budget is not None and self.positions > self.budget:
            raise _BudgetHit
        adj = self.adj
        dirty = self.full & ~clean
        best: int | None = None
        minimizing = mover == 0
        m = dirty
        while m:
            bit = m & -m
            v = bit.bit_length() - 1
            m ^= bit
            a = am[v] + 1
            if a < (adj[v] & dirty).bit_count():
                # No firing: only v's amount changes.
                child = self._value(clean, am[:v] + (a,) + am[v + 1 :], 1 - mover)
            else:
                am2 = list(am)
                am2[v] = a
                clean2 = self._stabilize(clean, am2)
                child = self._value(clean2, tuple(am2), 1 - mover)
            if best is None or (child < best if minimizing else child > best):
                best = child
        assert best is not None
        result = best + 1
        self.memo[key] = result
        return result

    def solve(self, init=None, mover: Player = Player.MIN) -> SolveReport:
        clean, am = self._root(init)
        mbit = 0 if mover is Player.MIN else 1
        if clean == self.full:
            return SolveReport(0, None, self.positions, False)
        try:
            value = self._value(clean, am, mbit)
        except _BudgetHit:
            return SolveReport(None, None, self.positions, True)
        move = self._principal(clean, am, mbit, value)
        return SolveReport(value, move, self.positions, False)

    def _principal(self, clean: int, am: tuple, mover: int, value: int) -> int:
        """Lowest-id move whose child value realises the position value."""
        adj = self.adj
        dirty = self.full & ~clean
        m = dirty
        while m:
            bit = m & -m
            v = bit.bit_length() - 1
            m ^= bit
            am2 = list(am)
            am2[v] += 1
            clean2 = self._stabilize(clean, am2)
            if clean2 == self.full:
                child = 0
            else:
                child = self._value(clean2, tuple(am2), 1 - mover)
            if child + 1 == value:
                return v
        raise AssertionError("no move realises the computed value")


def game_value(
    graph: Graph,
    init=None,
    mover: Player = Player.MIN,
    budget: int | None = None,
    symmetry: str = SYMMETRY_NONE,
) -> SolveReport:
    """Optimal remaining game length from `init` with `mover` to play.

    With an empty configuration this is the Min-start game value for
    mover MIN and the Max-start value for mover MAX.  The budget counts
    distinct positions inserted into the memo table; exceeding it returns
    a report with `budget_hit` set and no value.
    """
    return Solver(graph, symmetry=symmetry, budget=budget).solve(init, mover)


def optimal_move(
    graph: Graph,
    init=None,
    mover: Player = Player.MIN,
    budget: int | None = None,
    symmetry: str = SYMMETRY_NONE,
) -> int:
    """A value-realising move for `mover` (ties broken to the lowest id)."""
    report = game_value(graph, init, mover, budget=budget, symmetry=symmetry)
    if report.budget_hit:
        raise BudgetExceededError("solver ran out of its position budget")
    if report.principal_move is None:
        raise IllegalMoveError("the game is already over; there is no move")
    return report.principal_move
