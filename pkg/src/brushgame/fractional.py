"""The fractional cleaning process and game, over exact rationals.

For a parameter p in (0, 1], a dirty vertex fires once it holds at least
p times as many brushes as it has dirty neighbours, and sends exactly p
brushes to each of them.  Players still place whole brushes one at a
time, so amounts live in the set {a + b*p : a, b nonnegative integers}.
All game logic uses Fraction arithmetic; floats would change outcomes at
the firing thresholds, so they are only ever used for reporting.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .errors import IllegalMoveError
from .graph import Graph


def as_share(p) -> Fraction:
    """Validate and normalise the transfer share p (a rational in (0, 1])."""
    share = Fraction(p)
    if not 0 < share <= 1:
        raise ValueError(f"p must lie in (0, 1], got {p!r}")
    return share


class FractionalState:
    """Mirror of BrushState with exact-rational amounts and threshold p."""

    __slots__ = ("graph", "p", "amount", "clean", "clean_count", "dirty_degree")

    def __init__(self, graph: Graph, p, config=None):
        self.graph = graph
        self.p = as_share(p)
        n = graph.vertex_count
        self.amount: list[Fraction] = [Fraction(0)] * n
        if config is not None:
            items: Iterable = config.items() if isinstance(config, Mapping) else enumerate(config)
            for v, a in items:
                if not 0 <= v < n:
                    raise ValueError(f"configuration names vertex {v} outside the graph")
                value = Fraction(a)
                if value < 0:
                    raise ValueError(f"configuration is negative at vertex {v}")
                self.amount[v] = value
        self.clean = [False] * n
        self.clean_count = 0
        self.dirty_degree = [graph.degree(v) for v in graph.vertices()]

    def copy(self) -> "FractionalState":
        dup = FractionalState.__new__(FractionalState)
        dup.graph = self.graph
        dup.p = self.p
        dup.amount = list(self.amount)
        dup.clean = list(self.clean)
        dup.clean_count = self.clean_count
        dup.dirty_degree = list(self.dirty_degree)
        return dup

    def is_dirty(self, v: int) -> bool:
        return not self.clean[v]

    def all_clean(self) -> bool:
        return self.clean_count == self.graph.vertex_count

    def dirty_vertices(self) -> list[int]:
        return [v for v in self.graph.vertices() if not self.clean[v]]

    def clean_set(self) -> frozenset[int]:
        return frozenset(v for v in self.graph.vertices() if self.clean[v])

    def total(self) -> Fraction:
        return sum(self.amount, Fraction(0))

    def eligible(self, v: int) -> bool:
        return not self.clean[v] and self.amount[v] >= self.p * self.dirty_degree[v]

    def snapshot(self) -> tuple[frozenset[int], tuple[tuple[int, Fraction], ...]]:
        """(clean set, amounts on dirty vertices); see BrushState.snapshot."""
        clean = self.clean
        return (
            self.clean_set(),
            tuple((v, self.amount[v]) for v in self.graph.vertices() if not clean[v]),
        )

    def _fire(self, v: int) -> None:
        if self.clean[v]:
            raise IllegalMoveError(f"vertex {v} is already clean")
        need = self.p * self.dirty_degree[v]
        if self.amount[v] < need:
            raise IllegalMoveError(
                f"vertex {v} holds {self.amount[v]} but needs {need} to fire"
            )
        self.clean[v] = True
        self.clean_count += 1
        self.amount[v] -= need
        self.dirty_degree[v] = 0
        p = self.p
        for u in self.graph.adjacency[v]:
            if not self.clean[u]:
                self.amount[u] += p
                self.dirty_degree[u] -= 1

    def _stabilize(self, key: Callable[[int], object] | None = None) -> list[int]:
        prio = key if key is not None else (lambda v: v)
        heap = [(prio(v), v) for v in self.graph.vertices() if self.eligible(v)]
        heapq.heapify(heap)
        order: list[int] = []
        while heap:
            _, v = heapq.heappop(heap)
            if self.clean[v] or not self.eligible(v):
                continue
            affected = [u for u in self.graph.adjacency[v] if not self.clean[u]]
            self._fire(v)
            order.append(v)
            for u in affected:
                if self.eligible(u):
                    heapq.heappush(heap, (prio(u), u))
        return order


@dataclass(frozen=True)
class FractionalTrace:
    firing_order: tuple[int, ...]
    final_state: FractionalState


def frac_fire(state: FractionalState, v: int) -> FractionalState:
    """Fire one vertex of a fractional state, copy-on-write."""
    out = state.copy()
    out._fire(v)
    return out


def frac_stabilize(
    state: FractionalState, key: Callable[[int], object] | None = None
) -> tuple[FractionalState, FractionalTrace]:
    """Run the fractional process to a stable state (canonical order:
    ascending vertex id; the outcome is order-independent, which the tests
    check with shuffled orders)."""
    out = state.copy()
    order = out._stabilize(key)
    return out, FractionalTrace(firing_order=tuple(order), final_state=out)


def simulate_fractional_kn(n: int, p) -> int:
    """Length of the fractional game on K_n, greedy Min vs balanced Max.

    Uses the sorted-column representation.  With f vertices fired, every
    dirty vertex has received f*p brushes, so ordering by total brushes is
    ordering by brushes placed, and the first unfired column fires when

        placed + f*p >= p * (n - 1 - f).

    Scaling by the denominator of p keeps the comparison in integers; this
    is still exact rational arithmetic, with the common denominator
    factored out.  With p = 1 this is exactly the ordinary K_n game.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    share = as_share(p)
    num, den = share.numerator, share.denominator
    if n == 1:
        return 0
    w = n
    runs: list[list[int]] = [[0, 0]]
    k = 0
    turns = 0

    def fires(count: int) -> bool:
        return den * count >= num * (n - 1 - 2 * k)

    def fire_cascade() -> None:
        nonlocal k
        while runs and fires(runs[-1][0]):
            top = runs[-1]
            next_start = runs[-2][1] if len(runs) > 1 else w
            if next_start == k + 1:
                runs.pop()
            else:
                top[1] = k + 1
            k += 1

    def place_first_unfired() -> None:
        top = runs[-1]
        next_start = runs[-2][1] if len(runs) > 1 else w
        if next_start == k + 1:
            top[0] += 1
        else:
            top[1] = k + 1
            runs.append([top[0] + 1, k])

    def place_minimum() -> None:
        bottom = runs[0]
        j = bottom[1]
        v = bottom[0]
        if len(runs) == 1:
            place_first_unfired()
            return
        above = runs[1]
        if above[0] == v + 1:
            bottom[1] = j + 1
            if bottom[1] == w:
                runs.pop(0)
        elif w - j == 1:
            bottom[0] += 1
        else:
            bottom[1] = j + 1
            runs.insert(1, [v + 1, j])

    fire_cascade()
    while runs:
        place_first_unfired()  # Min
        turns += 1
        fire_cascade()
        if not runs:
            break
        place_minimum()  # Max
        turns += 1
        fire_cascade()
    return turns
