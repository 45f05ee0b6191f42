"""The sequential cleaning process.

A configuration assigns a nonnegative number of brushes to each vertex.
A dirty vertex holding at least as many brushes as it has dirty
neighbours may *fire*: it sends one brush along each incident dirty
edge, keeps the excess, and becomes clean.  Clean vertices never act
again.  Stabilisation fires vertices until none is eligible; the final
distribution of brushes on dirty vertices does not depend on the firing
order, which the test suite checks rather than assumes.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import IllegalMoveError
from .graph import Graph


def _amounts_from(graph: Graph, config) -> list[int]:
    n = graph.vertex_count
    amounts = [0] * n
    if config is None:
        return amounts
    if isinstance(config, Mapping):
        items: Iterable[tuple[int, int]] = config.items()
    else:
        items = enumerate(config)
    for v, a in items:
        if not 0 <= v < n:
            raise ValueError(f"configuration names vertex {v} outside the graph")
        if a < 0:
            raise ValueError(f"configuration is negative at vertex {v}")
        amounts[v] = a
    return amounts


class BrushState:
    """Brush amounts plus the clean/dirty partition for one graph.

    `dirty_degree[v]` caches the number of dirty neighbours of each dirty
    vertex; for clean vertices it is kept at 0.  Mutating methods are
    private; the public API (`fire`, `stabilize`) is copy-on-write.
    """

    __slots__ = ("graph", "amount", "clean", "clean_count", "dirty_degree")

    def __init__(self, graph: Graph, config=None):
        self.graph = graph
        self.amount = _amounts_from(graph, config)
        self.clean = [False] * graph.vertex_count
        self.clean_count = 0
        self.dirty_degree = [graph.degree(v) for v in graph.vertices()]

    def copy(self) -> "BrushState":
        dup = BrushState.__new__(BrushState)
        dup.graph = self.graph
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

    def total(self) -> int:
        return sum(self.amount)

    def eligible(self, v: int) -> bool:
        return not self.clean[v] and self.amount[v] >= self.dirty_degree[v]

    def snapshot(self) -> tuple[frozenset[int], tuple[tuple[int, int], ...]]:
        """(clean set, amounts on dirty vertices): the order-independent
        outcome of stabilising.  Residues on clean vertices depend on which
        direction each brush crossed its edge, so different maximal firing
        orders may park them differently; play never reads them."""
        clean = self.clean
        return (
            self.clean_set(),
            tuple((v, self.amount[v]) for v in self.graph.vertices() if not clean[v]),
        )

    # -- mutating internals -------------------------------------------------

    def _fire(self, v: int) -> None:
        if self.clean[v]:
            raise IllegalMoveError(f"vertex {v} is already clean")
        dd = self.dirty_degree[v]
        if self.amount[v] < dd:
            raise IllegalMoveError(
                f"vertex {v} holds {self.amount[v]} brushes but has {dd} dirty neighbours"
            )
        self.clean[v] = True
        self.clean_count += 1
        self.amount[v] -= dd
        self.dirty_degree[v] = 0
        for u in self.graph.adjacency[v]:
            if not self.clean[u]:
                self.amount[u] += 1
                self.dirty_degree[u] -= 1

    def _stabilize(self, key: Callable[[int], object] | None = None) -> list[int]:
        """Fire eligible vertices until stable; return the firing order.

        With no key, the lowest-id eligible vertex always fires next
        (the canonical order).  A key reorders the queue, which is how the
        order-independence tests drive alternative maximal firing lists.
        """
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

    def __repr__(self) -> str:
        return (
            f"BrushState(n={self.graph.vertex_count}, clean={self.clean_count}, "
            f"total={self.total()})"
        )


@dataclass(frozen=True)
class CleaningTrace:
    """A firing order together with the stable state it leads to."""

    firing_order: tuple[int, ...]
    final_state: BrushState


def fire(state: BrushState, v: int) -> BrushState:
    """Fire one vertex, returning the new state (the input is unchanged)."""
    out = state.copy()
    out._fire(v)
    return out


def stabilize(
    state: BrushState, key: Callable[[int], object] | None = None
) -> tuple[BrushState, CleaningTrace]:
    """Run the cleaning process to a stable state.

    Returns the stable state and the trace of vertices fired, in order.
    A stable input comes back unchanged with an empty trace.
    """
    out = state.copy()
    order = out._stabilize(key)
    return out, CleaningTrace(firing_order=tuple(order), final_state=out)


def can_clean(graph: Graph, config=None) -> bool:
    """True iff stabilising from `config` leaves every vertex clean."""
    state = BrushState(graph, config)
    state._stabilize()
    return state.all_clean()
