"""The two-player brushing game.

Min and Max alternately place one brush per turn on a dirty vertex;
firings cascade after each placement and the game ends once every vertex
is clean.  Min wants the game short, Max wants it long.  Placements on
clean vertices are illegal here (under optimal play they are dominated
moves, so the game values are unaffected by this choice).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .cleaning import BrushState
from .errors import IllegalMoveError, InternalInvariantError
from .graph import Graph


class Player(Enum):
    MIN = "min"
    MAX = "max"

    @property
    def opponent(self) -> "Player":
        return Player.MAX if self is Player.MIN else Player.MIN

    @staticmethod
    def parse(text: str) -> "Player":
        try:
            return Player(text.lower())
        except ValueError:
            raise ValueError(f"unknown player {text!r}; expected 'min' or 'max'")


@dataclass
class GameState:
    """One game in progress.  Owned and mutated by a single driver."""

    brush: BrushState
    mover: Player
    turns_elapsed: int = 0
    transcript: list[tuple[Player, int]] = field(default_factory=list)
    last_fired: tuple[int, ...] = ()

    @property
    def graph(self) -> Graph:
        return self.brush.graph

    def over(self) -> bool:
        return self.brush.all_clean()


def new_game(graph: Graph, init=None, first: Player = Player.MIN) -> GameState:
    """Set up a game: place `init`, stabilise (costing no turns), set the mover."""
    brush = BrushState(graph, init)
    fired = brush._stabilize()
    return GameState(brush=brush, mover=first, last_fired=tuple(fired))


def legal_moves(state: GameState) -> frozenset[int]:
    """The dirty vertices; empty once the game is over."""
    if state.over():
        return frozenset()
    return frozenset(state.brush.dirty_vertices())


def play(state: GameState, v: int) -> GameState:
    """Apply one placement: brush on v, cascade, flip mover, count the turn.

    Mutates `state` in place and returns it.  Illegal moves raise without
    touching the state.
    """
    if state.over():
        raise IllegalMoveError("the game is over")
    if not 0 <= v < state.graph.vertex_count:
        raise IllegalMoveError(f"vertex {v} is not in the graph")
    if state.brush.clean[v]:
        raise IllegalMoveError(f"vertex {v} is clean; placements go on dirty vertices")
    state.brush.amount[v] += 1
    fired = state.brush._stabilize()
    state.transcript.append((state.mover, v))
    state.mover = state.mover.opponent
    state.turns_elapsed += 1
    state.last_fired = tuple(fired)
    cap = 2 * state.graph.edge_count + 1
    if state.turns_elapsed > cap:
        raise InternalInvariantError(
            f"game ran past the {cap}-turn stability cap; this is a bug"
        )
    return state


# -- strategies --------------------------------------------------------------


class Strategy:
    """Chooses a legal vertex for the current mover.

    Strategies may keep per-match state; `reset` is called once before the
    first turn and `observe` after every placement (by either player) with
    the vertex played and the vertices fired by the cascade.
    """

    name = "strategy"

    def reset(self, state: GameState, rng: random.Random) -> None:
        pass

    def choose(self, state: GameState) -> int:
        raise NotImplementedError

    def observe(self, state: GameState, move: int, fired: Sequence[int]) -> None:
        pass


class _HeapExtremeStrategy(Strategy):
    """Shared machinery: pick the dirty vertex extremising the brush count.

    Keeps a lazy heap of (key, vertex) entries; stale entries (vertex now
    clean, or amount changed since push) are dropped at pop time.  Ties on
    the amount always resolve to the lowest vertex id.
    """

    #: +1 picks the fewest-brushes vertex, -1 the most-brushes vertex.
    sign = 1

    def __init__(self) -> None:
        self._heap: list[tuple[int, int]] = []

    def reset(self, state: GameState, rng: random.Random) -> None:
        amount = state.brush.amount
        self._heap = [
            (self.sign * amount[v], v) for v in state.graph.vertices() if state.brush.is_dirty(v)
        ]
        heapq.heapify(self._heap)

    def choose(self, state: GameState) -> int:
        brush = state.brush
        heap = self._heap
        while heap:
            key, v = heap[0]
            if not brush.clean[v] and key == self.sign * brush.amount[v]:
                return v
            heapq.heappop(heap)
        raise IllegalMoveError("no legal moves: the game is over")

    def observe(self, state: GameState, move: int, fired: Sequence[int]) -> None:
        brush = state.brush
        heap = self._heap
        sign = self.sign
        if not brush.clean[move]:
            heapq.heappush(heap, (sign * brush.amount[move], move))
        adjacency = state.graph.adjacency
        for u in fired:
            for w in adjacency[u]:
                if not brush.clean[w]:
                    heapq.heappush(heap, (sign * brush.amount[w], w))


class GreedyMost(_HeapExtremeStrategy):
    """Top up the dirty vertex holding the most brushes (ties: lowest id).

    On complete graphs this keeps feeding one vertex until it fires; on
    other graphs it is a heuristic, not an optimal strategy.
    """

    name = "greedy"
    sign = -1


class BalancedFewest(_HeapExtremeStrategy):
    """Place on the dirty vertex holding the fewest brushes (ties: lowest id)."""

    name = "balanced"
    sign = 1


class LowestId(Strategy):
    """Always play the lowest-id dirty vertex (useful as a dumb baseline)."""

    name = "lowest"

    def choose(self, state: GameState) -> int:
        for v in state.graph.vertices():
            if state.brush.is_dirty(v):
                return v
        raise IllegalMoveError("no legal moves: the game is over")


class RandomPlacement(Strategy):
    """Play a uniformly random dirty vertex from the match RNG."""

    name = "random"

    def __init__(self) -> None:
        self._rng: random.Random | None = None

    def reset(self, state: GameState, rng: random.Random) -> None:
        self._rng = rng

    def choose(self, state: GameState) -> int:
        if self._rng is None:
            raise InternalInvariantError("random strategy used before reset")
        dirty = state.brush.dirty_vertices()
        if not dirty:
            raise IllegalMoveError("no legal moves: the game is over")
        return self._rng.choice(dirty)


_STRATEGIES = {
    cls.name: cls for cls in (GreedyMost, BalancedFewest, LowestId, RandomPlacement)
}


def make_strategy(spec) -> Strategy:
    """Accept a Strategy instance or one of the registered names."""
    if isinstance(spec, Strategy):
        return spec
    try:
        return _STRATEGIES[spec]()
    except KeyError:
        known = ", ".join(sorted(_STRATEGIES))
        raise ValueError(f"unknown strategy {spec!r}; known: {known}")


def strategy_names() -> list[str]:
    return sorted(_STRATEGIES)


@dataclass(frozen=True)
class MatchResult:
    length: int
    transcript: tuple[tuple[Player, int], ...]
    final_clean: frozenset[int]


def run_match(
    graph: Graph,
    init=None,
    strat_min=GreedyMost,
    strat_max=BalancedFewest,
    first: Player = Player.MIN,
    seed: int = 0,
) -> MatchResult:
    """Play one full game and return its length and transcript.

    Strategies may be names, classes or instances; each match gets fresh
    instances reset with a Random seeded from `seed`, so a repeated call
    with the same arguments reproduces the transcript exactly.
    """
    s_min = make_strategy(strat_min() if isinstance(strat_min, type) else strat_min)
    s_max = make_strategy(strat_max() if isinstance(strat_max, type) else strat_max)
    state = new_game(graph, init, first)
    rng = random.Random(seed)
    s_min.reset(state, rng)
    s_max.reset(state, rng)
    while not state.over():
        strat = s_min if state.mover is Player.MIN else s_max
        v = strat.choose(state)
        play(state, v)
        s_min.observe(state, v, state.last_fired)
        s_max.observe(state, v, state.last_fired)
    return MatchResult(
        length=state.turns_elapsed,
        transcript=tuple(state.transcript),
        final_clean=state.brush.clean_set(),
    )
