"""The k-chip-stacking game: adversary adds, greedy defender removes.

Each round the adversary distributes k chips over n piles however it
likes; the defender then removes up to k chips from one pile.  The greedy
defender (always strip the largest pile, ties to the lowest index) keeps
every pile within 2k * ceil(log_{4/3}(n) + 1) chips forever.  The paper's
claim quantifies over all adversaries, which is not testable, so a small
hostile menu of named adversaries stands in for "all" here.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass


def _ceil_log43_plus1(n: int) -> int:
    """Smallest integer m with m >= log_{4/3}(n) + 1, computed exactly.

    m - 1 >= log_{4/3}(n)  iff  4^(m-1) >= n * 3^(m-1); integer arithmetic
    avoids float edge cases at powers of 4/3.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    m = 1
    pow4, pow3 = 1, 1
    while pow4 < n * pow3:
        m += 1
        pow4 *= 4
        pow3 *= 3
    return m


def chip_bound(k: int, n: int) -> int:
    """The greedy defender's guarantee: 2k * ceil(log_{4/3}(n) + 1)."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    return 2 * k * _ceil_log43_plus1(n)


ADVERSARIES = ("stack-one", "spread", "target-second-largest", "random")


@dataclass(frozen=True)
class ChipsResult:
    history_max: int
    final_piles: tuple[int, ...]
    rounds: int


class _ChipGame:
    """Piles plus a lazy max-heap so the defender's argmax is O(log n)."""

    __slots__ = ("k", "piles", "heap", "history_max")

    def __init__(self, k: int, n: int):
        self.k = k
        self.piles = [0] * n
        self.heap: list[tuple[int, int]] = [(0, i) for i in range(n)]
        self.history_max = 0

    def add(self, pile: int, chips: int) -> None:
        size = self.piles[pile] + chips
        self.piles[pile] = size
        if size > self.history_max:
            self.history_max = size
        heapq.heappush(self.heap, (-size, pile))

    def _pop_current_max(self) -> int:
        while True:
            neg, i = self.heap[0]
            if -neg == self.piles[i]:
                heapq.heappop(self.heap)
                return i
            heapq.heappop(self.heap)

    def largest(self) -> int:
        i = self._pop_current_max()
        heapq.heappush(self.heap, (-self.piles[i], i))
        return i

    def two_largest(self) -> tuple[int, int]:
        a = self._pop_current_max()
        b = a
        if len(self.piles) > 1:
            b = self._pop_current_max()
        heapq.heappush(self.heap, (-self.piles[a], a))
        if b != a:
            heapq.heappush(self.heap, (-self.piles[b], b))
        return a, b

    def defend(self) -> None:
        i = self.largest()
        removed = min(self.k, self.piles[i])
        if removed:
            self.piles[i] -= removed
            heapq.heappush(self.heap, (-self.piles[i], i))


def chips_play(
    k: int, n: int, adversary: str, rounds: int, seed: int = 0
) -> ChipsResult:
    """Play `rounds` rounds against a named adversary; greedy defence.

    Returns the largest pile size ever attained.  Deterministic given the
    seed (only the "random" adversary consumes it).
    """
    if adversary not in ADVERSARIES:
        raise ValueError(f"unknown adversary {adversary!r}; known: {', '.join(ADVERSARIES)}")
    if k < 1 or n < 1 or rounds < 0:
        raise ValueError("need k >= 1, n >= 1, rounds >= 0")
    game = _ChipGame(k, n)
    rng = random.Random(seed)
    spread_at = 0
    for _ in range(rounds):
        if adversary == "stack-one":
            game.add(0, k)
        elif adversary == "spread":
            for _ in range(k):
                game.add(spread_at, 1)
                spread_at = (spread_at + 1) % n
        elif adversary == "target-second-largest":
            _, second = game.two_largest()
            game.add(second, k)
        else:  # random
            for _ in range(k):
                game.add(rng.randrange(n), 1)
        game.defend()
    return ChipsResult(
        history_max=game.history_max,
        final_piles=tuple(game.piles),
        rounds=rounds,
    )
