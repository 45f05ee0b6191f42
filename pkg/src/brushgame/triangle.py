"""The sorted-column game board abstraction for complete graphs.

The board has `width` columns and a critical triangle of `height`; column
i (1-indexed) fires once it holds at least max(height - 2i + 2, 0)
brushes and all lesser-indexed columns have fired.  Placements must keep
the column counts nonincreasing.  The board with width n and height n-1
is the brushing game on K_n after sorting vertices by brushes placed, so
the canonical greedy-vs-balanced play of this board gives the K_n game
length exactly; the package cross-checks that against the full engine.

The game may open with `opening_turns` consecutive Max placements; after
the opening, alternation starts with Min by default (a flag flips it).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field

from .errors import IllegalMoveError, InternalInvariantError
from .game import Player


def threshold(i: int, h: int) -> int:
    """Firing requirement of column i (1-indexed) under triangle height h."""
    if i < 1:
        raise ValueError("columns are numbered from 1")
    return max(h - 2 * i + 2, 0)


def count_in_brushes(n: int) -> int:
    """Total brushes the critical triangle of K_n absorbs before the game ends:
    sum over i <= n//2 of (n - 2i + 1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return sum(n - 2 * i + 1 for i in range(1, n // 2 + 1))


@dataclass
class TriangleState:
    """Board position: per-column brush counts plus the fired prefix.

    Counts are nonincreasing across all columns, fired columns form a
    prefix, and the first unfired column is always strictly below its
    firing requirement (later unfired columns may meet theirs while they
    wait for predecessors).
    """

    width: int
    height: int
    opening_turns: int = 0
    counts: list[int] = field(default_factory=list)
    fired: int = 0
    total_turns: int = 0

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("width must be at least 1")
        if self.height < 0 or self.opening_turns < 0:
            raise ValueError("height and opening turns must be nonnegative")
        if not self.counts:
            self.counts = [0] * self.width
        if len(self.counts) != self.width:
            raise ValueError("counts must have one entry per column")
        self._cascade()

    def over(self) -> bool:
        return self.fired == self.width

    def check_invariants(self) -> None:
        c = self.counts
        for j in range(1, self.width):
            if c[j] > c[j - 1]:
                raise InternalInvariantError("column counts are not sorted")
        if not self.over() and c[self.fired] >= threshold(self.fired + 1, self.height):
            raise InternalInvariantError("first unfired column should have fired")

    def legal_columns(self) -> list[int]:
        """1-indexed columns a brush may go to without breaking sortedness."""
        if self.over():
            return []
        cols = []
        for j in range(self.fired, self.width):
            if j == self.fired or self.counts[j] + 1 <= self.counts[j - 1]:
                if self.counts[j] == self.counts[j - 1] and j > self.fired:
                    continue
                cols.append(j + 1)
        return cols

    def place(self, column: int) -> list[int]:
        """Add one brush to a column (1-indexed); returns columns fired."""
        if self.over():
            raise IllegalMoveError("the board is finished")
        j = column - 1
        if not self.fired <= j < self.width:
            raise IllegalMoveError(f"column {column} is fired or out of range")
        if j > self.fired and self.counts[j] + 1 > self.counts[j - 1]:
            raise IllegalMoveError(
                f"placing on column {column} would break the sorted invariant"
            )
        self.counts[j] += 1
        self.total_turns += 1
        return self._cascade()

    def _cascade(self) -> list[int]:
        fired = []
        while self.fired < self.width and self.counts[self.fired] >= max(
            self.height - 2 * self.fired, 0
        ):
            self.fired += 1
            fired.append(self.fired)
        return fired


def greedy_move(state: TriangleState) -> int:
    """Min's column: the first unfired one (it holds the most brushes)."""
    if state.over():
        raise IllegalMoveError("the board is finished")
    return state.fired + 1


def balanced_move(state: TriangleState) -> int:
    """Max's column: the lowest-indexed one holding the minimum count.

    This is the unique minimum-count choice that keeps the representation
    sorted without re-indexing columns.
    """
    if state.over():
        raise IllegalMoveError("the board is finished")
    counts = state.counts
    vmin = counts[-1]
    # counts is nonincreasing, so the columns at vmin form a suffix.
    j = bisect_left(counts, -vmin, state.fired, state.width, key=lambda c: -c)
    return j + 1


def simulate_triangle(
    w: int,
    h: int,
    t: int,
    min_move=greedy_move,
    max_move=balanced_move,
    min_first_after_opening: bool = True,
) -> int:
    """Play the board game to completion and return the number of placements.

    Max makes the `t` opening placements; afterwards players alternate,
    Min first unless the flag is cleared.  The count includes the opening.
    """
    state = TriangleState(width=w, height=h, opening_turns=t)
    for _ in range(t):
        if state.over():
            return state.total_turns
        state.place(max_move(state))
    if state.over():
        return state.total_turns
    movers = (min_move, max_move) if min_first_after_opening else (max_move, min_move)
    i = 0
    while not state.over():
        state.place(movers[i % 2](state))
        i += 1
    return state.total_turns


def _greedy_balanced_length(w: int, h: int) -> int:
    """Length of the board game under greedy Min vs balanced Max, no opening.

    Equivalent to simulate_triangle(w, h, 0) but runs in time roughly
    linear in the number of firings by batching each pumping phase.  The
    board is kept as maximal equal-count runs, listed bottom (minimum
    count, rightmost columns) to top (the first unfired column).
    """
    # runs[i] = [count, start]; runs[i] covers start .. runs[i-1].start - 1
    # (the bottom run i=0 extends to the last column).
    runs: list[list[int]] = [[0, 0]]
    k = 0  # fired prefix
    turns = 0

    def fire_cascade() -> None:
        nonlocal k
        while runs and runs[-1][0] >= h - 2 * k:
            top = runs[-1]
            next_start = runs[-2][1] if len(runs) > 1 else w
            if next_start == k + 1:
                runs.pop()
            else:
                top[1] = k + 1
            k += 1

    fire_cascade()
    min_next = True
    while runs:
        tau = h - 2 * k
        if w - k == 1:
            # Only one dirty column: both players are forced to pump it.
            turns += tau - runs[-1][0]
            runs.pop()
            k += 1
            continue
        if not min_next and len(runs) == 1:
            # All columns tied: Max's minimum choice is the first column.
            v, start = runs[0]
            runs[0][1] = k + 1
            runs.append([v + 1, k])
            turns += 1
            fire_cascade()
            min_next = True
            continue
        # From here Max never touches the first unfired column this phase:
        # his fill level stays strictly below the pumped column's count.
        top = runs[-1]
        c = top[0]
        d = tau - c  # placements Min still owes the first unfired column
        m = d - 1 if min_next else d  # Max placements inside the phase
        turns += 2 * d - 1 if min_next else 2 * d
        next_start = runs[-2][1] if len(runs) > 1 else w
        if next_start > k + 1:
            top[1] = k + 1
            runs.append([tau, k])
        else:
            top[0] = tau
        # Bulk-apply Max's fill to everything below the top element.
        while m > 0:
            bottom = runs[0]
            j = bottom[1]
            v = bottom[0]
            width = w - j
            above = runs[1]
            if above is runs[-1] and above[0] == v + 1:
                raise InternalInvariantError("balanced fill reached the pumped column")
            take = m if m < width else width
            if above[0] == v + 1:
                bottom[1] = j + take
                if bottom[1] == w:
                    runs.pop(0)
            elif take == width:
                bottom[0] = v + 1
            else:
                bottom[1] = j + take
                runs.insert(1, [v + 1, j])
            m -= take
        fire_cascade()
        min_next = False
    return turns


def kn_game_length(n: int) -> int:
    """Exact length of the brushing game on K_n under greedy Min vs
    balanced Max (the board game of width n and height n-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return 0
    return _greedy_balanced_length(n, n - 1)


def kn_full_cross_check(n: int) -> int:
    """Play the same matchup with the full graph engine on K_n and insist
    that the two models agree; returns the common length."""
    from .families import complete
    from .game import run_match

    result = run_match(complete(n), init=None, first=Player.MIN)
    expected = kn_game_length(n)
    if result.length != expected:
        raise InternalInvariantError(
            f"K_{n}: board model says {expected} turns, full engine says {result.length}"
        )
    return result.length
