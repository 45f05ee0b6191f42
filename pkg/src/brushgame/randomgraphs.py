"""Random-graph experiments: G(n,p) sampling, heuristic play, and the
complete-graph mimic coupling.

The guiding comparison is between the game on a dense random graph and
the fractional game on K_n with share p: Min plays the fractional K_n
game in her imagination and mirrors the moves into the real game.  When
the imagination runs ahead (a vertex fires there but not for real) the
real game "pauses" while Min tops that vertex up; when the real game runs
ahead, an Oracle cleans the vertex in the imagination for free.  The
total pause time is controlled by the discrepancy functional D_pi below,
which is what the per-run tests check.
"""

from __future__ import annotations

import heapq
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .cleaning import BrushState
from .errors import InternalInvariantError
from .fractional import as_share
from .game import BalancedFewest, GreedyMost, Player, run_match
from .graph import Graph, graph_from_edges
from .seeds import derive
from .triangle import kn_game_length

RATIONAL_DENOMINATOR_CAP = 10**6


def rationalize(p) -> Fraction:
    """The exact rational used for a possibly-real share p: the closest
    fraction with denominator at most 10**6 (recorded in reports)."""
    if isinstance(p, float):
        return Fraction(p).limit_denominator(RATIONAL_DENOMINATOR_CAP)
    return Fraction(p)


@dataclass(frozen=True)
class GnpSample:
    n: int
    p: float
    seed: int
    graph: Graph


def gnp(n: int, p: float, seed: int) -> GnpSample:
    """Erdos-Renyi G(n, p), deterministic from the seed.

    One PRNG stream drives the pair coin flips in row-major order
    (0,1), (0,2), ..., so a sample is bit-reproducible from (n, p, seed).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    graph = graph_from_edges(n, edges, name=f"G({n},{p})#{seed}")
    return GnpSample(n=n, p=p, seed=seed, graph=graph)


def heuristic_length(graph: Graph, seed: int = 0) -> int:
    """Game length under greedy Min vs balanced Max, Min first.

    A direct empirical estimator of the game length; on complete graphs it
    agrees exactly with the sorted-column model."""
    return run_match(graph, None, GreedyMost, BalancedFewest, Player.MIN, seed).length


def discrepancy_D(graph: Graph, order: Sequence[int], p) -> Fraction:
    """The discrepancy functional of a cleaning order pi = (v_1, ..., v_n):

        2 * sum_i max((i-1)p - backdeg_i, 0)
          + sum_i max(deg(v_i) - (n-1)p, 0)

    where backdeg_i counts neighbours of v_i among v_1..v_{i-1}.  Exact
    rational arithmetic throughout.
    """
    n = graph.vertex_count
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the vertices")
    share = rationalize(p)
    if not 0 <= share <= 1:
        raise ValueError("p must lie in [0, 1]")
    position = {v: i for i, v in enumerate(order)}
    first = Fraction(0)
    second = Fraction(0)
    for i, v in enumerate(order):  # i is 0-based; (i-1)p below uses 1-based i
        backdeg = sum(1 for u in graph.adjacency[v] if position[u] < i)
        gap = share * i - backdeg
        if gap > 0:
            first += gap
        excess = graph.degree(v) - share * (n - 1)
        if excess > 0:
            second += excess
    return 2 * first + second


class _ImaginaryKn:
    """The fractional game on K_n in sorted-free per-vertex form.

    With f vertices fired, every dirty vertex has received f*p, so the
    state is the per-vertex placed amount plus the global count f.  All
    quantities are scaled by the denominator of p to stay in integers.
    A vertex fires once  placed_units >= num * (n - 1 - 2f).
    """

    __slots__ = ("n", "num", "den", "placed", "clean", "fired_count", "heap", "oracle_units")

    def __init__(self, n: int, share: Fraction):
        self.n = n
        self.num = share.numerator
        self.den = share.denominator
        self.placed = [0] * n
        self.clean = [False] * n
        self.fired_count = 0
        self.heap = [(0, v) for v in range(n)]  # (-placed_units, v), lazy
        self.oracle_units = 0

    def all_clean(self) -> bool:
        return self.fired_count == self.n

    def place_unit(self, v: int) -> None:
        if self.clean[v]:
            raise InternalInvariantError(f"imaginary placement on clean vertex {v}")
        self.placed[v] += self.den
        heapq.heappush(self.heap, (-self.placed[v], v))

    def _top(self) -> int | None:
        heap = self.heap
        while heap:
            neg, v = heap[0]
            if not self.clean[v] and -neg == self.placed[v]:
                return v
            heapq.heappop(heap)
        return None

    def greedy_pick(self) -> int:
        v = self._top()
        if v is None:
            raise InternalInvariantError("imaginary game is already over")
        return v

    def _threshold_units(self) -> int:
        return self.num * (self.n - 1 - 2 * self.fired_count)

    def stabilize(self) -> list[int]:
        """Fire while the best-supplied dirty vertex meets the threshold
        (the threshold is common to all dirty vertices, so checking the
        top suffices)."""
        fired = []
        while self.fired_count < self.n:
            v = self._top()
            if v is None or self.placed[v] < self._threshold_units():
                break
            self.clean[v] = True
            self.fired_count += 1
            fired.append(v)
        return fired

    def force_clean(self, v: int) -> list[int]:
        """Oracle: top v up to its firing threshold and fire it."""
        if self.clean[v]:
            return []
        deficit = self._threshold_units() - self.placed[v]
        if deficit > 0:
            self.placed[v] += deficit
            self.oracle_units += deficit
        self.clean[v] = True
        self.fired_count += 1
        return [v] + self.stabilize()


class _BalancedPicker:
    """Lazy-heap argmin of (amount, id) over the dirty vertices."""

    __slots__ = ("state", "heap")

    def __init__(self, state: BrushState):
        self.state = state
        self.heap = [
            (state.amount[v], v)
            for v in state.graph.vertices()
            if not state.clean[v]
        ]
        heapq.heapify(self.heap)

    def pick(self) -> int:
        state = self.state
        heap = self.heap
        while heap:
            a, v = heap[0]
            if not state.clean[v] and a == state.amount[v]:
                return v
            heapq.heappop(heap)
        raise InternalInvariantError("no dirty vertex to play")

    def touch(self, move: int, fired: Sequence[int]) -> None:
        state = self.state
        if not state.clean[move]:
            heapq.heappush(self.heap, (state.amount[move], move))
        for u in fired:
            for w in state.graph.adjacency[u]:
                if not state.clean[w]:
                    heapq.heappush(self.heap, (state.amount[w], w))


@dataclass(frozen=True)
class MimicReport:
    length: int
    pauses: int  # pause rounds (one Min top-up each)
    pause_turns: int  # total turns spent inside pauses, both players
    order: tuple[int, ...]  # realized cleaning sequence of the real game
    p: Fraction
    imaginary_oracle: Fraction


def couple_kn_mimic(graph: Graph, p, seed: int = 0) -> MimicReport:
    """Play the real game with Min mimicking fractional K_n play.

    Min picks the greedy move of the imaginary fractional K_n game and
    mirrors it into the real game; Max plays the balanced heuristic in the
    real game and his moves are mirrored into the imagination.  Pauses and
    Oracle cleanings keep the clean sets synchronised as described above.
    Returns the real game length (pauses included) and pause statistics.
    """
    del seed  # play is deterministic; accepted for interface symmetry
    share = rationalize(p)
    if not 0 < share <= 1:
        raise ValueError("the mimic coupling needs p in (0, 1]")
    n = graph.vertex_count
    real = BrushState(graph)
    real_order: list[int] = []
    awaiting: list[int] = []  # fired for real, imagination not yet told
    pending: list[int] = []  # fired in imagination, real game behind
    imag = _ImaginaryKn(n, share)
    picker = _BalancedPicker(real)

    setup_fired = real._stabilize()
    real_order.extend(setup_fired)
    awaiting.extend(setup_fired)

    turns = 0
    pauses = 0
    pause_turns = 0
    cap = 2 * graph.edge_count + 2 * n + 2

    def real_place(v: int) -> None:
        nonlocal turns
        real.amount[v] += 1
        fired = real._stabilize()
        real_order.extend(fired)
        awaiting.extend(fired)
        picker.touch(v, fired)
        turns += 1
        if turns > cap:
            raise InternalInvariantError("mimic play ran past the turn cap")

    def sync() -> None:
        nonlocal pauses, pause_turns
        while awaiting or pending:
            while awaiting:
                v = awaiting.pop(0)
                pending_extra = imag.force_clean(v)
                pending.extend(u for u in pending_extra if u != v)
            if not pending:
                break
            v = pending.pop(0)
            if real.clean[v]:
                continue
            while not real.clean[v]:
                real_place(v)
                pauses += 1
                pause_turns += 1
                if real.all_clean():
                    break
                w = picker.pick()
                real_place(w)
                pause_turns += 1

    sync()
    while not real.all_clean():
        u = imag.greedy_pick()
        imag.place_unit(u)
        pending.extend(imag.stabilize())
        real_place(u)
        sync()
        if real.all_clean():
            break
        w = picker.pick()
        real_place(w)
        if not imag.clean[w]:
            imag.place_unit(w)
            pending.extend(imag.stabilize())
        sync()
    return MimicReport(
        length=turns,
        pauses=pauses,
        pause_turns=pause_turns,
        order=tuple(real_order),
        p=share,
        imaginary_oracle=Fraction(imag.oracle_units, share.denominator),
    )


@dataclass(frozen=True)
class ExperimentRecord:
    n: int
    p: float
    trial: int
    seed: int
    mode: str  # "heuristic" or "couple"
    length: int
    reference: float  # p * n^2 / e
    ratio: float | None
    pauses: int | None
    wall_time: float

    def to_dict(self) -> dict:
        return {
            "kind": "record",
            "n": self.n,
            "p": self.p,
            "trial": self.trial,
            "seed": self.seed,
            "mode": self.mode,
            "length": self.length,
            "reference": self.reference,
            "ratio": self.ratio,
            "pauses": self.pauses,
            "wall_time": self.wall_time,
        }


def experiment(
    n: int,
    p: float,
    trials: int,
    seed: int,
    modes: Sequence[str] = ("heuristic", "couple"),
    sink: Callable[[ExperimentRecord], None] | None = None,
) -> list[ExperimentRecord]:
    """Run seeded trials of the chosen modes on fresh G(n,p) samples.

    Per-trial seeds are derived from the root seed, so repeating the call
    reproduces every record except its wall time.  `sink` (if given) sees
    each record as soon as it is complete.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    for mode in modes:
        if mode not in ("heuristic", "couple"):
            raise ValueError(f"unknown mode {mode!r}")
    reference = p * n * n / math.e
    records = []
    for trial in range(trials):
        sample = gnp(n, p, derive(seed, "gnp", trial))
        for mode in modes:
            start = time.perf_counter()
            pauses = None
            if mode == "heuristic":
                length = heuristic_length(sample.graph, derive(seed, "match", trial))
            else:
                report = couple_kn_mimic(sample.graph, p, derive(seed, "mimic", trial))
                length = report.length
                pauses = report.pauses
            elapsed = time.perf_counter() - start
            record = ExperimentRecord(
                n=n,
                p=p,
                trial=trial,
                seed=sample.seed,
                mode=mode,
                length=length,
                reference=reference,
                ratio=(length / reference) if reference > 0 else None,
                pauses=pauses,
                wall_time=elapsed,
            )
            records.append(record)
            if sink is not None:
                sink(record)
    return records
