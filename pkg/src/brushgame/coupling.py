"""Coupled play of the ordinary and fractional games on one graph.

Player A imagines an ordinary game alongside the real fractional game and
uses it to steer the fractional play; an Oracle occasionally adds free
brushes to keep the clean sets of the two games synchronised.  Per
fractional round i the schedule plays ceil(i/p) - ceil((i-1)/p) ordinary
rounds, so p rounds of ordinary play track each fractional round on
average.  B always moves first in the fractional game.

A's prescribed moves: in the ordinary game the imagined B plays a dirty
vertex minimising B's discrepancy d_B(v) = p*x_B(v) - y_B(v) (x counts
ordinary placements, y fractional ones) and A responds with its ordinary
strategy; in the fractional game A plays a dirty vertex maximising its own
discrepancy d_A(v).  Keeping the discrepancies small is exactly the
greedy defence of the chip-stacking game, which is what bounds the
Oracle's total interference.

Discrepancies are held as integers scaled by the denominator of p (exact
arithmetic with the common denominator factored out); Fractions appear
only in the report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cleaning import BrushState
from .errors import InternalInvariantError
from .fractional import FractionalState, as_share
from .game import Player
from .graph import Graph


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _pick_extreme(amount, clean, vertices, most: bool) -> int:
    best = None
    best_amount = None
    for v in vertices:
        if clean[v]:
            continue
        a = amount[v]
        if best is None or (a > best_amount if most else a < best_amount):
            best, best_amount = v, a
    if best is None:
        raise InternalInvariantError("no dirty vertex to play")
    return best


@dataclass(frozen=True)
class OracleEvent:
    """One forced cleaning: which game, where, how many brushes it took,
    and the discrepancies at that moment (for checking the claimed caps)."""

    side: str  # "ordinary" or "fractional"
    vertex: int
    deficit: Fraction
    d_a: Fraction
    d_b: Fraction


@dataclass(frozen=True)
class CouplingReport:
    p: Fraction
    a_is: Player
    ell_o: int
    ell_f: int
    m_o: int
    m_f: Fraction
    max_d_a: Fraction
    min_d_b: Fraction
    rounds: int
    oracle_events: tuple[OracleEvent, ...]


def couple(
    graph: Graph,
    p,
    a_is: Player = Player.MIN,
    a_ordinary_strategy: str | None = None,
    b_strategy: str | None = None,
    seed: int = 0,
) -> CouplingReport:
    """Run the coupled games to completion and report the bookkeeping.

    `a_ordinary_strategy` names A's ordinary-game response ("greedy" or
    "balanced"; default matches A's role), and `b_strategy` names B's
    fractional strategy likewise.  Oracle brushes are reported separately
    (m_o, m_f) and never counted in the lengths ell_o, ell_f.  The run is
    deterministic; seed is accepted for interface symmetry.
    """
    del seed  # strategies here are deterministic
    share = as_share(p)
    num, den = share.numerator, share.denominator
    n = graph.vertex_count
    vertices = range(n)
    if a_ordinary_strategy is None:
        a_ordinary_strategy = "greedy" if a_is is Player.MIN else "balanced"
    if b_strategy is None:
        b_strategy = "balanced" if a_is is Player.MIN else "greedy"
    if a_ordinary_strategy not in ("greedy", "balanced"):
        raise ValueError(f"unknown ordinary strategy {a_ordinary_strategy!r}")
    if b_strategy not in ("greedy", "balanced"):
        raise ValueError(f"unknown fractional strategy {b_strategy!r}")
    a_most = a_ordinary_strategy == "greedy"
    b_most = b_strategy == "greedy"

    ordinary = BrushState(graph)
    ordinary._stabilize()
    fractional = FractionalState(graph, share)
    fractional._stabilize()

    # d_A(v) = p*x_A(v) - y_A(v) and d_B likewise, scaled by den.
    da = [0] * n
    db = [0] * n
    placements = [0, 0, 0, 0]  # x_a, y_a, x_b, y_b totals

    ell_o = 0
    ell_f = 0
    m_o = 0
    m_f = Fraction(0)
    max_da = 0
    min_db = 0
    events: list[OracleEvent] = []

    def oracle_sync() -> None:
        nonlocal m_o, m_f
        while True:
            v = next(
                (u for u in vertices if fractional.clean[u] and not ordinary.clean[u]),
                None,
            )
            if v is not None:
                deficit = ordinary.dirty_degree[v] - ordinary.amount[v]
                if deficit < 1:
                    raise InternalInvariantError("stable dirty vertex with no deficit")
                events.append(
                    OracleEvent(
                        "ordinary", v, Fraction(deficit), Fraction(da[v], den), Fraction(db[v], den)
                    )
                )
                ordinary.amount[v] += deficit
                m_o += deficit
                ordinary._stabilize()
                continue
            v = next(
                (u for u in vertices if ordinary.clean[u] and not fractional.clean[u]),
                None,
            )
            if v is not None:
                deficit = share * fractional.dirty_degree[v] - fractional.amount[v]
                if deficit <= 0:
                    raise InternalInvariantError("stable dirty vertex with no deficit")
                events.append(
                    OracleEvent(
                        "fractional", v, deficit, Fraction(da[v], den), Fraction(db[v], den)
                    )
                )
                fractional.amount[v] += deficit
                m_f += deficit
                fractional._stabilize()
                continue
            return

    def check_ledger() -> None:
        x_a, y_a, x_b, y_b = placements
        if sum(da) != num * x_a - den * y_a:
            raise InternalInvariantError("A's discrepancy ledger drifted")
        if sum(db) != num * x_b - den * y_b:
            raise InternalInvariantError("B's discrepancy ledger drifted")

    rounds = 0
    cap = 4 * graph.edge_count + 4 * n + 16
    while not (ordinary.all_clean() and fractional.all_clean()):
        rounds += 1
        if rounds > cap:
            raise InternalInvariantError("coupling ran past its round cap")
        if not fractional.all_clean():
            v = _pick_extreme(fractional.amount, fractional.clean, vertices, b_most)
            db[v] -= den
            placements[3] += 1
            fractional.amount[v] += 1
            fractional._stabilize()
            ell_f += 1
        # Round i of the fractional game triggers ceil(i/p) - ceil((i-1)/p)
        # ordinary rounds; i/p = i*den/num.
        ordinary_rounds = _ceil_div(rounds * den, num) - _ceil_div((rounds - 1) * den, num)
        for _ in range(ordinary_rounds):
            if ordinary.all_clean():
                break
            # Imagined B: dirty vertex minimising d_B, ties to lowest id.
            v = min(
                (u for u in vertices if not ordinary.clean[u]),
                key=lambda u: (db[u], u),
            )
            db[v] += num
            placements[2] += 1
            ordinary.amount[v] += 1
            ordinary._stabilize()
            ell_o += 1
            if ordinary.all_clean():
                break
            w = _pick_extreme(ordinary.amount, ordinary.clean, vertices, a_most)
            da[w] += num
            placements[0] += 1
            ordinary.amount[w] += 1
            ordinary._stabilize()
            ell_o += 1
        if not fractional.all_clean():
            # A: dirty vertex maximising d_A, ties to lowest id.
            v = max(
                (u for u in vertices if not fractional.clean[u]),
                key=lambda u: (da[u], -u),
            )
            da[v] -= den
            placements[1] += 1
            fractional.amount[v] += 1
            fractional._stabilize()
            ell_f += 1
        oracle_sync()
        hi = max(da)
        if hi > max_da:
            max_da = hi
        lo = min(db)
        if lo < min_db:
            min_db = lo
        check_ledger()
    return CouplingReport(
        p=share,
        a_is=a_is,
        ell_o=ell_o,
        ell_f=ell_f,
        m_o=m_o,
        m_f=m_f,
        max_d_a=Fraction(max_da, den),
        min_d_b=Fraction(min_db, den),
        rounds=rounds,
        oracle_events=tuple(events),
    )
