"""The acceptance suite: every headline fact the package must reproduce.

Each criterion is a function returning (ok, detail); the runner wraps it
with timing and enforces the per-criterion wall-clock budget as part of
the pass/fail verdict.  Everything is seeded, so reruns are deterministic.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .brushnumber import brush_number
from .chips import ADVERSARIES, chip_bound, chips_play
from .cleaning import BrushState
from .coupling import couple
from .errors import BudgetExceededError
from .families import bouquet, comb_union_seeded, complete, cycle, path, star, subdivided_sunlet
from .fractional import FractionalState
from .fractional import simulate_fractional_kn
from .game import Player
from .graph import Graph, graph_from_edges, is_connected
from .ode import ode_constants, ode_f, ode_fprime
from .randomgraphs import couple_kn_mimic, discrepancy_D, gnp, heuristic_length
from .seeds import derive
from .solver import SYMMETRY_AUTO, SYMMETRY_SORTED, Solver
from .triangle import kn_full_cross_check, kn_game_length

ROOT_SEED = 0x5EEDB205


def random_connected_graph(rng: random.Random, max_n: int, min_n: int = 3) -> Graph:
    """A uniform-ish random connected graph on min_n..max_n vertices
    (edge density drawn from [0.3, 0.9], resampled until connected)."""
    while True:
        n = rng.randint(min_n, max_n)
        p = rng.uniform(0.3, 0.9)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = graph_from_edges(n, edges)
        if is_connected(g):
            return g


def random_config(rng: random.Random, g: Graph, high: int = 2) -> dict[int, int]:
    return {v: rng.randint(0, high) for v in g.vertices() if rng.random() < 0.5}


@dataclass(frozen=True)
class CriterionResult:
    cid: int
    name: str
    passed: bool
    detail: str
    elapsed: float
    budget: float | None

    @property
    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} criterion {self.cid:2d} [{self.elapsed:7.1f}s] {self.name}: {self.detail}"


def _solve_pair(g: Graph, init=None, symmetry: str = SYMMETRY_AUTO) -> tuple[int, int]:
    """(Min-start value, Max-start value) sharing one memo table."""
    solver = Solver(g, symmetry=symmetry)
    a = solver.solve(init, Player.MIN)
    b = solver.solve(init, Player.MAX)
    assert a.value is not None and b.value is not None
    return a.value, b.value


# -- criteria ----------------------------------------------------------------


def criterion_1_exact_small_values() -> tuple[bool, str]:
    """Known exact game values on paths, cycles and stars."""
    failures = []
    val_min, val_max = _solve_pair(path(3))
    if (val_min, val_max) != (1, 2):
        failures.append(f"P_3 gave ({val_min}, {val_max}), want (1, 2)")
    for n in (3, 4, 5, 6):
        val_min, val_max = _solve_pair(cycle(n))
        if (val_min, val_max) != (3, 2):
            failures.append(f"C_{n} gave ({val_min}, {val_max}), want (3, 2)")
    for k in (1, 2, 3):
        val_min, val_max = _solve_pair(star(3 * k - 1))
        if (val_min, val_max) != (2 * k - 1, 2 * k):
            failures.append(
                f"K_1,{3 * k - 1} gave ({val_min}, {val_max}), want ({2 * k - 1}, {2 * k})"
            )
    if failures:
        return False, "; ".join(failures)
    return True, "P_3, C_3..C_6 and K_1,(3k-1) for k<=3 all exact"


def criterion_2_seeded_combs() -> tuple[bool, str]:
    """Seeded comb unions take sum(n_i) - m turns, whoever starts."""
    cases = [(2,), (3,), (2, 2), (2, 3), (3, 3)]
    failures = []
    for sizes in cases:
        inst = comb_union_seeded(sizes)
        want = sum(sizes) - len(sizes)
        got = _solve_pair(inst.graph, inst.init)
        if got != (want, want):
            failures.append(f"{inst.label} gave {got}, want ({want}, {want})")
    if failures:
        return False, "; ".join(failures)
    return True, f"{len(cases)} seeded unions all take sum(n_i) - m turns either way"


def criterion_3_bounds_sweep() -> tuple[bool, str]:
    """On random connected graphs: |min-start - max-start| <= 1 and both
    game values sit in [b, 2b] as required, with b the brush number."""
    rng = random.Random(derive(ROOT_SEED, "criterion3"))
    checked = 0
    for _ in range(200):
        g = random_connected_graph(rng, max_n=7)
        b = brush_number(g)
        bg, bg_hat = _solve_pair(g)
        if abs(bg - bg_hat) > 1:
            return False, f"|{bg} - {bg_hat}| > 1 on {g.edges}"
        if not b <= bg <= 2 * b - 1:
            return False, f"b_g={bg} outside [{b}, {2 * b - 1}] on {g.edges}"
        if not b <= bg_hat <= 2 * b:
            return False, f"max-start {bg_hat} outside [{b}, {2 * b}] on {g.edges}"
        checked += 1
    return True, f"{checked} random connected graphs within all bounds"


def criterion_4_config_monotonicity() -> tuple[bool, str]:
    """Adding brushes to the start configuration never lengthens the game,
    and removes at most 2 * (brushes added) turns."""
    rng = random.Random(derive(ROOT_SEED, "criterion4"))
    checked = 0
    for _ in range(100):
        g = random_connected_graph(rng, max_n=6, min_n=2)
        low = random_config(rng, g)
        extra = random_config(rng, g, high=1)
        high = {v: low.get(v, 0) + extra.get(v, 0) for v in g.vertices()}
        slack = 2 * sum(extra.values())
        solver = Solver(g)
        for mover in (Player.MIN, Player.MAX):
            v_high = solver.solve(high, mover).value
            v_low = solver.solve(low, mover).value
            assert v_high is not None and v_low is not None
            if not v_high <= v_low <= v_high + slack:
                return (
                    False,
                    f"{mover}: value {v_low} vs dominated {v_high} (+{slack}) on {g.edges}",
                )
        checked += 1
    return True, f"{checked} dominated-configuration pairs monotone for both movers"


def criterion_5_order_independence() -> tuple[bool, str]:
    """Stabilising under shuffled firing orders always lands in the same
    stable state, for the integer and the rational engines."""
    rng = random.Random(derive(ROOT_SEED, "criterion5"))
    for trial in range(1000):
        n = rng.randint(2, 50)
        sample = gnp(n, rng.uniform(0.05, 0.5), derive(ROOT_SEED, "abelian", trial))
        g = sample.graph
        config = {v: rng.randint(0, 3) for v in g.vertices() if rng.random() < 0.4}
        rational = trial % 2 == 1
        if rational:
            p = Fraction(rng.randint(1, 4), rng.randint(4, 8))
            base = FractionalState(g, min(p, Fraction(1)), config)
        else:
            base = BrushState(g, config)
        reference = None
        for shuffle in range(10):
            state = base.copy()
            if shuffle == 0:
                state._stabilize()
            else:
                prio = list(g.vertices())
                rng.shuffle(prio)
                rank = {v: i for i, v in enumerate(prio)}
                state._stabilize(key=lambda v: rank[v])
            snap = state.snapshot()
            if reference is None:
                reference = snap
            elif snap != reference:
                return False, f"order-dependent outcome on trial {trial} ({n} vertices)"
    return True, "1000 instances x 10 firing orders, identical outcomes (both engines)"


def criterion_6_model_agreement() -> tuple[bool, str]:
    """The sorted-column model matches the exact solver on tiny complete
    graphs and the full engine on all of K_3..K_200."""
    expected = {2: 1, 3: 3, 4: 5}
    for n, want in expected.items():
        got = kn_game_length(n)
        if got != want:
            return False, f"column model says {got} for K_{n}, want {want}"
        solved = Solver(complete(n), symmetry=SYMMETRY_SORTED).solve(None, Player.MIN).value
        if solved != want:
            return False, f"solver says {solved} for K_{n}, want {want}"
    solver5 = Solver(complete(5), symmetry=SYMMETRY_SORTED).solve(None, Player.MIN).value
    model5 = kn_game_length(5)
    if solver5 != model5:
        return False, f"K_5: solver {solver5} vs column model {model5}"
    for n in range(3, 201):
        kn_full_cross_check(n)  # raises on disagreement
    return True, f"solver match for n<=5 (K_5={model5}); full-engine match for n=3..200"


def criterion_7_asymptotic_ratio() -> tuple[bool, str]:
    """The deterministic game length approaches n^2/e."""
    details = []
    for n, tol in ((5000, 0.02), (10000, 0.01)):
        length = kn_game_length(n)
        ratio = length / (n * n / math.e)
        details.append(f"n={n}: ratio {ratio:.5f} (tol {tol})")
        if abs(ratio - 1) > tol:
            return False, "; ".join(details)
    return True, "; ".join(details)


def criterion_8_ode_identities() -> tuple[bool, str]:
    """The closed form satisfies its differential equation and endpoint."""
    t0, f_t0 = ode_constants()
    if abs(ode_f(t0) - 1 / math.e) > 1e-12:
        return False, f"f(t0) = {ode_f(t0)!r} is not 1/e"
    if abs(f_t0 - 1 / math.e) > 1e-12:
        return False, "reported stationary value is not 1/e"
    if abs(ode_fprime(t0)) > 1e-9:
        return False, f"f'(t0) = {ode_fprime(t0)!r} is not 0"
    worst = 0.0
    steps = 900
    for i in range(steps + 1):
        t = i / 1000.0
        residual = abs(ode_fprime(t) - 2 * (1 - t - ode_f(t) / (1 - t)))
        worst = max(worst, residual)
        if residual >= 1e-9:
            return False, f"residual {residual:.3e} at t={t}"
    return True, f"max residual {worst:.2e} on [0, 0.9]; f(t0)=1/e, f'(t0)=0"


def criterion_9_chip_defence() -> tuple[bool, str]:
    """The greedy defender keeps every pile within the logarithmic bound
    against the whole adversary menu."""
    rounds = 100_000
    worst_margin = None
    for k in (1, 2, 5):
        for n in (10, 100, 1000):
            bound = chip_bound(k, n)
            for adversary in ADVERSARIES:
                for s in range(5):
                    seed = derive(ROOT_SEED, "chips", k, n, adversary, s)
                    result = chips_play(k, n, adversary, rounds, seed)
                    if result.history_max > bound:
                        return False, (
                            f"k={k} n={n} {adversary} seed#{s}: "
                            f"max pile {result.history_max} > bound {bound}"
                        )
                    margin = bound - result.history_max
                    if worst_margin is None or margin < worst_margin:
                        worst_margin = margin
    return True, (
        f"180 runs x {rounds} rounds, zero violations "
        f"(tightest margin {worst_margin} chips)"
    )


def criterion_10_fractional_scaling() -> tuple[bool, str]:
    """Fractional play on K_n scales like p times ordinary play, and the
    coupled games coincide exactly at p = 1."""
    n = 2000
    base = kn_game_length(n)
    details = []
    for p in (Fraction(1, 2), Fraction(1, 4)):
        frac_len = simulate_fractional_kn(n, p)
        target = p * base
        rel = abs(Fraction(frac_len) - target) / target
        details.append(f"p={p}: {frac_len} vs {float(target):.0f} (rel {float(rel):.4f})")
        if rel > Fraction(1, 10):
            return False, "; ".join(details)
    for m in (2, 13, 30):
        report = couple(complete(m), 1)
        if not (report.ell_f == report.ell_o and report.m_o == 0 and report.m_f == 0):
            return False, f"p=1 coupling out of sync on K_{m}: {report}"
    details.append("p=1 coupling exact on K_2, K_13, K_30")
    return True, "; ".join(details)


def criterion_11_random_graphs() -> tuple[bool, str]:
    """Dense random graphs behave like p-scaled complete graphs, and every
    mimic run pauses within twice its discrepancy functional."""
    n = 1000
    reference_base = n * n / math.e
    details = []
    for p in (0.1, 0.3):
        for trial in range(3):
            sample = gnp(n, p, derive(ROOT_SEED, "rg", str(p), trial))
            length = heuristic_length(sample.graph, derive(ROOT_SEED, "match", trial))
            ratio = length / (p * reference_base)
            if abs(ratio - 1) > 0.10:
                return False, f"p={p} trial {trial}: heuristic ratio {ratio:.4f}"
            report = couple_kn_mimic(sample.graph, p, derive(ROOT_SEED, "mimic", trial))
            bound = 2 * discrepancy_D(sample.graph, report.order, p)
            if Fraction(report.pause_turns) > bound:
                return False, (
                    f"p={p} trial {trial}: paused {report.pause_turns} turns, "
                    f"allowed {float(bound):.1f}"
                )
            details.append(
                f"p={p}#{trial}: ratio {ratio:.3f}, pauses {report.pause_turns}/{float(bound):.0f}"
            )
    return True, "; ".join(details)


def criterion_12_ratio_instance() -> tuple[bool, str]:
    """The subdivided sunlet instance with game-to-optimal ratio 1, plus
    budgeted stretch checks (ratio 4/3 instance and the bouquet values)."""
    g31 = subdivided_sunlet(3, 1)
    b = brush_number(g31)
    if b != 3:
        return False, f"brush number of G_3,1 is {b}, want 3"
    bg = Solver(g31).solve(None, Player.MIN).value
    if bg != 3:
        return False, f"game value of G_3,1 is {bg}, want 3"
    notes = ["G_3,1: b=3, game value 3 (ratio 1)"]
    # Stretch: allowed to skip on budget, never to report a wrong value.
    stretch_budget = 40_000_000
    g32 = subdivided_sunlet(3, 2)
    report = Solver(g32, budget=stretch_budget).solve(None, Player.MIN)
    if report.budget_hit:
        notes.append("G_3,2: skipped (budget exceeded)")
    elif report.value != 4:
        # Exhaustive search gives 5 here (independently reconfirmed); the
        # n+k-1 pattern behind the expected 4 relies on a reduction that
        # degenerates when n - k < 2, and this instance sits past that edge.
        return False, (
            f"stretch: game value of G_3,2 is {report.value} (ratio {report.value}/3), "
            "the stated 4 (ratio 4/3) is not attainable"
        )
    else:
        notes.append("G_3,2: game value 4 (ratio 4/3)")
    bq = bouquet(1)
    solver = Solver(bq, symmetry=SYMMETRY_SORTED, budget=stretch_budget)
    r_min = solver.solve(None, Player.MIN)
    r_max = solver.solve(None, Player.MAX)
    if r_min.budget_hit or r_max.budget_hit:
        notes.append("bouquet(1): skipped (budget exceeded)")
    elif (r_min.value, r_max.value) != (9, 8):
        return False, f"bouquet(1) gave {(r_min.value, r_max.value)}, want (9, 8)"
    else:
        notes.append("bouquet(1): values (9, 8)")
    return True, "; ".join(notes)


# -- runner -------------------------------------------------------------------

_CRITERIA: list[tuple[int, str, object, float | None, str]] = [
    (1, "exact small game values", criterion_1_exact_small_values, 60.0, "exact"),
    (2, "seeded comb unions", criterion_2_seeded_combs, None, "exact"),
    (3, "game-vs-brush-number bounds sweep", criterion_3_bounds_sweep, 600.0, "exact"),
    (4, "configuration monotonicity", criterion_4_config_monotonicity, None, "exact"),
    (5, "firing-order independence", criterion_5_order_independence, None, "exact"),
    (6, "column model agreement", criterion_6_model_agreement, None, "asymptotic"),
    (7, "complete-graph asymptotics", criterion_7_asymptotic_ratio, 60.0, "asymptotic"),
    (8, "fluid-limit identities", criterion_8_ode_identities, None, "asymptotic"),
    (9, "chip-stacking defence bound", criterion_9_chip_defence, 300.0, "fractional"),
    (10, "fractional scaling and p=1 coupling", criterion_10_fractional_scaling, None, "fractional"),
    (11, "random-graph scaling and pauses", criterion_11_random_graphs, 600.0, "random"),
    (12, "ratio-one instance plus stretches", criterion_12_ratio_instance, None, "exact"),
]

SUITES = ("exact", "asymptotic", "fractional", "random", "all")


def criterion_ids(suite: str = "all") -> list[int]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    return [cid for cid, _, _, _, s in _CRITERIA if suite in ("all", s)]


def run_criterion(cid: int) -> CriterionResult:
    for num, name, func, budget, _ in _CRITERIA:
        if num == cid:
            start = time.perf_counter()
            ok, detail = func()
            elapsed = time.perf_counter() - start
            if ok and budget is not None and elapsed >= budget:
                ok = False
                detail += f" (but took {elapsed:.1f}s, budget {budget:.0f}s)"
            return CriterionResult(cid, name, ok, detail, elapsed, budget)
    raise ValueError(f"no criterion {cid}")


def run_suite(suite: str = "all", echo=None) -> list[CriterionResult]:
    results = []
    for cid in criterion_ids(suite):
        result = run_criterion(cid)
        results.append(result)
        if echo is not None:
            echo(result.line)
    return results
