"""Graph cleaning with brushes: process, game, exact solver, experiments.

The package is organised around the sequential cleaning process (a vertex
holding at least as many brushes as it has dirty neighbours fires, sending
one brush along each dirty edge) and the competitive game built on top of
it, where Min and Max alternately place single brushes until the whole
graph is clean.
"""

__version__ = "0.1.0"

from .cleaning import BrushState, CleaningTrace, can_clean, fire, stabilize
from .brushnumber import brush_number, greedy_upper_bound, odd_lower_bound
from .errors import (
    BrushgameError,
    BudgetExceededError,
    IllegalMoveError,
    InternalInvariantError,
    SymmetryEligibilityError,
)
from .families import (
    SeededInstance,
    bouquet,
    comb,
    comb_union_seeded,
    complete,
    cycle,
    path,
    star,
    subdivided_sunlet,
    sunlet,
)
from .game import (
    GameState,
    MatchResult,
    Player,
    legal_moves,
    make_strategy,
    new_game,
    play,
    run_match,
)
from .graph import Graph, format_edge_list, graph_from_edges, parse_edge_list
from .solver import SolveReport, Solver, game_value, optimal_move
from .triangle import (
    TriangleState,
    balanced_move,
    count_in_brushes,
    greedy_move,
    kn_full_cross_check,
    kn_game_length,
    simulate_triangle,
    threshold,
)
from .ode import ode_constants, ode_f, ode_fprime
from .fractional import (
    FractionalState,
    frac_fire,
    frac_stabilize,
    simulate_fractional_kn,
)
from .chips import chip_bound, chips_play
from .coupling import CouplingReport, couple
from .randomgraphs import (
    ExperimentRecord,
    GnpSample,
    MimicReport,
    couple_kn_mimic,
    discrepancy_D,
    experiment,
    gnp,
    heuristic_length,
)
