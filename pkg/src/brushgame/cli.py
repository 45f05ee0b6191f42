"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 search budget exceeded,
3 internal invariant violation (a bug, not bad input).

Every subcommand accepts ``--config FILE`` holding ``key=value`` lines
that mirror its long flags; explicit flags win over the file.  The
``random`` subcommand appends self-describing JSON records to its results
file, each referencing a run manifest (command line, root seed, version,
input digests) written at the start of the run.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__, acceptance
from .brushnumber import brush_number, odd_lower_bound
from .chips import ADVERSARIES, chip_bound, chips_play
from .coupling import couple
from .errors import BudgetExceededError, InternalInvariantError
from .families import (
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
from .fractional import simulate_fractional_kn
from .game import Player, run_match, strategy_names
from .graph import format_config, format_edge_list, parse_config, parse_edge_list
from .randomgraphs import experiment
from .solver import game_value
from .triangle import kn_game_length, simulate_triangle
import math

USAGE_ERROR = 1
BUDGET_ERROR = 2
INVARIANT_ERROR = 3


@dataclass(frozen=True)
class RunManifest:
    argv: list[str]
    seed: int
    version: str
    timestamp: float
    inputs: dict[str, str]

    @property
    def digest(self) -> str:
        body = json.dumps(
            {"argv": self.argv, "seed": self.seed, "version": self.version,
             "inputs": self.inputs},
            sort_keys=True,
        )
        return hashlib.sha256(body.encode()).hexdigest()[:16]

    def to_dict(self) -> dict:
        return {
            "kind": "manifest",
            "id": self.digest,
            "argv": self.argv,
            "seed": self.seed,
            "version": self.version,
            "timestamp": self.timestamp,
            "inputs": self.inputs,
        }


def _digest_file(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:16]


def _expand_config(argv: list[str]) -> list[str]:
    """Splice ``--config FILE`` key=value pairs in as flags (flags given on
    the command line come later, so they win)."""
    if "--config" not in argv:
        return argv
    i = argv.index("--config")
    if i + 1 >= len(argv):
        raise ValueError("--config needs a file argument")
    config_path = argv[i + 1]
    rest = argv[:i] + argv[i + 2 :]
    if not rest:
        raise ValueError("--config cannot replace the subcommand")
    injected = []
    for lineno, raw in enumerate(Path(config_path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{config_path}:{lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        flag = "--" + key.replace("_", "-")
        if value.lower() in ("true", "false"):
            if value.lower() == "true":
                injected.append(flag)
        else:
            injected.extend([flag, value])
    return [rest[0]] + injected + rest[1:]


def _load_graph(args) -> object:
    return parse_edge_list(Path(args.graph).read_text(), name=args.graph)


def _load_init(args) -> dict[int, int] | None:
    if getattr(args, "init", None):
        return parse_config(Path(args.init).read_text())
    return None


_FAMILIES = {
    "path": lambda a: path(a.n),
    "cycle": lambda a: cycle(a.n),
    "star": lambda a: star(a.n),
    "complete": lambda a: complete(a.n),
    "comb": lambda a: comb(a.n),
    "sunlet": lambda a: sunlet(a.n),
    "subdivided-sunlet": lambda a: subdivided_sunlet(a.n, a.k),
    "bouquet": lambda a: bouquet(a.n),
}


def _cmd_families(args) -> int:
    if args.family == "comb-union":
        if not args.sizes:
            print("comb-union needs --sizes, e.g. --sizes 2,3", file=sys.stderr)
            return USAGE_ERROR
        sizes = [int(s) for s in args.sizes.split(",")]
        inst = comb_union_seeded(sizes)
        graph, init = inst.graph, inst.init
        comment = f"{inst.label}: one brush on each degree-2 vertex"
    else:
        graph = _FAMILIES[args.family](args)
        init = None
        comment = graph.name
    text = format_edge_list(graph, comment=comment)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if init is not None:
        init_text = format_config(init, comment=f"seed configuration for {comment}")
        if args.init_out:
            Path(args.init_out).write_text(init_text)
        else:
            sys.stdout.write(init_text)
    return 0


def _cmd_play(args) -> int:
    graph = _load_graph(args)
    init = _load_init(args)
    result = run_match(
        graph,
        init,
        strat_min=args.min_strategy,
        strat_max=args.max_strategy,
        first=Player.parse(args.first),
        seed=args.seed,
    )
    print(f"length {result.length}")
    if args.transcript:
        for mover, v in result.transcript:
            print(json.dumps({"player": mover.value, "vertex": v}))
    return 0


def _cmd_solve(args) -> int:
    graph = _load_graph(args)
    init = _load_init(args)
    report = game_value(
        graph,
        init,
        mover=Player.parse(args.first),
        budget=args.budget,
        symmetry=args.symmetry,
    )
    if report.budget_hit:
        print(f"budget exceeded after {report.positions_explored} positions", file=sys.stderr)
        return BUDGET_ERROR
    print(report.value)
    move = "-" if report.principal_move is None else report.principal_move
    print(f"principal-move {move}")
    print(f"positions {report.positions_explored}")
    return 0


def _cmd_kn(args) -> int:
    if args.w is not None or args.h is not None or args.t is not None:
        if None in (args.w, args.h, args.t):
            print("custom boards need all of --w, --h, --t", file=sys.stderr)
            return USAGE_ERROR
        length = simulate_triangle(args.w, args.h, args.t)
        print(f"length {length}")
        return 0
    if args.sweep:
        lo, hi = (int(part) for part in args.sweep.split(":"))
        print("n,length,ratio")
        for n in range(lo, hi + 1):
            length = kn_game_length(n)
            ratio = length / (n * n / math.e) if n > 1 else 0.0
            print(f"{n},{length},{ratio:.6f}")
        return 0
    if args.n is None:
        print("kn needs --n, --sweep, or a custom board", file=sys.stderr)
        return USAGE_ERROR
    if args.model == "full":
        from .families import complete as make_complete

        length = run_match(make_complete(args.n), first=Player.MIN).length
    else:
        length = kn_game_length(args.n)
    ratio = length / (args.n * args.n) if args.n else 0.0
    print(f"length {length}")
    print(f"length/n^2 {ratio:.6f}")
    print(f"1/e {1 / math.e:.6f}")
    return 0


def _cmd_frac(args) -> int:
    p = Fraction(args.p)
    length = simulate_fractional_kn(args.n, p)
    print(f"length {length}")
    return 0


def _cmd_chips(args) -> int:
    result = chips_play(args.k, args.piles, args.adversary, args.rounds, args.seed)
    print(f"history-max {result.history_max}")
    print(f"bound {chip_bound(args.k, args.piles)}")
    return 0


def _cmd_couple(args) -> int:
    if args.graph:
        graph = _load_graph(args)
    elif args.kn:
        graph = complete(args.kn)
    else:
        print("couple needs --graph or --kn", file=sys.stderr)
        return USAGE_ERROR
    report = couple(
        graph,
        Fraction(args.p),
        a_is=Player.parse(args.a_is),
        seed=args.seed,
    )
    print(f"ell-o {report.ell_o}")
    print(f"ell-f {report.ell_f}")
    print(f"m-o {report.m_o}")
    print(f"m-f {report.m_f}")
    print(f"max-dA {report.max_d_a}")
    print(f"min-dB {report.min_d_b}")
    return 0


def _cmd_random(args) -> int:
    modes = ("heuristic", "couple") if args.mode == "both" else (args.mode,)
    sink = None
    handle = None
    if args.out:
        manifest = RunManifest(
            argv=sys.argv[1:],
            seed=args.seed,
            version=__version__,
            timestamp=time.time(),
            inputs={},
        )
        handle = open(args.out, "a", encoding="utf-8")
        handle.write(json.dumps(manifest.to_dict()) + "\n")
        mid = manifest.digest

        def sink(record):
            payload = record.to_dict()
            payload["manifest"] = mid
            handle.write(json.dumps(payload) + "\n")

    try:
        records = experiment(args.n, args.p, args.trials, args.seed, modes=modes, sink=sink)
    finally:
        if handle is not None:
            handle.close()
    print("n,p,trial,mode,length,ratio")
    for r in records:
        ratio = "" if r.ratio is None else f"{r.ratio:.6f}"
        print(f"{r.n},{r.p},{r.trial},{r.mode},{r.length},{ratio}")
    return 0


def _cmd_accept(args) -> int:
    results = acceptance.run_suite(args.suite, echo=print)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brushgame",
        description="Graph cleaning with brushes: process, game, solver, experiments.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_fam = sub.add_parser("families", help="emit a graph family as an edge list")
    p_fam.add_argument("--family", required=True, choices=sorted(_FAMILIES) + ["comb-union"])
    p_fam.add_argument("--n", type=int, default=0, help="size parameter")
    p_fam.add_argument("--k", type=int, default=1, help="second parameter where needed")
    p_fam.add_argument("--sizes", help="comma list for comb-union, e.g. 2,3")
    p_fam.add_argument("--out", help="write the edge list here instead of stdout")
    p_fam.add_argument("--init-out", help="write the seed configuration here")
    p_fam.set_defaults(func=_cmd_families)

    p_play = sub.add_parser("play", help="run one match between named strategies")
    p_play.add_argument("--graph", required=True)
    p_play.add_argument("--init")
    p_play.add_argument("--first", default="min")
    p_play.add_argument("--min-strategy", default="greedy", choices=strategy_names())
    p_play.add_argument("--max-strategy", default="balanced", choices=strategy_names())
    p_play.add_argument("--seed", type=int, default=0)
    p_play.add_argument("--transcript", action="store_true")
    p_play.set_defaults(func=_cmd_play)

    p_solve = sub.add_parser("solve", help="exact game value by memoized minimax")
    p_solve.add_argument("--graph", required=True)
    p_solve.add_argument("--init")
    p_solve.add_argument("--first", default="min")
    p_solve.add_argument("--symmetry", default="none", choices=["none", "sorted", "auto"])
    p_solve.add_argument("--budget", type=int)
    p_solve.set_defaults(func=_cmd_solve)

    p_kn = sub.add_parser("kn", help="complete-graph game lengths and boards")
    p_kn.add_argument("--n", type=int)
    p_kn.add_argument("--model", default="triangle", choices=["triangle", "full"])
    p_kn.add_argument("--w", type=int)
    p_kn.add_argument("--h", type=int)
    p_kn.add_argument("--t", type=int)
    p_kn.add_argument("--sweep", help="emit CSV rows for n in LO:HI")
    p_kn.set_defaults(func=_cmd_kn)

    p_frac = sub.add_parser("frac", help="fractional game length on K_n")
    p_frac.add_argument("--n", type=int, required=True)
    p_frac.add_argument("--p", required=True, help="rational share, e.g. 1/2")
    p_frac.set_defaults(func=_cmd_frac)

    p_chips = sub.add_parser("chips", help="chip-stacking game with greedy defence")
    p_chips.add_argument("--k", type=int, required=True)
    p_chips.add_argument("--piles", type=int, required=True)
    p_chips.add_argument("--adversary", required=True, choices=ADVERSARIES)
    p_chips.add_argument("--rounds", type=int, required=True)
    p_chips.add_argument("--seed", type=int, default=0)
    p_chips.set_defaults(func=_cmd_chips)

    p_couple = sub.add_parser("couple", help="couple the ordinary and fractional games")
    p_couple.add_argument("--graph")
    p_couple.add_argument("--kn", type=int)
    p_couple.add_argument("--p", required=True, help="rational share, e.g. 1/2")
    p_couple.add_argument("--a-is", default="min")
    p_couple.add_argument("--seed", type=int, default=0)
    p_couple.set_defaults(func=_cmd_couple)

    p_rand = sub.add_parser("random", help="seeded experiments on G(n,p)")
    p_rand.add_argument("--n", type=int, required=True)
    p_rand.add_argument("--p", type=float, required=True)
    p_rand.add_argument("--trials", type=int, default=1)
    p_rand.add_argument("--seed", type=int, default=0)
    p_rand.add_argument("--mode", default="both", choices=["heuristic", "couple", "both"])
    p_rand.add_argument("--out", help="append JSON records to this file")
    p_rand.set_defaults(func=_cmd_random)

    p_accept = sub.add_parser("accept", help="run the acceptance criteria")
    p_accept.add_argument("suite", nargs="?", default="all", choices=list(acceptance.SUITES))
    p_accept.set_defaults(func=_cmd_accept)

    return parser


def dispatch(argv: list[str]) -> int:
    try:
        argv = _expand_config(list(argv))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems and 0 for --help; fold usage into 1.
        code = exc.code if isinstance(exc.code, int) else USAGE_ERROR
        return 0 if code == 0 else USAGE_ERROR
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET_ERROR
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return INVARIANT_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
