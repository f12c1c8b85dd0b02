"""Command-line interface.

Exit codes:

- ``decide`` / ``classify``: 0 packable, 1 blocked, 2 not in D_k, 3 input error
- ``pack``: 0 found, 1 definitively absent, 2 budget exhausted, 3 input error
- ``gen``: 0 ok, 3 bad parameters
- ``fuzz``: 0 all trials agree, 1 some mismatch, 2 some trial undecided
"""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, TextIO

from .classify import Verdict, decide
from .core import GraphError, Multigraph
from .gen import (
    FAMILY_CLASSES,
    FamilyParameterError,
    FamilySpec,
    make_family,
    random_multigraph_in_Dk,
    sprinkle_loops,
)
from .graphio import ParseError, format_graph, parse_graph
from .pack import DEFAULT_BUDGET, SearchBudgetExceeded, find_disjoint_cycles

EXIT_INPUT_ERROR = 3

_VERDICT_EXIT = {
    Verdict.PACKABLE: 0,
    Verdict.BLOCKED: 1,
    Verdict.NOT_IN_DK: 2,
    Verdict.OUT_OF_SCOPE: 2,
}


def _read_graph(path: str) -> Multigraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_graph(text)


def _positive(value: str) -> int:
    k = int(value)
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return k


def _density(value: str) -> float:
    x = float(value)
    if not 0.0 <= x <= 1.0:
        raise argparse.ArgumentTypeError(f"expected a value in [0, 1], got {value}")
    return x


def _cmd_decide(args, out: TextIO) -> int:
    g = _read_graph(args.input)
    d = decide(g, args.k)
    out.write(f"verdict={d.verdict}\n")
    for b in d.blockers:
        out.write(b.line() + "\n")
    return _VERDICT_EXIT[d.verdict]


def _cmd_classify(args, out: TextIO) -> int:
    g = _read_graph(args.input)
    d = decide(g, args.k)
    out.write(d.report())
    return _VERDICT_EXIT[d.verdict]


def _cmd_pack(args, out: TextIO) -> int:
    g = _read_graph(args.input)
    try:
        packing = find_disjoint_cycles(g, args.k, budget=args.budget)
    except SearchBudgetExceeded as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return 2
    if packing is None:
        print(f"absent: no {args.k} disjoint cycles", file=sys.stderr)
        return 1
    for line in packing.lines():
        out.write(line + "\n")
    return 0


def _cmd_gen(args, out: TextIO) -> int:
    if args.cls == "random":
        if args.n is None or args.k is None:
            raise FamilyParameterError("random needs --n and --k")
        g = random_multigraph_in_Dk(
            args.n, args.k, args.strong_density if args.strong_density is not None else 0.0, args.seed
        )
    else:
        spec = FamilySpec(
            cls=args.cls,
            k=args.k,
            k_prime=args.k_prime,
            alpha_prime=args.alpha_prime,
            n=args.n,
            rim=args.rim,
            leaves=args.leaves,
            strong_density=args.strong_density if args.strong_density is not None else 0.5,
            extra_strong=args.extra_strong,
            seed=args.seed,
            shuffle=not args.no_shuffle,
        )
        g = make_family(spec)
    out.write(format_graph(g))
    return 0


@dataclass(frozen=True)
class TrialResult:
    index: int
    k: int
    n: int
    verdict: str
    oracle: str  # "found", "absent" or "unknown"
    graph: str

    @property
    def agrees(self) -> bool:
        if self.oracle == "unknown":
            return True
        return (self.verdict == Verdict.PACKABLE.value) == (self.oracle == "found")


def fuzz_trial(
    index: int,
    seed: int,
    k: Optional[int],
    n_max: int,
    strong_density: Optional[float],
    loop_density: float,
    budget: int,
) -> TrialResult:
    """One seeded oracle-equivalence trial; self-contained so it can run in a worker."""
    rng = random.Random(f"{seed}:{index}")
    kk = k if k is not None else rng.choice((2, 3))
    n = rng.randint(2 * kk, max(2 * kk, n_max))
    density = strong_density if strong_density is not None else rng.choice((0.0, 0.1, 0.25, 0.5))
    g = random_multigraph_in_Dk(n, kk, density, rng.getrandbits(64), edge_prob=rng.random())
    if loop_density > 0 and rng.random() < 0.25:
        g = sprinkle_loops(g, loop_density, rng.getrandbits(64))
    d = decide(g, kk)
    try:
        oracle = "found" if find_disjoint_cycles(g, kk, budget=budget) is not None else "absent"
    except SearchBudgetExceeded:
        oracle = "unknown"
    return TrialResult(index, kk, n, d.verdict.value, oracle, format_graph(g))


def _cmd_fuzz(args, out: TextIO) -> int:
    kmin = args.k if args.k is not None else 2
    if args.n_max < 2 * kmin:
        raise FamilyParameterError(f"--n-max must be at least 2k = {2 * kmin}")
    params = (args.seed, args.k, args.n_max, args.strong_density, args.loop_density, args.budget)
    indices = range(args.trials)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_trial_star, [(i, *params) for i in indices], chunksize=16))
    else:
        results = [fuzz_trial(i, *params) for i in indices]
    results.sort(key=lambda r: r.index)
    mismatches = [r for r in results if not r.agrees]
    unknown = [r for r in results if r.oracle == "unknown"]
    counts = {v.value: 0 for v in Verdict}
    for r in results:
        counts[r.verdict] += 1
    out.write(f"trials={len(results)}\n")
    out.write(f"seed={args.seed}\n")
    for name, c in counts.items():
        out.write(f"verdict_{name}={c}\n")
    out.write(f"oracle_unknown={len(unknown)}\n")
    out.write(f"mismatches={len(mismatches)}\n")
    for r in mismatches:
        out.write(f"mismatch trial={r.index} k={r.k} verdict={r.verdict} oracle={r.oracle}\n")
        for line in r.graph.splitlines():
            out.write(f"  {line}\n")
    if mismatches:
        return 1
    return 2 if unknown else 0


def _trial_star(params) -> TrialResult:
    return fuzz_trial(*params)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclepack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def graph_cmd(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--k", type=_positive, required=True)
        p.add_argument("--input", default="-", help="graph file, or - for stdin")
        return p

    graph_cmd("decide", "verdict and blockers")
    graph_cmd("classify", "full classification report")
    p = graph_cmd("pack", "print k disjoint cycles, one per line")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)

    p = sub.add_parser("gen", help="write a generated graph to stdout")
    p.add_argument("cls", choices=FAMILY_CLASSES + ("random",))
    p.add_argument("--k", type=_positive)
    p.add_argument("--k-prime", type=int)
    p.add_argument("--alpha-prime", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--rim", type=int)
    p.add_argument("--leaves", type=int, default=2)
    p.add_argument("--strong-density", type=_density)
    p.add_argument("--extra-strong", action="store_true")
    p.add_argument("--no-shuffle", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("fuzz", help="cross-check decide against the exact packer")
    p.add_argument("--k", type=_positive, help="fixed k (default: 2 or 3 per trial)")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strong-density", type=_density)
    p.add_argument("--loop-density", type=_density, default=0.15)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=_positive, default=1)
    return parser


_COMMANDS = {
    "decide": _cmd_decide,
    "classify": _cmd_classify,
    "pack": _cmd_pack,
    "gen": _cmd_gen,
    "fuzz": _cmd_fuzz,
}


def run(argv: Optional[list[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout if out is None else out
    try:
        return _COMMANDS[args.verb](args, out)
    except (ParseError, GraphError, FamilyParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run())
