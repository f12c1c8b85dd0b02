"""Acceptance criteria, one test (or small group) per criterion.

A summary line per criterion is printed at the end of the run by the
``pytest_terminal_summary`` hook in ``conftest.py``.
"""

import io
import os
import random
import subprocess
import sys
import time
from itertools import product

import pytest

from cyclepack.classify import Verdict, decide, decide_ms2k, decide_simple
from cyclepack.cli import fuzz_trial, run
from cyclepack.core import Multigraph, in_Dk, min_simple_degree, strong_edge_graph, underlying_simple
from cyclepack.gen import (
    FamilySpec,
    complete_graph,
    independent_join_clique,
    make_family,
    random_multigraph_in_Dk,
    triangle_family,
    wheel_graph,
    y_multigraph,
)
from cyclepack.matching import is_matching, matching_number, max_matching
from cyclepack.pack import find_disjoint_cycles, verify_packing
from cyclepack.recognize import lovasz_class
from oracles import all_simple_graphs, brute_matching_number, brute_max_packing, random_simple_graph

criterion = pytest.mark.criterion


# 1 ------------------------------------------------------------------------


@criterion(1, "oracle equivalence")
def test_oracle_equivalence():
    trials = 2000
    start = time.perf_counter()
    verdicts = {v.value: 0 for v in Verdict}
    for i in range(trials):
        r = fuzz_trial(i, seed=2024, k=None, n_max=9, strong_density=None, loop_density=0.15, budget=10**8)
        assert r.n <= 9 and r.k in (2, 3)
        assert r.oracle != "unknown", f"trial {i} undecided"
        assert r.agrees, f"trial {i}: verdict {r.verdict}, packer {r.oracle}\n{r.graph}"
        verdicts[r.verdict] += 1
    elapsed = time.perf_counter() - start
    assert verdicts["NotInDk"] == 0 and verdicts["OutOfTheoremScope"] == 0
    assert verdicts["Blocked"] > 50 and verdicts["Packable"] > 50
    assert elapsed < 60


@criterion(1, "oracle equivalence")
def test_packer_oracle_against_brute_force():
    # the oracle itself, checked against set-packing over all cycles (n <= 7)
    from cyclepack.graphio import parse_graph

    for i in range(300):
        r = fuzz_trial(i, seed=77, k=None, n_max=7, strong_density=None, loop_density=0.15, budget=10**8)
        g = parse_graph(r.graph)
        assert (r.oracle == "found") == (brute_max_packing(g) >= r.k)


# 2 ------------------------------------------------------------------------


def _settings():
    out = []
    for k in (2, 3, 4, 5):
        for n in range(2 * k, min(3 * k, 15)):
            for a in range(0, min(n // 2, 3 * k - 1 - n) + 1):
                out.append(FamilySpec("A", k=k, n=n, alpha_prime=a, seed=n + a))
    for kp, a in [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (3, 0), (3, 1), (3, 2)]:
        for seed in range(3):
            out.append(FamilySpec("B_I", k_prime=kp, alpha_prime=a, seed=seed))
    for a in range(1, 5):
        for seed in range(5):
            out.append(FamilySpec("B_II", alpha_prime=a, seed=seed))
    for k in (2, 3, 4):
        for n in range(2 * k, 15, 2):
            for density in (0.0, 0.5, 1.0):
                out.append(FamilySpec("C_I", k=k, n=n, strong_density=density, seed=n))
    for k in (2, 3, 4):
        for n in range(2 * k, 4 * k - 2):
            for extra in (False, True):
                out.append(FamilySpec("C_II", k=k, n=n, extra_strong=extra, strong_density=0.7, seed=n))
    for kp, a in [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (3, 1), (3, 2)]:
        for leaves in range(1, kp + 2):
            for seed in range(2):
                out.append(FamilySpec("D_I", k_prime=kp, alpha_prime=a, leaves=leaves, seed=seed))
    for kp, a in [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (3, 1), (3, 2)]:
        for seed in range(3):
            out.append(FamilySpec("D_II", k_prime=kp, alpha_prime=a, seed=seed))
    for rim in range(3, 14):
        for density in (0.0, 0.5, 1.0):
            out.append(FamilySpec("E", rim=rim, strong_density=density, seed=rim))
    for a in range(1, 5):
        for seed in range(5):
            out.append(FamilySpec("F", alpha_prime=a, seed=seed))
    return out


@criterion(2, "generator soundness")
def test_generator_soundness():
    start = time.perf_counter()
    per_class: dict[str, int] = {}
    for spec in _settings():
        g = make_family(spec)
        k = spec.resolved_k()
        assert g.n <= 14 and g.is_loopless() and in_Dk(g, k), spec
        d = decide(g, k)
        assert spec.cls in d.tags, (spec, d.tags)
        assert find_disjoint_cycles(g, k) is None, spec
        per_class[spec.cls] = per_class.get(spec.cls, 0) + 1
    assert all(count >= 20 for count in per_class.values()), per_class
    assert len(per_class) == 9
    assert time.perf_counter() - start < 300


# 3 ------------------------------------------------------------------------


@criterion(3, "named instances")
@pytest.mark.parametrize(
    "name, g, k, blocked, tag, simple_tag",
    [
        ("K5", complete_graph(5), 2, True, "A", "SimpleAlpha"),
        ("Y33", y_multigraph(3, 3), 3, True, "B_I", "SimpleEpsilon"),
        ("Y22", y_multigraph(2, 2), 2, False, None, None),
        ("K4bar+K5", independent_join_clique(4, 5), 3, True, "C_I", "SimpleDelta"),
    ],
)
def test_named_instances(name, g, k, blocked, tag, simple_tag):
    d = decide(g, k)
    assert (d.verdict == Verdict.BLOCKED) == blocked, name
    s = decide_simple(underlying_simple(g), k)
    assert s.verdict == d.verdict
    if tag:
        assert tag in d.tags
        assert simple_tag in s.tags
    packing = find_disjoint_cycles(g, k)
    assert (packing is None) == blocked
    if packing is not None:
        assert verify_packing(g, k, packing)


# 4 ------------------------------------------------------------------------


@criterion(4, "verdict consistency")
def test_counting_agrees_with_obstructions():
    rng = random.Random(4004)
    for _ in range(1000):
        k = rng.choice((2, 3))
        n = rng.randint(2 * k + 1, 12)
        g = random_multigraph_in_Dk(
            n, k, rng.choice((0.0, 0.1, 0.3, 0.6)), rng.getrandbits(64), edge_prob=rng.random(), min_degree=2 * k
        )
        assert g.is_loopless() and min_simple_degree(g) >= 2 * k
        alpha = matching_number(strong_edge_graph(g))
        expected = n + alpha < 3 * k
        assert (decide(g, k).verdict == Verdict.BLOCKED) == expected
        assert (decide_ms2k(g, k).verdict == Verdict.BLOCKED) == expected


def _d2_corpus(rng):
    corpus = []
    for _ in range(420):
        n = rng.randint(4, 10)
        corpus.append(random_multigraph_in_Dk(n, 2, rng.choice((0.0, 0.1, 0.3)), rng.getrandbits(64), edge_prob=rng.random() * 0.6))
    for _ in range(40):
        rim = rng.randint(3, 10)
        corpus.append(wheel_graph(rim, [i for i in range(1, rim + 1) if rng.random() < 0.5]))
    for _ in range(40):
        m = rng.randint(1, 8)
        inside = [(0, 1, rng.choice((1, 2))), (1, 2, rng.choice((1, 2)))][: rng.randint(0, 2)]
        corpus.append(Multigraph(3 + m, [(a, 3 + b, 1) for a in range(3) for b in range(m)] + inside))
    for _ in range(40):
        g = complete_graph(rng.choice((4, 5)))
        extra = [(u, v, 1) for u, v, _ in g.pairs() if rng.random() < 0.2]
        corpus.append(g.with_edges(extra))
    return corpus


@criterion(4, "verdict consistency")
def test_k2_agrees_with_lovasz():
    corpus = [g for g in _d2_corpus(random.Random(2002)) if in_Dk(g, 2)]
    assert len(corpus) >= 500
    blocked = 0
    for g in corpus[:500]:
        is_blocked = decide(g, 2).verdict == Verdict.BLOCKED
        assert is_blocked == (lovasz_class(g) is not None), g
        blocked += is_blocked
    assert blocked >= 50


# 5 ------------------------------------------------------------------------


@criterion(5, "matching correctness")
def test_matching_exhaustive_and_sampled(petersen):
    for n in range(1, 6):
        for h in all_simple_graphs(n):
            assert matching_number(h) == brute_matching_number(h)
    rng = random.Random(5005)
    for _ in range(1000):
        h = random_simple_graph(rng.randint(1, 8), rng.random(), rng)
        m = max_matching(h)
        assert is_matching(h, m) and len(m) == brute_matching_number(h)
    assert matching_number(petersen) == 5 == brute_matching_number(petersen)


# 6 ------------------------------------------------------------------------


@criterion(6, "triangle-packing family")
@pytest.mark.parametrize("s, t", list(product(range(1, 4), repeat=2)))
def test_triangle_family(s, t):
    g = triangle_family(s, t)
    start = time.perf_counter()
    packing = find_disjoint_cycles(g, s + t)
    elapsed = time.perf_counter() - start
    assert packing is not None and verify_packing(g, s + t, packing)
    assert all(len(c) == 3 for c in packing.cycles)
    assert elapsed < 10


# 7 ------------------------------------------------------------------------


@criterion(7, "performance")
def test_classify_500_vertices():
    g = random_multigraph_in_Dk(500, 5, 0.05, 500, edge_prob=0.02)
    assert in_Dk(g, 5)
    start = time.perf_counter()
    d = decide(g, 5)
    elapsed = time.perf_counter() - start
    assert d.verdict in (Verdict.PACKABLE, Verdict.BLOCKED)
    assert elapsed < 5


@criterion(7, "performance")
def test_classify_500_vertex_obstruction():
    g = make_family(FamilySpec("C_I", k=5, n=500, strong_density=0.3, seed=1))
    start = time.perf_counter()
    d = decide(g, 5)
    assert d.verdict == Verdict.BLOCKED and "C_I" in d.tags
    assert time.perf_counter() - start < 5


def _hard_instances():
    rng = random.Random(7007)
    out = [(complete_graph(12), 4), (independent_join_clique(5, 7), 4), (y_multigraph(4, 4), 4)]
    out += [(make_family(FamilySpec("C_II", k=4, n=12, seed=3)), 4)]
    out += [(make_family(FamilySpec("D_I", k_prime=3, alpha_prime=1, leaves=2, seed=2)), 4)]
    for _ in range(30):
        k = rng.choice((3, 4))
        out.append((random_multigraph_in_Dk(12, k, rng.choice((0.0, 0.2)), rng.getrandbits(64), edge_prob=rng.random()), k))
    return out


@criterion(7, "performance")
def test_packer_exhaustive_at_twelve():
    for g, k in _hard_instances():
        start = time.perf_counter()
        found = find_disjoint_cycles(g, k, budget=10**9)
        elapsed = time.perf_counter() - start
        assert found is None or verify_packing(g, k, found)
        assert elapsed < 10


# 8 ------------------------------------------------------------------------


def _cli(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


@criterion(8, "determinism")
def test_fuzz_is_reproducible():
    argv = ["fuzz", "--n-max", "9", "--trials", "150", "--seed", "11"]
    first = _cli(argv)
    assert first == _cli(argv)
    assert first == _cli(argv + ["--jobs", "3"])


@criterion(8, "determinism")
def test_gen_is_reproducible_across_processes():
    argvs = [
        ["gen", "random", "--n", "12", "--k", "3", "--strong-density", "0.3", "--seed", "5"],
        ["gen", "C_II", "--k", "3", "--n", "9", "--extra-strong", "--seed", "5"],
        ["gen", "D_I", "--k-prime", "3", "--alpha-prime", "1", "--seed", "5"],
        ["gen", "E", "--rim", "7", "--seed", "5"],
    ]
    for argv in argvs:
        outputs = set()
        for hashseed in ("0", "1", "random"):
            env = dict(os.environ, PYTHONHASHSEED=hashseed)
            proc = subprocess.run(
                [sys.executable, "-m", "cyclepack", *argv], capture_output=True, env=env, check=True
            )
            outputs.add(proc.stdout)
        outputs.add(_cli(argv)[1].encode())
        assert len(outputs) == 1, argv
