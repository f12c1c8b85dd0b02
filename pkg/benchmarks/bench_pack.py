"""Time the compiled and pure-Python packing kernels on the same inputs.

    python benchmarks/bench_pack.py [--repeat 3] [--seed 0]

Both kernels run the same search with the same expansion counter, so the
expansion column doubles as a consistency check.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from cyclepack.gen import (
    FamilySpec,
    complete_graph,
    make_family,
    random_multigraph_in_Dk,
    triangle_family,
)
from cyclepack.pack import KERNEL, _kernel_search, max_disjoint_cycles


def corpus(seed: int):
    """Mostly definitive-absence instances, where the whole space is searched."""
    rng = random.Random(seed)
    cases = [
        ("K15 k=5", complete_graph(15), 5),
        ("triangles(3,3) k=6", triangle_family(3, 3), 6),
        ("B_I n=19 k=7", make_family(FamilySpec("B_I", k_prime=5, alpha_prime=2)), 7),
        ("D_I n=19 k=7", make_family(FamilySpec("D_I", k_prime=5, alpha_prime=2, leaves=3)), 7),
        ("C_II n=17 k=5", make_family(FamilySpec("C_II", k=5, n=17, seed=1)), 5),
        ("F n=18 k=8", make_family(FamilySpec("F", alpha_prime=6)), 8),
    ]
    for n in (20, 24, 28):
        g = random_multigraph_in_Dk(n, 2, 0.0, rng.getrandbits(64), edge_prob=0.0)
        k = max_disjoint_cycles(g) + 1
        cases.append((f"sparse n={n} k={k}", g, k))
    return cases


def masks(g):
    adj = [0] * g.n
    strong = [0] * g.n
    for u, v, m in g.pairs():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if m >= 2:
            strong[u] |= 1 << v
            strong[v] |= 1 << u
    return adj, strong


def timed(kernel: str, n, adj, strong, k, repeat: int):
    samples = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = _kernel_search(n, adj, strong, k, 10**9, kernel)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if KERNEL != "compiled":
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

    header = f"{'instance':<24}{'found':>6}{'expansions':>12}{'python s':>11}{'compiled s':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    total_py = total_c = 0.0
    for name, g, k in corpus(args.seed):
        adj, strong = masks(g)
        t_py, r_py = timed("python", g.n, adj, strong, k, args.repeat)
        t_c, r_c = timed("compiled", g.n, adj, strong, k, args.repeat)
        if r_py != r_c:
            raise SystemExit(f"kernels disagree on {name}")
        total_py += t_py
        total_c += t_c
        found, _, expansions = r_c
        print(f"{name:<24}{'yes' if found else 'no':>6}{expansions:>12}{t_py:>11.4f}{t_c:>12.5f}{t_py / t_c:>8.1f}x")
    print("-" * len(header))
    print(f"{'total':<42}{total_py:>11.4f}{total_c:>12.5f}{total_py / total_c:>8.1f}x")


if __name__ == "__main__":
    main()
