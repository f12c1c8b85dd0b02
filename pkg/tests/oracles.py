"""Brute-force references used only by the tests.

Nothing here shares code with the paths it checks: cycles are found by
trying vertex orderings, independence by subset enumeration, and so on.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from cyclepack.core import Multigraph, SimpleGraph


def all_simple_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_simple_graph(n: int, p: float, rng: random.Random) -> SimpleGraph:
    return SimpleGraph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_multigraph(n: int, rng: random.Random, p: float = 0.5, strong: float = 0.2, loops: float = 0.0) -> Multigraph:
    edges = []
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.append((u, v, 2 if rng.random() < strong else 1))
    edges += [(v, v, 1) for v in range(n) if rng.random() < loops]
    return Multigraph(n, edges)


def independence_sets(h: SimpleGraph, size: int) -> list[tuple[int, ...]]:
    verts = h.vertices()
    return [
        c
        for c in combinations(verts, size)
        if all(not h.has_edge(u, v) for u, v in combinations(c, 2))
    ]


def independence_number(h: SimpleGraph) -> int:
    best = 0
    verts = h.vertices()
    for size in range(len(verts) + 1):
        if independence_sets(h, size):
            best = size
        else:
            break
    return best


def _has_hamiltonian_cycle(g: Multigraph, vs: tuple[int, ...]) -> bool:
    first, rest = vs[0], vs[1:]
    for perm in permutations(rest):
        if perm[0] > perm[-1]:
            continue
        order = (first,) + perm
        if all(g.multiplicity(order[i], order[(i + 1) % len(order)]) >= 1 for i in range(len(order))):
            return True
    return False


def cycle_vertex_sets(g: Multigraph) -> list[frozenset[int]]:
    """Vertex sets that carry at least one cycle (loops, 2-cycles, longer)."""
    sets = [frozenset({v}) for v in range(g.n) if g.loop_count(v)]
    sets += [frozenset(p) for p in combinations(range(g.n), 2) if g.multiplicity(*p) >= 2]
    for size in range(3, g.n + 1):
        for vs in combinations(range(g.n), size):
            if _has_hamiltonian_cycle(g, vs):
                sets.append(frozenset(vs))
    return sets


def brute_max_packing(g: Multigraph) -> int:
    """Maximum number of vertex-disjoint cycles by exhaustive set packing."""
    cycles = sorted(cycle_vertex_sets(g), key=len)
    best = 0

    def go(i: int, used: frozenset[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        for j in range(i, len(cycles)):
            c = cycles[j]
            if not (c & used):
                go(j + 1, used | c, count + 1)

    go(0, frozenset(), 0)
    return best


def brute_superstars(f: SimpleGraph) -> set[tuple[int, tuple[int, ...]]]:
    """Every (center, leaves) pair satisfying the superstar definition."""
    from cyclepack.matching import brute_max_matching

    found = set()
    verts = f.vertices()
    for center in verts:
        others = [v for v in verts if v != center]
        for size in range(1, len(others) + 1):
            for leaves in combinations(others, size):
                if any(f.neighbors(v) != {center} for v in leaves):
                    continue
                rest = set(verts) - set(leaves) - {center}
                m = brute_max_matching(f, rest)
                if 2 * len(m) == len(rest):
                    found.add((center, leaves))
    return found


def is_three_connected(g: Multigraph) -> bool:
    n = g.n
    if n < 4:
        return False
    for r in range(0, 3):
        for removed in combinations(range(n), r):
            keep = [v for v in range(n) if v not in removed]
            sub, _ = g.induced(keep)
            seen = {0}
            stack = [0]
            while stack:
                u = stack.pop()
                for w in sub.neighbors(u):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != sub.n:
                return False
    return True


def brute_matching_number(h: SimpleGraph) -> int:
    """Maximum matching size by recursion on the least unresolved vertex."""
    from functools import lru_cache

    adj = {v: h.neighbors(v) for v in h.vertices()}

    @lru_cache(maxsize=None)
    def best(rest: frozenset[int]) -> int:
        if not rest:
            return 0
        v = min(rest)
        without = rest - {v}
        out = best(without)
        for w in adj[v] & without:
            out = max(out, 1 + best(without - {w}))
        return out

    return best(frozenset(h.vertices()))
