"""Recognizers for the named graph families and substructures.

All recognizers work on the active vertex set of a :class:`SimpleGraph` or
on a whole :class:`Multigraph`, and report results in original vertex ids.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from .core import Multigraph, SimpleGraph, underlying_simple
from .matching import has_perfect_matching


@dataclass(frozen=True)
class YWitness:
    """Partition of a graph isomorphic to the join of an independent set
    ``X0`` with two disjoint cliques ``X1`` and ``X2``."""

    x0: tuple[int, ...]
    x1: tuple[int, ...]
    x2: tuple[int, ...]

    def canonical(self) -> str:
        return f"X0:{_join(self.x0)};X1:{_join(self.x1)};X2:{_join(self.x2)}"


@dataclass(frozen=True)
class Superstar:
    center: int
    leaves: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.leaves) | {self.center}

    def canonical(self) -> str:
        return f"center:{self.center};leaves:{_join(self.leaves)}"


@dataclass(frozen=True)
class BigSet:
    vertices: tuple[int, ...]

    def canonical(self) -> str:
        return _join(self.vertices)


def _join(vs: Iterable[int]) -> str:
    return ",".join(str(v) for v in vs)


def is_cycle(h: SimpleGraph, active: Optional[Iterable[int]] = None) -> bool:
    """True iff the subgraph induced by ``active`` is one cycle of length >= 3."""
    sub = h if active is None else h.induced(active)
    verts = sub.vertices()
    if len(verts) < 3:
        return False
    if any(sub.degree(v) != 2 for v in verts):
        return False
    return len(sub.components()) == 1


def cycle_order(h: SimpleGraph, active: Optional[Iterable[int]] = None) -> list[int]:
    """Vertices of an induced cycle in traversal order, starting at the least id."""
    sub = h if active is None else h.induced(active)
    if not is_cycle(sub):
        raise ValueError("vertex set does not induce a cycle")
    start = min(sub.active)
    order = [start]
    prev, cur = start, min(sub.neighbors(start))
    while cur != start:
        order.append(cur)
        prev, cur = cur, next(w for w in sub.neighbors(cur) if w != prev)
    return order


def wheel_hubs(h: SimpleGraph) -> list[int]:
    """Every vertex that can serve as the hub of a wheel (rim length >= 3)."""
    verts = h.vertices()
    n = len(verts)
    if n < 4:
        return []
    hubs = []
    for v in verts:
        if h.degree(v) == n - 1 and is_cycle(h, h.active - {v}):
            hubs.append(v)
    return hubs


def wheel_hub(h: SimpleGraph) -> Optional[int]:
    hubs = wheel_hubs(h)
    return hubs[0] if hubs else None


def is_multigraph_wheel(g: Multigraph) -> Optional[int]:
    """Hub of ``g`` if it is a wheel whose strong pairs are all spokes."""
    if not g.is_loopless():
        return None
    strong = g.strong_pairs()
    for hub in wheel_hubs(underlying_simple(g)):
        if all(hub in pair for pair in strong):
            return hub
    return None


def y_witnesses(h: SimpleGraph, x0_size: int, clique_size: int) -> list[YWitness]:
    """All role assignments showing ``h`` is the join of an independent
    ``x0_size``-set with two disjoint ``clique_size``-cliques.

    Works on the complement, which must be a clique of size ``x0_size``
    disjoint from a complete bipartite graph with both sides ``clique_size``.
    """
    if x0_size < 0 or clique_size < 1:
        return []
    if h.order() != x0_size + 2 * clique_size:
        return []
    comp = h.complement()
    parts = comp.components()
    expected = 2 if x0_size > 0 else 1
    if len(parts) != expected:
        return []
    found = []
    for x0_idx in ([None] if x0_size == 0 else range(len(parts))):
        x0: list[int] = [] if x0_idx is None else parts[x0_idx]
        rest = [p for i, p in enumerate(parts) if i != x0_idx]
        if len(rest) != 1 or len(x0) != x0_size:
            continue
        sides = _complete_bipartition(comp, rest[0])
        if sides is None:
            continue
        a, b = sides
        if len(a) != clique_size or len(b) != clique_size:
            continue
        w = YWitness(tuple(x0), tuple(a), tuple(b))
        if check_y_witness(h, w):
            found.append(w)
    return found


def y_witness(h: SimpleGraph, x0_size: int, clique_size: int) -> Optional[YWitness]:
    found = y_witnesses(h, x0_size, clique_size)
    return found[0] if found else None


def _complete_bipartition(g: SimpleGraph, comp: list[int]) -> Optional[tuple[list[int], list[int]]]:
    """Sides of ``g[comp]`` if it is complete bipartite with both sides nonempty."""
    start = comp[0]
    colour = {start: 0}
    stack = [start]
    cset = set(comp)
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in cset:
                continue
            if w not in colour:
                colour[w] = 1 - colour[u]
                stack.append(w)
            elif colour[w] == colour[u]:
                return None
    a = sorted(v for v in comp if colour[v] == 0)
    b = sorted(v for v in comp if colour[v] == 1)
    if not a or not b:
        return None
    bset = set(b)
    if any(g.neighbors(v) & cset != bset for v in a):
        return None
    return a, b


def check_y_witness(h: SimpleGraph, w: YWitness) -> bool:
    x0, x1, x2 = set(w.x0), set(w.x1), set(w.x2)
    if x0 & x1 or x0 & x2 or x1 & x2 or (x0 | x1 | x2) != set(h.active):
        return False
    if len(x1) != len(x2) or not x1:
        return False
    if not h.is_independent(x0) or not h.is_clique(x1) or not h.is_clique(x2):
        return False
    for v in x1:
        if h.neighbors(v) & x2:
            return False
    return all(x1 | x2 <= h.neighbors(v) for v in x0)


def big_sets(g: Multigraph, k: int) -> list[BigSet]:
    """All independent sets of size ``n - 2k + 1`` in ``g`` (assumed in D_k).

    Each one is the complement of the neighbourhood of a vertex with exactly
    ``2k - 1`` distinct neighbours, so only those candidates are tested.
    """
    n = g.n
    size = n - 2 * k + 1
    if size < 1:
        return []
    h = underlying_simple(g)
    found: dict[tuple[int, ...], BigSet] = {}
    for v in range(n):
        if h.degree(v) != 2 * k - 1:
            continue
        cand = tuple(sorted(set(range(n)) - h.neighbors(v)))
        if cand in found or len(cand) != size:
            continue
        if h.is_independent(cand):
            found[cand] = BigSet(cand)
    return [found[key] for key in sorted(found)]


def is_extremal(g: Multigraph, k: int) -> bool:
    return bool(big_sets(g, k))


def superstars(f: SimpleGraph) -> list[Superstar]:
    """Superstars of ``f``, one per admissible center.

    A leaf must have ``{center}`` as its whole neighbourhood, and any such
    vertex left outside the star would be isolated once the star is removed,
    so the leaf set is forced to be all pendant neighbours of the center.
    """
    pendants: dict[int, list[int]] = {}
    for u in f.vertices():
        nb = f.neighbors(u)
        if len(nb) == 1:
            (c,) = nb
            pendants.setdefault(c, []).append(u)
    found = []
    for center in sorted(pendants):
        leaves = tuple(sorted(pendants[center]))
        rest = f.active - set(leaves) - {center}
        if has_perfect_matching(f, rest):
            found.append(Superstar(center, leaves))
    return found


def is_superstar(f: SimpleGraph, center: int, leaves: Iterable[int]) -> bool:
    """Literal definition check, used as the reference for :func:`superstars`."""
    leaves = set(leaves)
    if center not in f.active or center in leaves or not leaves or not leaves <= f.active:
        return False
    if any(f.neighbors(v) != {center} for v in leaves):
        return False
    return has_perfect_matching(f, f.active - leaves - {center})


def _strong_edges_form_star_or_triangle(strong: list[tuple[int, int]]) -> bool:
    if not strong:
        return True
    common = set(strong[0])
    for e in strong[1:]:
        common &= set(e)
    if common:
        return True
    verts = {v for e in strong for v in e}
    return len(strong) == 3 and len(verts) == 3


def _k33_like(g: Multigraph) -> Optional[tuple[int, ...]]:
    """3-set ``A`` such that the other vertices form an independent set, each
    joined by single edges to exactly ``A``. Edges inside ``A`` are free."""
    if not g.is_loopless() or g.n < 4:
        return None
    for v in range(g.n):
        nb = g.neighbors(v)
        if len(nb) != 3:
            continue
        a = tuple(sorted(nb))
        others = [u for u in range(g.n) if u not in nb]
        if all(
            g.neighbors(u) == nb and all(g.multiplicity(u, x) == 1 for x in a)
            for u in others
        ):
            return a
    return None


def _is_complete(h: SimpleGraph) -> bool:
    n = h.order()
    return all(h.degree(v) == n - 1 for v in h.vertices())


def dirac_class(g: Multigraph) -> Optional[str]:
    """First matching class among A-E for a loopless multigraph."""
    if not g.is_loopless():
        return None
    h = underlying_simple(g)
    n = g.n
    strong = g.strong_pairs()
    if n == 4 and _is_complete(h) and _strong_edges_form_star_or_triangle(strong):
        return "A"
    if n == 5 and _is_complete(h) and not strong:
        return "B"
    if n == 5 and h.edge_count() == 9:
        (x, y) = next(
            (u, v) for u, v in combinations(range(5), 2) if not h.has_edge(u, v)
        )
        if all(x not in e and y not in e for e in strong):
            return "C"
    if is_multigraph_wheel(g) is not None:
        return "D"
    if _k33_like(g) is not None:
        return "E"
    return None


def _is_forest(h: SimpleGraph) -> bool:
    return h.edge_count() == h.order() - len(h.components())


def lovasz_class(g: Multigraph) -> Optional[int]:
    """First matching class among 1-4 (no degree precondition enforced)."""
    if g.n == 5 and g.is_simple() and _is_complete(underlying_simple(g)):
        return 1
    if is_multigraph_wheel(g) is not None:
        return 2
    if _k33_like(g) is not None:
        return 3
    looped = [v for v in range(g.n) if g.loop_count(v)]
    if len(looped) > 1:
        return None
    candidates = looped if looped else range(g.n)
    for x in candidates:
        rest, _ = g.delete_vertices([x])
        if rest.is_simple() and _is_forest(underlying_simple(rest)):
            return 4
    return None


def is_isomorphic_brute(a: SimpleGraph, b: SimpleGraph) -> bool:
    """Permutation search; test helper for graphs with at most ~9 vertices."""
    va, vb = a.vertices(), b.vertices()
    if len(va) != len(vb) or a.edge_count() != b.edge_count():
        return False
    if sorted(a.degree(v) for v in va) != sorted(b.degree(v) for v in vb):
        return False
    edges = a.edges()
    for perm in permutations(vb):
        m = dict(zip(va, perm))
        if all(b.has_edge(m[u], m[v]) for u, v in edges):
            return True
    return False
