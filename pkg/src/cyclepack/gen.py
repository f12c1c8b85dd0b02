"""Graph constructors: named graphs, the obstruction families, and seeded
random members of D_k for fuzzing.

Every constructor is deterministic in its arguments (including ``seed``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import Multigraph, SimpleGraph

FAMILY_CLASSES = ("A", "B_I", "B_II", "C_I", "C_II", "D_I", "D_II", "E", "F")


class FamilyParameterError(ValueError):
    pass


def _clique_edges(vs) -> list[tuple[int, int, int]]:
    return [(u, v, 1) for u, v in combinations(vs, 2)]


def _join_edges(a, b) -> list[tuple[int, int, int]]:
    return [(u, v, 1) for u in a for v in b]


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, _clique_edges(range(n)))


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise FamilyParameterError("a cycle needs at least 3 vertices")
    return Multigraph(n, [(i, (i + 1) % n, 1) for i in range(n)])


def wheel_graph(rim: int, strong_spokes=()) -> Multigraph:
    """Hub 0 joined to the rim cycle 1..rim; listed spokes get multiplicity 2."""
    if rim < 3:
        raise FamilyParameterError("a wheel needs a rim of at least 3 vertices")
    strong = set(strong_spokes)
    edges = [(0, i, 2 if i in strong else 1) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1, 1) for i in range(1, rim + 1)]
    return Multigraph(rim + 1, edges)


def y_edges(x0, x1, x2) -> list[tuple[int, int, int]]:
    return _join_edges(x0, list(x1) + list(x2)) + _clique_edges(x1) + _clique_edges(x2)


def y_multigraph(h: int, t: int) -> Multigraph:
    x0 = range(h)
    x1 = range(h, h + t)
    x2 = range(h + t, h + 2 * t)
    return Multigraph(h + 2 * t, y_edges(x0, x1, x2))


def y_graph(h: int, t: int) -> SimpleGraph:
    """Independent ``h``-set (ids ``0..h-1``) joined to two disjoint ``t``-cliques."""
    if h < 0 or t < 1:
        raise FamilyParameterError("need h >= 0 and t >= 1")
    g = y_multigraph(h, t)
    return SimpleGraph(g.n, [(u, v) for u, v, _ in g.pairs()])


def independent_join_clique(m: int, c: int) -> Multigraph:
    """Independent ``m``-set joined to a ``c``-clique (ids ``0..m-1`` independent)."""
    return Multigraph(m + c, _join_edges(range(m), range(m, m + c)) + _clique_edges(range(m, m + c)))


def triangle_family(s: int, t: int) -> Multigraph:
    """Independent ``(s+t)``-set joined to disjoint cliques of sizes ``2s`` and ``2t``."""
    h = s + t
    x1 = range(h, h + 2 * s)
    x2 = range(h + 2 * s, h + 2 * s + 2 * t)
    return Multigraph(h + 2 * s + 2 * t, y_edges(range(h), x1, x2))


@dataclass(frozen=True)
class FamilySpec:
    """Parameters for one obstruction family.

    Which fields matter depends on ``cls``:

    - ``A``: ``k``, ``n``, ``alpha_prime``
    - ``B_I``: ``k_prime`` (odd), ``alpha_prime``
    - ``B_II``: ``alpha_prime`` (>= 1; then ``k = alpha_prime + 2``)
    - ``C_I``: ``k``, ``n``, ``strong_density``
    - ``C_II``: ``k``, ``n`` (``2k <= n <= 4k - 3``), ``strong_density``,
      ``extra_strong`` for strong edges inside the remainder
    - ``D_I``: ``k_prime`` (odd), ``alpha_prime`` (>= 1), ``leaves``
    - ``D_II``: ``k_prime`` (odd), ``alpha_prime`` (>= 1)
    - ``E``: ``rim``, ``strong_density``
    - ``F``: ``alpha_prime`` (>= 1; then ``k = alpha_prime + 2``)

    ``seed`` drives optional random choices and a vertex relabelling
    (disabled with ``shuffle=False``).
    """

    cls: str
    k: Optional[int] = None
    k_prime: Optional[int] = None
    alpha_prime: int = 0
    n: Optional[int] = None
    rim: Optional[int] = None
    leaves: int = 2
    strong_density: float = 0.5
    extra_strong: bool = False
    seed: int = 0
    shuffle: bool = True

    def resolved_k(self) -> int:
        if self.cls in ("A", "C_I", "C_II"):
            return self._need("k")
        if self.cls == "E":
            return 2
        if self.cls in ("B_II", "F"):
            return self.alpha_prime + 2
        return self._need("k_prime") + self.alpha_prime

    def _need(self, name: str) -> int:
        value = getattr(self, name)
        if value is None:
            raise FamilyParameterError(f"class {self.cls} needs {name}")
        return value

    def validate(self) -> None:
        c = self.cls
        if c not in FAMILY_CLASSES:
            raise FamilyParameterError(f"unknown class {c!r}; expected one of {FAMILY_CLASSES}")
        if not 0.0 <= self.strong_density <= 1.0:
            raise FamilyParameterError("strong_density must lie in [0, 1]")
        if self.alpha_prime < 0:
            raise FamilyParameterError("alpha_prime must be nonnegative")
        if c == "A":
            k, n = self._need("k"), self._need("n")
            if k < 2 or n < 2 * k or n + self.alpha_prime >= 3 * k or 2 * self.alpha_prime > n:
                raise FamilyParameterError(
                    "A needs k >= 2, n >= 2k, n + alpha_prime < 3k and 2*alpha_prime <= n"
                )
        elif c in ("B_I", "D_I", "D_II"):
            kp = self._need("k_prime")
            if kp < 1 or kp % 2 == 0:
                raise FamilyParameterError(f"{c} needs k_prime odd and positive")
            if kp + self.alpha_prime < 2:
                raise FamilyParameterError(f"{c} needs k = k_prime + alpha_prime >= 2")
            if c != "B_I" and self.alpha_prime < 1:
                raise FamilyParameterError(f"{c} needs alpha_prime >= 1")
            if c == "D_I" and not 1 <= self.leaves <= kp + 1:
                raise FamilyParameterError("D_I needs 1 <= leaves <= k_prime + 1")
        elif c in ("B_II", "F"):
            if self.alpha_prime < 1:
                raise FamilyParameterError(f"{c} needs alpha_prime >= 1 (k_prime = 2 < k)")
        elif c == "C_I":
            k, n = self._need("k"), self._need("n")
            if k < 2 or n < 2 * k:
                raise FamilyParameterError("C_I needs k >= 2 and n >= 2k")
        elif c == "C_II":
            k, n = self._need("k"), self._need("n")
            if k < 2 or not 2 * k <= n <= 4 * k - 3:
                raise FamilyParameterError("C_II needs k >= 2 and 2k <= n <= 4k - 3")
        elif c == "E":
            if self._need("rim") < 3:
                raise FamilyParameterError("E needs rim >= 3")


def _matching_block(start: int, pairs: int) -> tuple[list[int], list[tuple[int, int, int]]]:
    verts = list(range(start, start + 2 * pairs))
    strong = [(verts[2 * i], verts[2 * i + 1], 2) for i in range(pairs)]
    return verts, strong


def _complete_except(n: int, missing: set[frozenset[int]]) -> list[tuple[int, int, int]]:
    return [(u, v, 1) for u, v in combinations(range(n), 2) if frozenset((u, v)) not in missing]


def _upgrade(edges: list[tuple[int, int, int]], strong: list[tuple[int, int, int]]) -> list[tuple[int, int, int]]:
    mult = {frozenset((u, v)): m for u, v, m in edges}
    for u, v, m in strong:
        mult[frozenset((u, v))] = max(mult.get(frozenset((u, v)), 0), m)
    return [(min(p), max(p), m) for p, m in mult.items()]


def _build(spec: FamilySpec, rng: random.Random) -> Multigraph:
    c = spec.cls
    a = spec.alpha_prime
    if c == "A":
        n = spec.n
        edges = _clique_edges(range(n))
        strong = [(2 * i, 2 * i + 1, 2) for i in range(a)]
        return Multigraph(n, _upgrade(edges, strong))

    if c in ("B_I", "B_II"):
        if c == "B_I":
            kp = spec.k_prime
            core = y_multigraph(kp, kp)
        else:
            core = wheel_graph(5)
        base = core.n
        w, strong = _matching_block(base, a)
        n = base + 2 * a
        edges = [(u, v, 1) for u, v, _ in core.pairs()]
        edges += _join_edges(range(base), w) + _clique_edges(w)
        return Multigraph(n, _upgrade(edges, strong))

    if c == "C_I":
        k, n = spec.k, spec.n
        m = n - 2 * k + 1
        clique = list(range(m, n))
        g = independent_join_clique(m, 2 * k - 1)
        strong = [
            (u, v, 2) for u, v in combinations(clique, 2) if rng.random() < spec.strong_density
        ]
        return Multigraph(n, _upgrade([(u, v, 1) for u, v, _ in g.pairs()], strong))

    if c == "C_II":
        k, n = spec.k, spec.n
        m = n - 2 * k + 1
        i1 = list(range(m))
        i2 = list(range(m, 2 * m))
        rest = list(range(2 * m, n))
        hub = rest[0]
        missing = {frozenset(p) for grp in (i1, i2) for p in combinations(grp, 2)}
        edges = _complete_except(n, missing)
        strong = [(v, hub, 2) for v in i1 + i2 if rng.random() < spec.strong_density]
        if spec.extra_strong:
            strong += [
                (u, v, 2) for u, v in combinations(rest, 2) if hub not in (u, v) and rng.random() < 0.5
            ]
        return Multigraph(n, _upgrade(edges, strong))

    if c in ("D_I", "D_II"):
        kp = spec.k_prime
        s = spec.leaves if c == "D_I" else 2
        # Layout: X0-part, X1, X2, center, leaves, matched pairs.
        x0_size = kp + 1 - s if c == "D_I" else kp - 1
        x0 = list(range(x0_size))
        x1 = list(range(x0_size, x0_size + kp))
        x2 = list(range(x0_size + kp, x0_size + 2 * kp))
        center = x0_size + 2 * kp
        leaves = list(range(center + 1, center + 1 + s))
        w, strong = _matching_block(center + 1 + s, a - 1)
        n = w[-1] + 1 if w else center + 1 + s
        missing = {frozenset(p) for p in combinations(x0, 2)}
        missing |= {frozenset((u, v)) for u in x1 for v in x2}
        if c == "D_I":
            missing |= {frozenset(p) for p in combinations(x0 + leaves, 2)}
        else:
            missing |= {frozenset((u, v)) for u in leaves for v in x0}
        edges = _complete_except(n, missing)
        strong += [(center, v, 2) for v in leaves]
        return Multigraph(n, _upgrade(edges, strong))

    if c == "E":
        rim = spec.rim
        spokes = [i for i in range(1, rim + 1) if rng.random() < spec.strong_density]
        return wheel_graph(rim, spokes)

    if c == "F":
        ring = list(range(5))
        w, strong = _matching_block(5, a)
        extra = 5 + 2 * a
        n = extra + 1
        strong.append((w[1], extra, 2))
        missing = {frozenset((i, j)) for i, j in combinations(ring, 2) if (j - i) % 5 not in (1, 4)}
        edges = _complete_except(n, missing)
        return Multigraph(n, _upgrade(edges, strong))

    raise FamilyParameterError(f"unknown class {c!r}")


def make_family(spec: FamilySpec) -> Multigraph:
    """Loopless member of D_k realising the obstruction named by ``spec.cls``."""
    spec.validate()
    rng = random.Random(f"{spec.cls}:{spec.seed}")
    g = _build(spec, rng)
    if spec.shuffle:
        perm = list(range(g.n))
        rng.shuffle(perm)
        g = g.relabel(perm)
    return g


def random_multigraph_in_Dk(
    n: int,
    k: int,
    strong_density: float,
    seed: int,
    edge_prob: Optional[float] = None,
    min_degree: Optional[int] = None,
) -> Multigraph:
    """Seeded loopless multigraph with every simple degree at least ``2k - 1``.

    A G(n, p) sample (``p`` drawn from the seed unless given) is repaired by
    joining each deficient vertex to non-neighbours of least degree; each
    edge is then doubled with probability ``strong_density``. ``min_degree``
    raises the degree floor above ``2k - 1``.
    """
    target = 2 * k - 1 if min_degree is None else max(min_degree, 2 * k - 1)
    if k < 1 or n < 2 * k or target > n - 1:
        raise FamilyParameterError(f"need k >= 1, n >= 2k and degree floor <= n-1, got n={n}, k={k}")
    if not 0.0 <= strong_density <= 1.0:
        raise FamilyParameterError("strong_density must lie in [0, 1]")
    rng = random.Random(seed)
    p = rng.random() if edge_prob is None else edge_prob
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            nbrs[u].add(v)
            nbrs[v].add(u)
    while True:
        short = [v for v in range(n) if len(nbrs[v]) < target]
        if not short:
            break
        v = min(short, key=lambda x: (len(nbrs[x]), x))
        options = [u for u in range(n) if u != v and u not in nbrs[v]]
        low = min(len(nbrs[u]) for u in options)
        u = rng.choice([x for x in options if len(nbrs[x]) == low])
        nbrs[u].add(v)
        nbrs[v].add(u)
    edges = []
    for u in range(n):
        for v in sorted(nbrs[u]):
            if u < v:
                edges.append((u, v, 2 if rng.random() < strong_density else 1))
    return Multigraph(n, edges)


def sprinkle_loops(g: Multigraph, loop_density: float, seed: int) -> Multigraph:
    """Add one loop at each vertex independently with probability ``loop_density``."""
    rng = random.Random(seed)
    loops = [(v, v, 1) for v in range(g.n) if rng.random() < loop_density]
    return g.with_edges(loops)
