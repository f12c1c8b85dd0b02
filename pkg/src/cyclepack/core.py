"""Multigraph and simple-graph containers plus the derived views used by the
decision procedures.

Vertices are dense integers ``0..n-1``. Derived simple graphs keep the
original id space and carry an explicit ``active`` vertex set instead of
relabelling, so anything computed on them maps straight back to the
multigraph they came from.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import Optional


class GraphError(ValueError):
    """Raised for malformed graph input (bad vertex ids, multiplicities)."""


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Multigraph:
    """Undirected multigraph with loops.

    ``loops[v]`` is the number of loops at ``v`` and ``mult[(u, v)]`` (with
    ``u < v``) the number of parallel edges between ``u`` and ``v``. Zero
    counts are never stored. Instances are treated as immutable.
    """

    __slots__ = ("n", "_loops", "_mult", "_nbrs")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int, int]] = (),
    ) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        loops: dict[int, int] = {}
        mult: dict[tuple[int, int], int] = {}
        for u, v, m in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if m <= 0:
                raise GraphError(f"multiplicity must be positive, got {m}")
            if u == v:
                loops[u] = loops.get(u, 0) + m
            else:
                key = _pair(u, v)
                mult[key] = mult.get(key, 0) + m
        self._loops = loops
        self._mult = mult
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in mult:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._nbrs = tuple(frozenset(s) for s in nbrs)

    @classmethod
    def from_counts(
        cls,
        n: int,
        loops: Optional[Mapping[int, int]] = None,
        mult: Optional[Mapping[tuple[int, int], int]] = None,
    ) -> "Multigraph":
        edges = [(v, v, c) for v, c in (loops or {}).items() if c]
        edges += [(u, v, m) for (u, v), m in (mult or {}).items() if m]
        return cls(n, edges)

    @property
    def loops(self) -> Mapping[int, int]:
        return dict(self._loops)

    @property
    def mult(self) -> Mapping[tuple[int, int], int]:
        return dict(self._mult)

    def loop_count(self, v: int) -> int:
        return self._loops.get(v, 0)

    def multiplicity(self, u: int, v: int) -> int:
        if u == v:
            return self._loops.get(u, 0)
        return self._mult.get(_pair(u, v), 0)

    def neighbors(self, v: int) -> frozenset[int]:
        """Distinct neighbours of ``v`` other than ``v`` itself."""
        self._check_vertex(v)
        return self._nbrs[v]

    def pairs(self) -> list[tuple[int, int, int]]:
        """Non-loop pairs as sorted ``(u, v, multiplicity)`` triples."""
        return [(u, v, m) for (u, v), m in sorted(self._mult.items())]

    def strong_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for (u, v), m in sorted(self._mult.items()) if m >= 2]

    def is_loopless(self) -> bool:
        return not self._loops

    def is_simple(self) -> bool:
        return not self._loops and all(m == 1 for m in self._mult.values())

    def with_edges(self, edges: Iterable[tuple[int, int, int]]) -> "Multigraph":
        """Return a copy with extra edges added (multiplicities summed)."""
        base = [(v, v, c) for v, c in self._loops.items()]
        base += [(u, v, m) for (u, v), m in self._mult.items()]
        return Multigraph(self.n, base + list(edges))

    def relabel(self, perm: list[int]) -> "Multigraph":
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        edges = [(perm[v], perm[v], c) for v, c in self._loops.items()]
        edges += [(perm[u], perm[v], m) for (u, v), m in self._mult.items()]
        return Multigraph(self.n, edges)

    def induced(self, keep: Iterable[int]) -> tuple["Multigraph", list[int]]:
        """Induced sub-multigraph on ``keep``, renumbered densely.

        Returns the subgraph and ``id_map`` with ``id_map[new] = old``.
        """
        id_map = sorted(set(keep))
        for v in id_map:
            self._check_vertex(v)
        index = {old: new for new, old in enumerate(id_map)}
        edges = [(index[v], index[v], c) for v, c in self._loops.items() if v in index]
        edges += [
            (index[u], index[v], m)
            for (u, v), m in self._mult.items()
            if u in index and v in index
        ]
        return Multigraph(len(id_map), edges), id_map

    def delete_vertices(self, removed: Iterable[int]) -> tuple["Multigraph", list[int]]:
        removed = set(removed)
        return self.induced(v for v in range(self.n) if v not in removed)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self.n == other.n
            and self._loops == other._loops
            and self._mult == other._mult
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._loops.items()), frozenset(self._mult.items())))

    def __repr__(self) -> str:
        return (
            f"Multigraph(n={self.n}, loops={len(self._loops)}, "
            f"pairs={len(self._mult)}, strong={len(self.strong_pairs())})"
        )


class SimpleGraph:
    """Simple graph on the id space ``0..n-1`` restricted to ``active``.

    Adjacency is stored for active vertices only; inactive ids are simply
    absent from the graph.
    """

    __slots__ = ("n", "active", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        active: Optional[Iterable[int]] = None,
    ) -> None:
        self.n = n
        self.active = frozenset(range(n)) if active is None else frozenset(active)
        for v in self.active:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for n={n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"simple graph cannot have loop at {u}")
            if u not in self.active or v not in self.active:
                raise GraphError(f"edge ({u}, {v}) leaves the active vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[frozenset[int], ...], active: frozenset[int]) -> "SimpleGraph":
        g = cls.__new__(cls)
        g.n = n
        g.active = active
        g._adj = adj
        return g

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def vertices(self) -> list[int]:
        return sorted(self.active)

    def order(self) -> int:
        return len(self.active)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in sorted(self.active) for v in sorted(self._adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(self._adj[v]) for v in self.active) // 2

    def induced(self, keep: Iterable[int]) -> "SimpleGraph":
        keep = frozenset(keep) & self.active
        adj = tuple(
            (self._adj[v] & keep) if v in keep else frozenset() for v in range(self.n)
        )
        return SimpleGraph._from_adj(self.n, adj, keep)

    def without(self, removed: Iterable[int]) -> "SimpleGraph":
        return self.induced(self.active - frozenset(removed))

    def complement(self) -> "SimpleGraph":
        act = self.active
        adj = tuple(
            (act - self._adj[v] - {v}) if v in act else frozenset() for v in range(self.n)
        )
        return SimpleGraph._from_adj(self.n, adj, act)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by least vertex."""
        seen: set[int] = set()
        comps = []
        for s in sorted(self.active):
            if s in seen:
                continue
            seen.add(s)
            stack = [s]
            comp = []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(not (self._adj[v] & vs) for v in vs)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(vs - {v} <= self._adj[v] for v in vs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.active == other.active and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self.active, self._adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, active={len(self.active)}, edges={self.edge_count()})"


class StrongEdgeGraph(SimpleGraph):
    """The graph of strong edges of a multigraph.

    Its active set is the set of vertices covered by at least one strong
    edge, so ``order()`` is the vertex count of that graph.
    """

    __slots__ = ()


def loop_vertices(g: Multigraph) -> frozenset[int]:
    return frozenset(v for v, c in g.loops.items() if c >= 1)


def underlying_simple(g: Multigraph) -> SimpleGraph:
    return SimpleGraph(g.n, ((u, v) for u, v, _ in g.pairs()))


def strong_edge_graph(g: Multigraph) -> StrongEdgeGraph:
    """Simple graph of the pairs with multiplicity >= 2 that avoid loop vertices."""
    looped = loop_vertices(g)
    edges = [(u, v) for u, v in g.strong_pairs() if u not in looped and v not in looped]
    covered = {x for e in edges for x in e}
    return StrongEdgeGraph(g.n, edges, covered)


def simple_degree(g: Multigraph, v: int) -> int:
    return len(g.neighbors(v))


def min_simple_degree(g: Multigraph) -> int:
    if g.n == 0:
        return 0
    return min(len(g.neighbors(v)) for v in range(g.n))


def in_Dk(g: Multigraph, k: int) -> bool:
    """Every vertex has at least ``2k - 1`` distinct neighbours."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return g.n > 0 and min_simple_degree(g) >= 2 * k - 1


def induced_simple(g: Multigraph, keep: Iterable[int]) -> SimpleGraph:
    """Underlying simple graph of ``g`` restricted to ``keep`` (original ids)."""
    return underlying_simple(g).induced(keep)
