"""Maximum cardinality matching in general simple graphs.

:func:`max_matching` is Edmonds' blossom algorithm (array form: BFS from one
exposed vertex at a time, odd cycles contracted through a ``base`` array).
It runs in O(n^3). :func:`brute_max_matching` is an exhaustive reference used
to check it.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from typing import Optional

from .core import SimpleGraph

Edge = tuple[int, int]

BRUTE_EDGE_LIMIT = 24


class MatchingSizeError(ValueError):
    pass


def _as_pairs(mate: dict[int, int]) -> frozenset[Edge]:
    return frozenset((u, v) for u, v in mate.items() if u < v)


def _augment_from(
    root: int,
    order: list[int],
    adj: dict[int, list[int]],
    mate: dict[int, int],
) -> bool:
    """Grow an alternating tree from ``root``; augment and return True on success."""
    parent: dict[int, int] = {}
    base = {v: v for v in order}
    used = {root}
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if a not in mate:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: set[int]) -> None:
        while base[v] != b:
            blossom.add(base[v])
            blossom.add(base[mate[v]])
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if base[v] == base[w] or mate.get(v) == w:
                continue
            if w == root or (w in mate and mate[w] in parent):
                # v and w are both even: contract the odd cycle through them.
                b = lca(v, w)
                blossom: set[int] = set()
                mark_path(v, b, w, blossom)
                mark_path(w, b, v, blossom)
                for x in order:
                    if base[x] in blossom:
                        base[x] = b
                        if x not in used:
                            used.add(x)
                            queue.append(x)
            elif w not in parent:
                parent[w] = v
                if w not in mate:
                    # Exposed vertex reached: flip the path back to the root.
                    while w is not None:
                        pv = parent[w]
                        nxt = mate.get(pv)
                        mate[w] = pv
                        mate[pv] = w
                        w = nxt
                    return True
                m = mate[w]
                used.add(m)
                queue.append(m)
    return False


def max_matching(h: SimpleGraph, active: Optional[Iterable[int]] = None) -> frozenset[Edge]:
    """Maximum matching of ``h`` (or of its subgraph induced by ``active``).

    Edges are returned as ``(u, v)`` with ``u < v``. Vertices are scanned in
    ascending order so the result is a deterministic function of the input.
    """
    verts = sorted(h.active if active is None else set(active) & h.active)
    vset = set(verts)
    adj = {v: sorted(h.neighbors(v) & vset) for v in verts}
    mate: dict[int, int] = {}
    # Greedy warm start; every later augmentation goes through the blossom search.
    for v in verts:
        if v in mate:
            continue
        for w in adj[v]:
            if w not in mate:
                mate[v] = w
                mate[w] = v
                break
    for v in verts:
        if v not in mate and adj[v]:
            _augment_from(v, verts, adj, mate)
    return _as_pairs(mate)


def matching_number(h: SimpleGraph, active: Optional[Iterable[int]] = None) -> int:
    return len(max_matching(h, active))


def has_perfect_matching(h: SimpleGraph, active: Optional[Iterable[int]] = None) -> bool:
    verts = h.active if active is None else set(active) & h.active
    if len(verts) % 2:
        return False
    return 2 * len(max_matching(h, verts)) == len(verts)


def brute_max_matching(h: SimpleGraph, active: Optional[Iterable[int]] = None) -> frozenset[Edge]:
    """Exhaustive branch-and-bound over edges; refuses more than 24 edges."""
    sub = h if active is None else h.induced(active)
    edges = sub.edges()
    if len(edges) > BRUTE_EDGE_LIMIT:
        raise MatchingSizeError(
            f"brute-force matching limited to {BRUTE_EDGE_LIMIT} edges, got {len(edges)}"
        )
    best: list[Edge] = []
    cur: list[Edge] = []
    cap = sub.order() // 2

    def go(i: int, used: set[int]) -> None:
        nonlocal best
        if len(cur) > len(best):
            best = list(cur)
        if len(best) == cap or len(cur) + (len(edges) - i) <= len(best):
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u in used or v in used:
                continue
            cur.append((u, v))
            used.add(u)
            used.add(v)
            go(j + 1, used)
            cur.pop()
            used.discard(u)
            used.discard(v)
            if len(best) == cap:
                return

    go(0, set())
    return frozenset(best)


def is_matching(h: SimpleGraph, edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not h.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def find_augmenting_path(h: SimpleGraph, edges: Iterable[Edge]) -> Optional[list[int]]:
    """Search every alternating path from every exposed vertex (exponential).

    Only meant as a test-side certificate check on small graphs.
    """
    mate: dict[int, int] = {}
    for u, v in edges:
        mate[u] = v
        mate[v] = u
    exposed = [v for v in h.vertices() if v not in mate]
    exposed_set = set(exposed)

    def extend(path: list[int], on_path: set[int]) -> Optional[list[int]]:
        last = path[-1]
        for w in sorted(h.neighbors(last)):
            if w in on_path:
                continue
            if w in exposed_set and len(path) % 2 == 1:
                return path + [w]
            if w in mate and mate[w] not in on_path:
                m = mate[w]
                found = extend(path + [w, m], on_path | {w, m})
                if found:
                    return found
        return None

    for s in exposed:
        found = extend([s], {s})
        if found:
            return found
    return None
