"""Pure-Python packing kernel.

Vertices are ``0..n-1``; ``adj[v]`` and ``strong[v]`` are bitmasks of simple
neighbours and of neighbours joined by >= 2 parallel edges. The graph has no
loops here (the caller packs loops first).

Only minimal cycles are tried: 2-cycles on strong pairs, and chordless cycles
of length >= 3 that contain no strong pair. Any packing can be shrunk to one
made of such cycles, so the search stays exact. The compiled kernel in
``_search_ext.pyx`` implements the same search in the same order.
"""

from __future__ import annotations


class BudgetExceeded(Exception):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


class _Search:
    def __init__(self, n: int, adj: list[int], strong: list[int], budget: int) -> None:
        self.n = n
        self.adj = adj
        self.strong = strong
        self.budget = budget
        self.expansions = 0
        self.failed: dict[int, int] = {}
        self.chosen: list[list[int]] = []

    def tick(self) -> None:
        self.expansions += 1
        if self.expansions > self.budget:
            raise BudgetExceeded

    def core(self, mask: int) -> int:
        """Drop vertices that cannot lie on any cycle inside ``mask``."""
        adj, strong = self.adj, self.strong
        changed = True
        while changed:
            changed = False
            for v in _bits(mask):
                if strong[v] & mask:
                    continue
                if _popcount(adj[v] & mask) <= 1:
                    mask &= ~(1 << v)
                    changed = True
        return mask

    def bound(self, mask: int) -> int:
        r = _popcount(mask)
        s = 0
        for v in _bits(mask):
            if self.strong[v] & mask:
                s += 1
        c2 = min(s // 2, r // 2)
        return c2 + (r - 2 * c2) // 3

    def cycles_of_length(self, v: int, mask: int, length: int, found_any: list[bool]):
        """Chordless, strong-free cycles through ``v`` of exactly ``length``
        vertices, oriented so the second vertex is less than the last."""
        adj, strong = self.adj, self.strong
        path = [v]

        def extend(last: int, pathmask: int, forbid: int):
            depth = len(path)
            cand = adj[last] & mask & ~pathmask & ~forbid
            for w in _bits(cand):
                self.tick()
                if strong[w] & pathmask:
                    continue
                closes = depth >= 2 and (adj[w] >> v) & 1
                if closes:
                    if depth + 1 == length and path[1] < w:
                        yield path + [w]
                    continue
                if depth + 1 >= length:
                    found_any[0] = True
                    continue
                path.append(w)
                nxt_forbid = forbid | adj[last] if depth >= 2 else forbid
                yield from extend(w, pathmask | (1 << w), nxt_forbid)
                path.pop()

        yield from extend(v, 1 << v, 0)

    def run(self, mask: int, need: int) -> bool:
        if need <= 0:
            return True
        mask = self.core(mask)
        if mask == 0 or self.bound(mask) < need:
            return False
        if need >= self.failed.get(mask, need + 1):
            return False
        self.tick()
        v = (mask & -mask).bit_length() - 1
        vbit = 1 << v
        for u in _bits(self.strong[v] & mask):
            self.chosen.append([v, u])
            if self.run(mask & ~vbit & ~(1 << u), need - 1):
                return True
            self.chosen.pop()
        length = 3
        while length <= _popcount(mask):
            longer = [False]
            for cyc in self.cycles_of_length(v, mask, length, longer):
                cmask = 0
                for x in cyc:
                    cmask |= 1 << x
                self.chosen.append(cyc)
                if self.run(mask & ~cmask, need - 1):
                    return True
                self.chosen.pop()
            if not longer[0]:
                break
            length += 1
        if self.run(mask & ~vbit, need):
            return True
        prev = self.failed.get(mask)
        if prev is None or need < prev:
            self.failed[mask] = need
        return False


def search(
    n: int,
    adj: list[int],
    strong: list[int],
    need: int,
    budget: int,
) -> tuple[bool, list[list[int]], int]:
    """Return ``(found, cycles, expansions)``; raise BudgetExceeded when out of budget."""
    s = _Search(n, list(adj), list(strong), budget)
    found = s.run((1 << n) - 1, need)
    return found, (s.chosen if found else []), s.expansions
