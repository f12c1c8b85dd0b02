# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled packing kernel for graphs with at most 64 vertices.

Same search, same visiting order and same expansion accounting as
``cyclepack._search``; masks are 64-bit words and the failure memo is a C++
hash map.
"""

from libc.stdint cimport uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref

from cyclepack._search import BudgetExceeded

MAX_VERTICES = 64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef class _Kernel:
    cdef int n
    cdef uint64_t adj[64]
    cdef uint64_t strong[64]
    cdef long long budget
    cdef long long expansions
    cdef unordered_map[uint64_t, int] failed
    cdef vector[int] chosen_flat
    cdef vector[int] chosen_len

    def __cinit__(self, int n, adj, strong, long long budget):
        cdef int i
        self.n = n
        for i in range(64):
            self.adj[i] = 0
            self.strong[i] = 0
        for i in range(n):
            self.adj[i] = <uint64_t>adj[i]
            self.strong[i] = <uint64_t>strong[i]
        self.budget = budget
        self.expansions = 0

    cdef inline int tick(self) nogil:
        self.expansions += 1
        if self.expansions > self.budget:
            return -1
        return 0

    cdef uint64_t core(self, uint64_t mask) nogil:
        cdef bint changed = True
        cdef uint64_t rest
        cdef int v
        while changed:
            changed = False
            rest = mask
            while rest:
                v = lowbit(rest)
                rest &= rest - 1
                if self.strong[v] & mask:
                    continue
                if popcount(self.adj[v] & mask) <= 1:
                    mask &= ~((<uint64_t>1) << v)
                    changed = True
        return mask

    cdef int bound(self, uint64_t mask) nogil:
        cdef int r = popcount(mask)
        cdef int s = 0
        cdef uint64_t rest = mask
        cdef int v, c2
        while rest:
            v = lowbit(rest)
            rest &= rest - 1
            if self.strong[v] & mask:
                s += 1
        c2 = s // 2
        if r // 2 < c2:
            c2 = r // 2
        return c2 + (r - 2 * c2) // 3

    cdef void push(self, int* verts, int count):
        cdef int i
        for i in range(count):
            self.chosen_flat.push_back(verts[i])
        self.chosen_len.push_back(count)

    cdef void pop(self):
        cdef int count = self.chosen_len.back()
        self.chosen_len.pop_back()
        self.chosen_flat.resize(self.chosen_flat.size() - count)

    cdef int extend(self, int* path, int v, uint64_t mask, int need, int length,
                    int depth, int last, uint64_t pathmask, uint64_t forbid,
                    int* longer):
        cdef uint64_t cand = self.adj[last] & mask & ~pathmask & ~forbid
        cdef uint64_t nf
        cdef int w, r
        cdef bint closes
        while cand:
            w = lowbit(cand)
            cand &= cand - 1
            if self.tick() < 0:
                return -1
            if self.strong[w] & pathmask:
                continue
            closes = depth >= 2 and ((self.adj[w] >> v) & 1)
            if closes:
                if depth + 1 == length and path[1] < w:
                    path[depth] = w
                    self.push(path, depth + 1)
                    r = self.run(mask & ~(pathmask | ((<uint64_t>1) << w)), need - 1)
                    if r != 0:
                        return r
                    self.pop()
                continue
            if depth + 1 >= length:
                longer[0] = 1
                continue
            path[depth] = w
            nf = (forbid | self.adj[last]) if depth >= 2 else forbid
            r = self.extend(path, v, mask, need, length, depth + 1, w,
                            pathmask | ((<uint64_t>1) << w), nf, longer)
            if r != 0:
                return r
        return 0

    cdef int run(self, uint64_t mask, int need):
        cdef int path[64]
        cdef int pair[2]
        cdef int v, u, r, length, longer
        cdef uint64_t vbit, cand
        cdef unordered_map[uint64_t, int].iterator it
        if need <= 0:
            return 1
        mask = self.core(mask)
        if mask == 0 or self.bound(mask) < need:
            return 0
        it = self.failed.find(mask)
        if it != self.failed.end() and need >= deref(it).second:
            return 0
        if self.tick() < 0:
            return -1
        v = lowbit(mask)
        vbit = (<uint64_t>1) << v
        cand = self.strong[v] & mask
        while cand:
            u = lowbit(cand)
            cand &= cand - 1
            pair[0] = v
            pair[1] = u
            self.push(pair, 2)
            r = self.run(mask & ~vbit & ~((<uint64_t>1) << u), need - 1)
            if r != 0:
                return r
            self.pop()
        length = 3
        while length <= popcount(mask):
            longer = 0
            path[0] = v
            r = self.extend(path, v, mask, need, length, 1, v, vbit, 0, &longer)
            if r != 0:
                return r
            if not longer:
                break
            length += 1
        r = self.run(mask & ~vbit, need)
        if r != 0:
            return r
        it = self.failed.find(mask)
        if it == self.failed.end() or need < deref(it).second:
            self.failed[mask] = need
        return 0

    def solve(self, int need):
        cdef uint64_t full
        if self.n == 64:
            full = ~(<uint64_t>0)
        else:
            full = ((<uint64_t>1) << self.n) - 1
        r = self.run(full, need)
        if r < 0:
            raise BudgetExceeded
        cycles = []
        if r == 1:
            pos = 0
            for i in range(self.chosen_len.size()):
                count = self.chosen_len[i]
                cycles.append([self.chosen_flat[pos + j] for j in range(count)])
                pos += count
        return r == 1, cycles, self.expansions


def search(int n, adj, strong, int need, long long budget):
    if n > MAX_VERTICES:
        raise ValueError(f"compiled kernel handles at most {MAX_VERTICES} vertices")
    return _Kernel(n, adj, strong, budget).solve(need)
