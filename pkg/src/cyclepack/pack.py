"""Exact vertex-disjoint cycle packing.

Loops are taken first: every vertex carrying a loop is a 1-cycle, and any
packing can swap a cycle through such a vertex for its loop. The rest goes to
an exhaustive search over 2-cycles (strong pairs) and chordless cycles,
backed by a compiled kernel when it is available.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import _search
from ._search import BudgetExceeded
from .core import Multigraph, loop_vertices

try:
    if os.environ.get("CYCLEPACK_PURE_PYTHON"):
        raise ImportError("pure Python kernel requested")
    from ._search_ext import MAX_VERTICES as _EXT_LIMIT, search as _ext_search
except ImportError:
    _ext_search = None
    _EXT_LIMIT = 0

KERNEL = "compiled" if _ext_search is not None else "python"

DEFAULT_BUDGET = 5_000_000


class SearchBudgetExceeded(RuntimeError):
    """The search hit its expansion budget before reaching a definitive answer."""

    def __init__(self, budget: int) -> None:
        super().__init__(f"no answer within {budget} node expansions")
        self.budget = budget


@dataclass(frozen=True)
class CyclePacking:
    """Vertex sequences of disjoint cycles.

    A 1-element cycle is a loop, a 2-element cycle a strong pair, and longer
    ones are simple cycles listed in traversal order.
    """

    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def lines(self) -> list[str]:
        return [" ".join(str(v) for v in c) for c in self.cycles]


def _kernel_search(n: int, adj: list[int], strong: list[int], need: int, budget: int, kernel: Optional[str]):
    use_ext = kernel != "python" and _ext_search is not None and n <= _EXT_LIMIT
    if kernel == "compiled" and not use_ext:
        raise RuntimeError("compiled kernel unavailable for this input")
    if use_ext:
        return _ext_search(n, adj, strong, need, budget)
    limit = sys.getrecursionlimit()
    wanted = 20 * n + 1000
    if limit < wanted:
        sys.setrecursionlimit(wanted)
    return _search.search(n, adj, strong, need, budget)


def find_disjoint_cycles(
    g: Multigraph,
    k: int,
    budget: int = DEFAULT_BUDGET,
    kernel: Optional[str] = None,
) -> Optional[CyclePacking]:
    """Find ``k`` vertex-disjoint cycles in ``g``.

    Returns the packing, or ``None`` when the search space was exhausted
    without finding one. Raises :class:`SearchBudgetExceeded` if ``budget``
    node expansions were not enough to decide. ``kernel`` forces
    ``"python"`` or ``"compiled"``; by default the compiled kernel is used
    whenever it is importable and the graph fits.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    looped = sorted(loop_vertices(g))
    if len(looped) >= k:
        return CyclePacking(tuple((v,) for v in looped[:k]))
    need = k - len(looped)
    rest, id_map = g.delete_vertices(looped)
    n = rest.n
    adj = [0] * n
    strong = [0] * n
    for u, v, m in rest.pairs():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if m >= 2:
            strong[u] |= 1 << v
            strong[v] |= 1 << u
    try:
        found, cycles, _ = _kernel_search(n, adj, strong, need, budget, kernel)
    except BudgetExceeded:
        raise SearchBudgetExceeded(budget) from None
    if not found:
        return None
    out = [(v,) for v in looped]
    out += [tuple(id_map[x] for x in c) for c in cycles]
    return CyclePacking(tuple(out))


def max_disjoint_cycles(g: Multigraph, budget: int = DEFAULT_BUDGET) -> int:
    """Largest ``k`` for which a packing exists (exhaustive)."""
    k = 0
    while find_disjoint_cycles(g, k + 1, budget) is not None:
        k += 1
    return k


def verify_packing(g: Multigraph, k: int, packing: CyclePacking) -> bool:
    if len(packing.cycles) != k:
        return False
    used: set[int] = set()
    for cyc in packing.cycles:
        if not cyc or len(set(cyc)) != len(cyc):
            return False
        if any(not 0 <= v < g.n for v in cyc):
            return False
        if used & set(cyc):
            return False
        used.update(cyc)
        if len(cyc) == 1:
            if g.loop_count(cyc[0]) < 1:
                return False
        elif len(cyc) == 2:
            if g.multiplicity(cyc[0], cyc[1]) < 2:
                return False
        else:
            for i, v in enumerate(cyc):
                if g.multiplicity(v, cyc[(i + 1) % len(cyc)]) < 1:
                    return False
    return True
