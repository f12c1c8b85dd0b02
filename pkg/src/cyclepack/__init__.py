"""Decide whether a multigraph has k vertex-disjoint cycles.

Loopless multigraphs whose vertices all have at least ``2k - 1`` distinct
neighbours are classified against a complete list of obstructions; the
exact packer in :mod:`cyclepack.pack` supplies certificates and serves as an
independent oracle.
"""

from .classify import Blocker, Decision, Verdict, blockers, decide
from .core import Multigraph, SimpleGraph, in_Dk
from .graphio import format_graph, parse_graph
from .pack import KERNEL, CyclePacking, find_disjoint_cycles, verify_packing

__all__ = [
    "Blocker",
    "CyclePacking",
    "Decision",
    "KERNEL",
    "Multigraph",
    "SimpleGraph",
    "Verdict",
    "blockers",
    "decide",
    "find_disjoint_cycles",
    "format_graph",
    "in_Dk",
    "parse_graph",
    "verify_packing",
]

__version__ = "0.1.0"
