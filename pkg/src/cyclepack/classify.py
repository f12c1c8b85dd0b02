"""Decision procedures for k vertex-disjoint cycles.

``decide`` is the entry point. It dispatches on the loop structure:
multigraphs with a loop are settled by a counting formula, loopless members
of D_k are checked against the six obstruction conditions (tags ``A`` ..
``F``), and everything else is reported as out of scope. Every obstruction
found is returned together with a witness that can be re-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .core import (
    Multigraph,
    SimpleGraph,
    StrongEdgeGraph,
    in_Dk,
    loop_vertices,
    min_simple_degree,
    strong_edge_graph,
    underlying_simple,
)
from .matching import has_perfect_matching, matching_number
from .recognize import (
    BigSet,
    Superstar,
    YWitness,
    big_sets,
    cycle_order,
    is_cycle,
    is_multigraph_wheel,
    superstars,
    wheel_hub,
    y_witness,
    y_witnesses,
)


class Verdict(str, Enum):
    PACKABLE = "Packable"
    BLOCKED = "Blocked"
    NOT_IN_DK = "NotInDk"
    OUT_OF_SCOPE = "OutOfTheoremScope"

    def __str__(self) -> str:
        return self.value


TAGS = (
    "A", "B_I", "B_II", "C_I", "C_II", "D_I", "D_II", "E", "F",
    "LoopFormula",
    "SimpleAlpha", "SimpleBeta", "SimpleGamma", "SimpleDelta", "SimpleEpsilon",
)


@dataclass(frozen=True)
class Counts:
    """Witness for the vertex-counting obstructions."""

    n: int
    loops: int
    alpha_prime: int
    k: int

    def canonical(self) -> str:
        return f"n={self.n},loops={self.loops},alpha_prime={self.alpha_prime},k={self.k}"


@dataclass(frozen=True)
class Hub:
    hub: int

    def canonical(self) -> str:
        return f"hub:{self.hub}"


@dataclass(frozen=True)
class WheelPart:
    """A wheel on ``vertices`` (the graph left after deleting the strong edges' vertices)."""

    hub: int
    vertices: tuple[int, ...]

    def canonical(self) -> str:
        return f"hub:{self.hub};wheel:{','.join(map(str, self.vertices))}"


@dataclass(frozen=True)
class BigPair:
    first: BigSet
    second: BigSet
    common: Optional[int]

    def canonical(self) -> str:
        common = "none" if self.common is None else str(self.common)
        return f"I:{self.first.canonical()};J:{self.second.canonical()};common:{common}"


@dataclass(frozen=True)
class StarY:
    star: Superstar
    y: YWitness

    def canonical(self) -> str:
        return f"{self.star.canonical()};{self.y.canonical()}"


@dataclass(frozen=True)
class Rim:
    cycle: tuple[int, ...]

    def canonical(self) -> str:
        return f"rim:{','.join(map(str, self.cycle))}"


@dataclass(frozen=True)
class Forest:
    def canonical(self) -> str:
        return "acyclic"


Witness = Union[Counts, Hub, WheelPart, BigSet, BigPair, StarY, YWitness, Rim, Forest]


@dataclass(frozen=True)
class Blocker:
    tag: str
    witness: Witness

    def line(self) -> str:
        return f"blocker={self.tag} witness={self.witness.canonical()}"


@dataclass
class Decision:
    verdict: Verdict
    blockers: list[Blocker] = field(default_factory=list)
    n: int = 0
    k: int = 0
    alpha_prime: int = 0
    f_size: int = 0
    loops: int = 0
    min_simple_degree: int = 0

    @property
    def k_prime(self) -> int:
        return self.k - self.alpha_prime

    @property
    def tags(self) -> list[str]:
        return [b.tag for b in self.blockers]

    def report(self) -> str:
        lines = [
            f"verdict={self.verdict}",
            f"k={self.k}",
            f"k_prime={self.k_prime}",
            f"alpha_prime={self.alpha_prime}",
            f"f_size={self.f_size}",
            f"loops={self.loops}",
            f"min_simple_degree={self.min_simple_degree}",
        ]
        lines += [b.line() for b in self.blockers]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class _Derived:
    f: StrongEdgeGraph
    alpha_prime: int
    loops: int
    ms: int


def _derive(g: Multigraph) -> _Derived:
    f = strong_edge_graph(g)
    return _Derived(f, matching_number(f), len(loop_vertices(g)), min_simple_degree(g))


def _decision(g: Multigraph, k: int, d: _Derived, verdict: Verdict, blockers=()) -> Decision:
    return Decision(
        verdict=verdict,
        blockers=list(blockers),
        n=g.n,
        k=k,
        alpha_prime=d.alpha_prime,
        f_size=d.f.order(),
        loops=d.loops,
        min_simple_degree=d.ms,
    )


def _loop_formula(g: Multigraph, k: int, d: _Derived) -> Decision:
    if g.n + 2 * d.loops + d.alpha_prime < 3 * k:
        blocker = Blocker("LoopFormula", Counts(g.n, d.loops, d.alpha_prime, k))
        return _decision(g, k, d, Verdict.BLOCKED, [blocker])
    return _decision(g, k, d, Verdict.PACKABLE)


def decide_ms2k(g: Multigraph, k: int) -> Decision:
    """Counting test for multigraphs whose minimum simple degree is at least 2k."""
    d = _derive(g)
    if k < 1 or g.n == 0 or d.ms < 2 * k:
        return _decision(g, k, d, Verdict.OUT_OF_SCOPE)
    return _loop_formula(g, k, d)


def decide_with_loops(g: Multigraph, k: int) -> Decision:
    """Counting test for members of D_k that carry at least one loop (k >= 2)."""
    d = _derive(g)
    if k < 2 or d.loops == 0:
        return _decision(g, k, d, Verdict.OUT_OF_SCOPE)
    if not in_Dk(g, k):
        return _decision(g, k, d, Verdict.NOT_IN_DK)
    return _loop_formula(g, k, d)


def _is_forest(h: SimpleGraph) -> bool:
    return h.edge_count() == h.order() - len(h.components())


def decide_simple(h: SimpleGraph, k: int) -> Decision:
    """Obstruction check for a simple graph in D_k (tags ``Simple*``)."""
    n = h.order()
    verts = h.vertices()
    index = {v: i for i, v in enumerate(verts)}
    g = Multigraph(n, [(index[u], index[v], 1) for u, v in h.edges()])
    d = _derive(g)
    if k < 1:
        return _decision(g, k, d, Verdict.OUT_OF_SCOPE)
    if not in_Dk(g, k):
        return _decision(g, k, d, Verdict.NOT_IN_DK)
    found: list[Blocker] = []
    if n <= 3 * k - 1:
        found.append(Blocker("SimpleAlpha", Counts(n, 0, 0, k)))
    if k == 1 and _is_forest(h):
        found.append(Blocker("SimpleBeta", Forest()))
    if k == 2:
        hub = wheel_hub(h)
        if hub is not None:
            found.append(Blocker("SimpleGamma", Hub(hub)))
    for big in big_sets(g, k):
        found.append(Blocker("SimpleDelta", BigSet(tuple(verts[i] for i in big.vertices))))
    if k > 1 and k % 2 == 1:
        w = y_witness(h, k, k)
        if w is not None:
            found.append(Blocker("SimpleEpsilon", w))
    verdict = Verdict.BLOCKED if found else Verdict.PACKABLE
    return _decision(g, k, d, verdict, found)


def _f_vertices(f: SimpleGraph) -> frozenset[int]:
    return f.active


def _condition_c(g: Multigraph, k: int, f: SimpleGraph) -> list[Blocker]:
    out: list[Blocker] = []
    bigs = big_sets(g, k)
    if not bigs:
        return out
    covered = _f_vertices(f)
    for big in bigs:
        if not covered & set(big.vertices):
            out.append(Blocker("C_I", big))
    strong = f.edges()
    for i in range(len(bigs)):
        for j in range(i + 1, len(bigs)):
            union = set(bigs[i].vertices) | set(bigs[j].vertices)
            touching = [e for e in strong if e[0] in union or e[1] in union]
            if not touching:
                # Vacuous: no strong edge meets the union.
                out.append(Blocker("C_II", BigPair(bigs[i], bigs[j], None)))
                continue
            common = set(touching[0])
            for e in touching[1:]:
                common &= set(e)
            common -= union
            if common:
                out.append(Blocker("C_II", BigPair(bigs[i], bigs[j], min(common))))
    return out


def _condition_d(g: Multigraph, f: SimpleGraph, alpha: int, kp: int, h: SimpleGraph) -> list[Blocker]:
    out: list[Blocker] = []
    if kp < 1 or kp % 2 == 0 or g.n != 2 * alpha + 3 * kp:
        return out
    fverts = _f_vertices(f)
    outside_f = h.active - fverts
    for star in superstars(f):
        # (i): delete the F-vertices outside the star, and the center.
        keep = outside_f | set(star.leaves)
        w = y_witness(h.induced(keep), kp + 1, kp)
        if w is not None:
            out.append(Blocker("D_I", StarY(star, w)))
        # (ii)
        if len(star.leaves) == 2:
            v1, v2 = star.leaves
            if not h.has_edge(v1, v2):
                continue
            for w2 in y_witnesses(h.induced(outside_f), kp - 1, kp):
                x0 = set(w2.x0)
                if not (h.neighbors(v1) & x0) and not (h.neighbors(v2) & x0):
                    out.append(Blocker("D_II", StarY(star, w2)))
                    break
    return out


def blockers(g: Multigraph, k: int) -> list[Blocker]:
    """Every obstruction among ``A``..``F`` that holds for ``g``.

    Requires ``g`` loopless, in D_k and ``k >= 2``; otherwise returns an
    empty list (use :func:`decide` for a verdict with scope information).
    """
    if k < 2 or not g.is_loopless() or not in_Dk(g, k):
        return []
    n = g.n
    f = strong_edge_graph(g)
    alpha = matching_number(f)
    kp = k - alpha
    fsize = f.order()
    h = underlying_simple(g)
    rest_keep = h.active - _f_vertices(f)
    rest = h.induced(rest_keep)
    out: list[Blocker] = []

    if n + alpha < 3 * k:
        out.append(Blocker("A", Counts(n, 0, alpha, k)))

    if kp >= 1 and fsize == 2 * alpha:
        assert all(g.multiplicity(u, v) == 1 for u, v in rest.edges())
        if kp % 2 == 1:
            w = y_witness(rest, kp, kp)
            if w is not None:
                out.append(Blocker("B_I", w))
        if kp == 2 and kp < k and rest.order() == 6:
            hub = wheel_hub(rest)
            if hub is not None:
                out.append(Blocker("B_II", WheelPart(hub, tuple(rest.vertices()))))

    out += _condition_c(g, k, f)
    out += _condition_d(g, f, alpha, kp, h)

    if k == 2:
        hub = is_multigraph_wheel(g)
        if hub is not None:
            out.append(Blocker("E", Hub(hub)))

    if kp == 2 and fsize == 2 * alpha + 1 and fsize == n - 5 and is_cycle(rest):
        out.append(Blocker("F", Rim(tuple(cycle_order(rest)))))
    return out


def _has_any_cycle(g: Multigraph) -> bool:
    if loop_vertices(g) or g.strong_pairs():
        return True
    return not _is_forest(underlying_simple(g))


def decide(g: Multigraph, k: int) -> Decision:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    d = _derive(g)
    if k == 1:
        if _has_any_cycle(g):
            return _decision(g, k, d, Verdict.PACKABLE)
        return _decision(g, k, d, Verdict.BLOCKED, [Blocker("SimpleBeta", Forest())])
    if not in_Dk(g, k):
        return _decision(g, k, d, Verdict.NOT_IN_DK)
    if d.loops:
        return _loop_formula(g, k, d)
    found = blockers(g, k)
    return _decision(g, k, d, Verdict.BLOCKED if found else Verdict.PACKABLE, found)


def dirac_erdos_sufficient(h: SimpleGraph, k: int) -> bool:
    """Degree-surplus test guaranteeing k disjoint cycles (k >= 3).

    False means "inconclusive", never "no packing".
    """
    if k < 3:
        raise ValueError(f"degree-surplus test needs k >= 3, got {k}")
    high = sum(1 for v in h.vertices() if h.degree(v) >= 2 * k)
    low = sum(1 for v in h.vertices() if h.degree(v) <= 2 * k - 2)
    return high - low >= k * k + 2 * k - 4
