"""Line-oriented text format for multigraphs.

::

    # comment
    n 4
    e 0 0 2      # two loops at vertex 0
    e 0 1 1
    e 1 2 3

Duplicate ``e`` lines for the same pair add up. :func:`format_graph` emits
the canonical form: the ``n`` line, loops by ascending vertex, then the
remaining pairs in lexicographic order.
"""

from __future__ import annotations

from .core import Multigraph


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_graph(text: str) -> Multigraph:
    n = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        tag = fields[0]
        try:
            values = [int(x) for x in fields[1:]]
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}") from None
        if tag == "n":
            if len(values) != 1:
                raise ParseError(lineno, "expected 'n <num_vertices>'")
            if n is not None:
                raise ParseError(lineno, "duplicate 'n' line")
            if values[0] < 0:
                raise ParseError(lineno, "vertex count must be nonnegative")
            n = values[0]
        elif tag == "e":
            if len(values) != 3:
                raise ParseError(lineno, "expected 'e <u> <v> <multiplicity>'")
            u, v, m = values
            if n is None:
                raise ParseError(lineno, "'e' line before 'n' line")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(lineno, f"vertex out of range for n={n}")
            if m <= 0:
                raise ParseError(lineno, f"multiplicity must be positive, got {m}")
            edges.append((u, v, m))
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise ParseError(0, "missing 'n' line")
    return Multigraph(n, edges)


def format_graph(g: Multigraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {v} {v} {c}" for v, c in sorted(g.loops.items())]
    lines += [f"e {u} {v} {m}" for u, v, m in g.pairs()]
    return "\n".join(lines) + "\n"


serialize = format_graph
