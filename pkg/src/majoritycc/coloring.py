"""Colorings, the majority condition verifier, and cut-subgraph translation.

A coloring is valid when every vertex has at least as many same-colored
neighbours as differently-colored ones, i.e. 2 * same >= deg(v) at every
vertex.  All arithmetic is integer; no floating point anywhere.

The cut-subgraph view: an edge set F whose per-vertex degree stays within
floor(deg(x)/2) can be removed so that the components of the remainder form
the color classes of a valid coloring; conversely the bichromatic edges of
a valid coloring form such an edge set.  Both directions live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import Graph


class Violation(NamedTuple):
    vertex: int
    same: int
    other: int


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violations: tuple[Violation, ...] = ()


class Coloring:
    """Canonical surjective coloring: colors numbered by first appearance.

    assignment[v] is the color of vertex v; colors are exactly 0..k-1 and
    scanning vertices 0, 1, ... meets them in increasing order, so equal
    partitions compare equal as tuples.
    """

    __slots__ = ("assignment", "k")

    def __init__(self, assignment):
        labels = tuple(assignment)
        relabel: dict[int, int] = {}
        for c in labels:
            if c not in relabel:
                relabel[c] = len(relabel)
        self.assignment = tuple(relabel[c] for c in labels)
        self.k = len(relabel)

    @classmethod
    def from_labels(cls, labels) -> "Coloring":
        return cls(labels)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out

    def class_of(self, color: int) -> list[int]:
        return [v for v, c in enumerate(self.assignment) if c == color]

    def to_line(self) -> str:
        return " ".join(str(c) for c in self.assignment)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash(self.assignment)

    def __len__(self) -> int:
        return len(self.assignment)

    def __repr__(self) -> str:
        return "Coloring(k=%d, %s)" % (self.k, list(self.assignment))


def parse_coloring(text: str, n: int) -> Coloring:
    """Parse a one-line coloring (n space-separated color indices)."""
    fields = text.split()
    if len(fields) != n:
        raise ValueError("expected %d color entries, got %d" % (n, len(fields)))
    try:
        labels = [int(f) for f in fields]
    except ValueError:
        raise ValueError("non-integer color entry") from None
    return Coloring(labels)


def verify_majority(g: Graph, c: Coloring) -> Verdict:
    """Check the majority condition 2 * same >= deg(v) at every vertex."""
    if len(c) != g.n:
        raise ValueError("coloring length %d != vertex count %d" % (len(c), g.n))
    assignment = c.assignment
    violations = []
    for v in range(g.n):
        same = 0
        for u in g.adj[v]:
            if assignment[u] == assignment[v]:
                same += 1
        deg = len(g.adj[v])
        if 2 * same < deg:
            violations.append(Violation(v, same, deg - same))
    return Verdict(not violations, tuple(violations))


def classes_connected(g: Graph, c: Coloring) -> list[bool]:
    """Whether each color class induces a connected subgraph.

    Diagnostic only: connectivity of classes is necessary for optimal
    colorings, not for validity.
    """
    if len(c) != g.n:
        raise ValueError("coloring length %d != vertex count %d" % (len(c), g.n))
    out = []
    for members in c.classes():
        sub, _ = g.induced(members)
        out.append(sub.is_connected())
    return out


@dataclass(frozen=True)
class CutSubgraph:
    """An edge subset F of a host graph, normalized to (u, v) with u < v."""

    host: Graph
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if not (u < v and self.host.has_edge(u, v)):
                raise ValueError("edge (%s, %s) not in host graph" % (u, v))

    @classmethod
    def from_edges(cls, host: Graph, edges) -> "CutSubgraph":
        norm = frozenset((u, v) if u < v else (v, u) for u, v in edges)
        return cls(host, norm)

    def cut_degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def coloring_to_cut(g: Graph, c: Coloring) -> CutSubgraph:
    """Bichromatic edge set of a valid coloring.

    The result always satisfies cut_degree(x) <= floor(deg(x)/2), and
    removing it leaves at least c.k components.
    """
    verdict = verify_majority(g, c)
    if not verdict.valid:
        raise ValueError("coloring is not valid: %d violation(s)" % len(verdict.violations))
    assignment = c.assignment
    cut = [(u, v) for u, v in g.edges() if assignment[u] != assignment[v]]
    return CutSubgraph.from_edges(g, cut)


def cut_to_coloring(g: Graph, f: CutSubgraph) -> Coloring:
    """Color vertices by their component in g minus the cut edges.

    Requires cut_degree(x) <= floor(deg(x)/2) at every vertex (reported per
    offending vertex otherwise).  The induced coloring is re-checked with
    verify_majority, which is authoritative; rejection there would mean the
    degree test let a bad cut through and is treated as an error too.
    """
    if f.host is not g and f.host != g:
        raise ValueError("cut subgraph belongs to a different host graph")
    cut_deg = [0] * g.n
    for u, v in f.edges:
        cut_deg[u] += 1
        cut_deg[v] += 1
    for x in range(g.n):
        if 2 * cut_deg[x] > g.degree(x):
            raise ValueError(
                "vertex %d has cut-degree %d > floor(deg/2) = %d"
                % (x, cut_deg[x], g.degree(x) // 2)
            )
    remainder = g.delete_edges(f.edges)
    labels = [0] * g.n
    for color, comp in enumerate(remainder.components()):
        for v in comp:
            labels[v] = color
    coloring = Coloring(labels)
    verdict = verify_majority(g, coloring)
    if not verdict.valid:
        raise ValueError(
            "cut passes the degree test but its coloring fails the majority "
            "condition at vertex %d" % verdict.violations[0].vertex
        )
    return coloring
