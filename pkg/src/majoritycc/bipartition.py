"""Constructive satisfactory-bipartition procedures.

All three entry points share one engine: grow a seed set X by repeatedly
absorbing the smallest-index outside vertex with strictly more neighbors
inside X than outside.  Each move strictly shrinks the set of boundary
edges, so the growth stops after at most boundary-many moves; if X
swallows every vertex the run is "exhausted", otherwise the resulting
2-coloring is checked and returned on success.

Seeds: a clique of size exactly ceil(D/2)+1 (D the maximum degree), or a
shortest cycle.  Success is guaranteed when the corresponding size
preconditions hold; the engine still runs opportunistically when they do
not, and says so.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, verify_majority
from .graph import Graph


@dataclass(frozen=True)
class MoveRecord:
    vertex: int
    boundary_delta: int


@dataclass(frozen=True)
class BipartitionTrace:
    seed: tuple[int, ...]
    moves: tuple[MoveRecord, ...]
    final_side: tuple[int, ...]
    boundary_sizes: tuple[int, ...]


@dataclass(frozen=True)
class BipartitionResult:
    status: str  # "success" | "precondition-unmet" | "exhausted"
    coloring: Coloring | None
    trace: BipartitionTrace | None
    guaranteed: bool
    reason: str


def _seed_side_valid(g: Graph, side: set[int]) -> bool:
    for u in side:
        inside = sum(1 for w in g.adj[u] if w in side)
        if 2 * inside < g.degree(u):
            return False
    return True


def _grow(g: Graph, seed, guaranteed: bool) -> BipartitionResult:
    side = set(seed)
    if guaranteed and not _seed_side_valid(g, side):
        raise AssertionError("seed set violates the majority condition "
                             "although the guarantee preconditions hold")
    boundary = sum(1 for u, v in g.edges() if (u in side) != (v in side))
    first_boundary = boundary
    sizes = [boundary]
    moves = []
    while len(side) < g.n:
        mover = -1
        for v in range(g.n):
            if v in side:
                continue
            inside = sum(1 for w in g.adj[v] if w in side)
            if 2 * inside > g.degree(v):
                mover = v
                break
        if mover == -1:
            break
        delta = g.degree(mover) - 2 * sum(1 for w in g.adj[mover] if w in side)
        side.add(mover)
        boundary += delta
        if delta >= 0:
            raise AssertionError("move failed to shrink the boundary")
        if len(moves) >= first_boundary:
            raise AssertionError("more moves than initial boundary edges")
        moves.append(MoveRecord(mover, delta))
        sizes.append(boundary)
        if guaranteed and not _seed_side_valid(g, side):
            raise AssertionError("grown side lost the majority condition "
                                 "although the guarantee preconditions hold")
    trace = BipartitionTrace(tuple(sorted(seed)), tuple(moves),
                             tuple(sorted(side)), tuple(sizes))
    if len(side) == g.n:
        return BipartitionResult("exhausted", None, trace, guaranteed,
                                 "the grown side absorbed every vertex")
    coloring = Coloring([0 if v in side else 1 for v in range(g.n)])
    verdict = verify_majority(g, coloring)
    if verdict.valid:
        return BipartitionResult("success", coloring, trace, guaranteed, "")
    return BipartitionResult("precondition-unmet", None, trace, guaranteed,
                             "final bipartition fails the majority condition")


def _lex_clique(g: Graph, size: int, budget: int = 200_000):
    """Lexicographically first clique of exactly `size` vertices, or None."""
    found = None
    nodes = 0

    def rec(current, start):
        nonlocal found, nodes
        if len(current) == size:
            found = tuple(current)
            return
        for v in range(start, g.n):
            if found is not None or nodes > budget:
                return
            if g.n - v < size - len(current):
                return
            nodes += 1
            if all(g.has_edge(v, u) for u in current):
                current.append(v)
                rec(current, v + 1)
                current.pop()

    rec([], 0)
    return found


def bipartition_clique(g: Graph) -> BipartitionResult:
    """Seed: clique of size ceil(D/2)+1.  Guaranteed to 2-color when such
    a clique exists and n > (ceil(D/2)+1) * (floor(D/2)+1)."""
    if g.n == 0:
        return BipartitionResult("precondition-unmet", None, None, False,
                                 "empty graph")
    top = max(g.degrees())
    size = (top + 1) // 2 + 1
    seed = _lex_clique(g, size)
    if seed is None:
        return BipartitionResult(
            "precondition-unmet", None, None, False,
            "no clique of size %d found" % size)
    guaranteed = g.n > size * (top // 2 + 1)
    return _grow(g, seed, guaranteed)


def bipartition_girth(g: Graph) -> BipartitionResult:
    """Seed: a shortest cycle.  Guaranteed when max degree <= 4 and
    n > 3 * girth."""
    length, cycle = g.girth()
    if length is None:
        return BipartitionResult("precondition-unmet", None, None, False,
                                 "acyclic graph has no cycle seed")
    guaranteed = max(g.degrees()) <= 4 and g.n > 3 * length
    return _grow(g, cycle, guaranteed)


def bipartition_4regular(g: Graph) -> BipartitionResult:
    """Cycle-seeded variant for 4-regular graphs, guaranteed from order
    2*girth + 1 on; smaller graphs are rejected without a run."""
    if g.n == 0 or any(g.degree(v) != 4 for v in range(g.n)):
        raise ValueError("graph is not 4-regular")
    length, cycle = g.girth()
    if g.n < 2 * length + 1:
        return BipartitionResult(
            "precondition-unmet", None, None, False,
            "order %d is below 2*girth+1 = %d" % (g.n, 2 * length + 1))
    return _grow(g, cycle, True)
