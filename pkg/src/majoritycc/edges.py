"""Edge-deletion behavior of the majority coloring number.

Deleting one edge moves mc by at most +1 and at least -2; both extremes
occur.  This module computes per-edge deltas, the edge stability number
(minimum size of a deletion set that changes mc at all), criticality
profiles, and a scanner for critical graphs with a mixed profile, which
would contradict the expectation that a critical graph's deletions move
mc in only one direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import DEFAULT_BUDGET
from .graph import Graph
from .solve import mc_value


@dataclass(frozen=True)
class EdgeDelta:
    edge: tuple[int, int]
    mc_after: int
    delta: int


@dataclass(frozen=True)
class EdgeStability:
    value: int | None
    status: str  # "exact" | "above-limit" | "undefined"
    witness_set: tuple[tuple[int, int], ...] | None
    limit: int


@dataclass(frozen=True)
class EdgeReport:
    base_mc: int
    deltas: tuple[EdgeDelta, ...]
    critical: bool
    profile: str  # "all_increase" | "mixed" | "not_critical" | "no_edges"
    stability: EdgeStability | None


class _McCache:
    """mc values of subgraphs of one host, keyed by the deleted edge set."""

    def __init__(self, g: Graph, budget: int, workers: int):
        self.g = g
        self.budget = budget
        self.workers = workers
        self.known: dict[tuple[tuple[int, int], ...], int] = {}

    def mc_minus(self, deleted) -> int:
        key = tuple(sorted(deleted))
        if key not in self.known:
            self.known[key] = mc_value(self.g.delete_edges(key),
                                       budget=self.budget,
                                       workers=self.workers)
        return self.known[key]


def edge_deltas(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1,
                cache: _McCache | None = None) -> EdgeReport:
    """Exact mc(G - e) for every edge, with the [-2, +1] window enforced
    and the guarantee that not every deletion decreases mc."""
    if cache is None:
        cache = _McCache(g, budget, workers)
    base = cache.mc_minus(())
    deltas = []
    for e in g.edges():
        after = cache.mc_minus((e,))
        delta = after - base
        if not -2 <= delta <= 1:
            raise AssertionError(
                "edge %s moved mc by %d, outside [-2, +1]" % (e, delta))
        deltas.append(EdgeDelta(e, after, delta))
    if g.m == 0:
        return EdgeReport(base, (), False, "no_edges", None)
    if all(d.delta < 0 for d in deltas):
        raise AssertionError(
            "every single-edge deletion decreased mc; "
            "some edge must keep or raise it")
    critical = all(d.delta != 0 for d in deltas)
    if not critical:
        profile = "not_critical"
    elif all(d.delta > 0 for d in deltas):
        profile = "all_increase"
    else:
        profile = "mixed"
    return EdgeReport(base, tuple(deltas), critical, profile, None)


def edge_stability(g: Graph, limit: int = 3, budget: int = DEFAULT_BUDGET,
                   workers: int = 1, cache: _McCache | None = None) -> EdgeStability:
    """Minimum number of edges whose simultaneous removal changes mc.

    Deletion sets are tried breadth-first by size, lexicographically
    within a size, so the reported witness set is deterministic.  Sizes
    above `limit` are not tried.
    """
    if g.m == 0:
        return EdgeStability(None, "undefined", None, limit)
    if cache is None:
        cache = _McCache(g, budget, workers)
    base = cache.mc_minus(())
    edges = g.edges()
    for size in range(1, min(limit, g.m) + 1):
        for subset in combinations(edges, size):
            if cache.mc_minus(subset) != base:
                return EdgeStability(size, "exact", subset, limit)
    return EdgeStability(None, "above-limit", None, limit)


def classify_critical(g: Graph, budget: int = DEFAULT_BUDGET,
                      workers: int = 1) -> str:
    """Criticality profile of g: every-deletion-changes-mc graphs are
    "all_increase" or "mixed", the rest "not_critical"."""
    if g.m == 0:
        raise ValueError("criticality needs at least one edge")
    return edge_deltas(g, budget=budget, workers=workers).profile


@dataclass(frozen=True)
class ScanHit:
    index: int
    graph: Graph
    report: EdgeReport


@dataclass(frozen=True)
class ScanOutcome:
    checked: int
    skipped: tuple[int, ...]
    hits: tuple[ScanHit, ...]


def conjecture_scan(graphs, budget: int = DEFAULT_BUDGET,
                    workers: int = 1) -> ScanOutcome:
    """Look for critical graphs with a mixed deletion profile.

    Emits every hit with its full per-edge certificate.  Graphs whose
    solves run out of budget are skipped and reported by index, never
    silently dropped.
    """
    checked = 0
    skipped = []
    hits = []
    for index, g in enumerate(graphs):
        if g.m == 0:
            checked += 1
            continue
        try:
            report = edge_deltas(g, budget=budget, workers=workers)
        except RuntimeError:
            skipped.append(index)
            continue
        checked += 1
        if report.critical and report.profile == "mixed":
            hits.append(ScanHit(index, g, report))
    return ScanOutcome(checked, tuple(skipped), tuple(hits))
