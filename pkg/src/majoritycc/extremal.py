"""Extremal edge counts for a prescribed majority coloring number.

Among n-vertex graphs with mc = k, the maximum edge count M(n, k) is
C(n, 2) for k = 1, C(n-k+1, 2) when n-k is odd, and
C(n-k+2, 2) - (n-k+2)/2 when n-k is even; the minimum m(n, k) is n - k.
Witness constructions realize both.  The module also builds graphs with
a prescribed (chromatic number, mc) pair and audits chi + mc <= n + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import _kernels
from .exact import DEFAULT_BUDGET, chromatic_number
from .generators import FamilySpec, gen_complete, gen_named, gen_power_path
from .graph import Graph
from .solve import mc_value


def max_edges(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if k == 1:
        return comb(n, 2)
    if (n - k) % 2 == 1:
        return comb(n - k + 1, 2)
    return comb(n - k + 2, 2) - (n - k + 2) // 2


def min_edges(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return n - k


@dataclass(frozen=True)
class ExtremalWitness:
    graph: Graph
    claimed_mc: int
    claimed_size: int
    kind: str  # "max" | "min"
    spec: FamilySpec


def witness_max(n: int, k: int) -> ExtremalWitness:
    spec = FamilySpec("extremal_max", (n, k))
    g = gen_named(spec)
    size = max_edges(n, k)
    if g.m != size:
        raise AssertionError("witness has %d edges, formula says %d" % (g.m, size))
    return ExtremalWitness(g, k, size, "max", spec)


def witness_min(n: int, k: int) -> ExtremalWitness:
    spec = FamilySpec("extremal_min", (n, k))
    g = gen_named(spec)
    size = min_edges(n, k)
    if g.m != size:
        raise AssertionError("witness has %d edges, formula says %d" % (g.m, size))
    return ExtremalWitness(g, k, size, "min", spec)


def chi_mc_pair(k1: int, k2: int) -> Graph:
    """A graph with chromatic number k1 and majority coloring number k2."""
    if k1 < 1 or k2 < 1:
        raise ValueError("need k1, k2 >= 1")
    if k1 == 1:
        return Graph(k2, [])
    if k2 == 1:
        return gen_complete(k1)
    return gen_power_path(k1 * k2, k1 - 1)


@dataclass(frozen=True)
class ChiMcCheck:
    n: int
    chi: int
    mc: int
    total: int
    holds: bool


def check_chi_plus_mc(g: Graph, budget: int = DEFAULT_BUDGET) -> ChiMcCheck:
    """Evaluate chi(g) + mc(g) against the ceiling n + 1."""
    chi = chromatic_number(g)
    mc = mc_value(g, budget=budget)
    total = chi + mc
    return ChiMcCheck(g.n, chi, mc, total, total <= g.n + 1)


@dataclass(frozen=True)
class SweepRow:
    n: int
    k: int
    max_formula: int
    max_found: int
    min_formula: int
    min_found: int
    verified: bool


def exhaustive_check(n: int) -> tuple[SweepRow, ...]:
    """Sweep every labeled n-vertex graph and compare the observed extreme
    edge counts per mc value against the formulas.  Feasible up to n = 7
    (2^21 graphs)."""
    found_max, found_min = _kernels.extremal_sweep(n)
    rows = []
    for k in range(1, n + 1):
        fmax = max_edges(n, k)
        fmin = min_edges(n, k)
        gmax = int(found_max[k])
        gmin = int(found_min[k])
        rows.append(SweepRow(n, k, fmax, gmax, fmin, gmin,
                             fmax == gmax and fmin == gmin))
    return tuple(rows)
