"""Hot kernels for bulk small-graph work.

Three operations dominate the package's heavy paths: evaluating mc() for
millions of tiny graphs (exhaustive extremal sweeps, the counterexample
scan), and enumerating edge subsets for the cut oracle.  They are written
once as plain array code and run on one of two backends producing
identical results:

* numba @njit compiled loops (the default whenever numba imports), or
* vectorized numpy, selected by MAJORITYCC_NO_NUMBA=1 or automatically
  when numba is missing.

`backend()` reports the active one; benchmarks/bench_kernels.py compares
them.  The mc kernel is table-driven: all set partitions of 0..n-1,
ordered by decreasing class count, are checked against the majority
condition and the first valid one wins.  Partitions containing a
singleton class are killed early unless the singleton is an isolated
vertex (a vertex with any neighbours always fails alone).
"""

from __future__ import annotations

import os

import numpy as np

from .graph import Graph

_FORCE_NUMPY = os.environ.get("MAJORITYCC_NO_NUMBA", "").strip().lower() in {
    "1", "true", "yes", "on",
}

if not _FORCE_NUMPY:
    try:
        from numba import njit

        _HAS_NUMBA = True
    except ImportError:
        _HAS_NUMBA = False
else:
    _HAS_NUMBA = False


def backend() -> str:
    return "numba" if _HAS_NUMBA else "numpy"


KERNEL_MAX_N = 8
SWEEP_MAX_N = 7
ORACLE_MAX_M = 24

# popcount lookup for 16-bit halves
_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


def _pop_u32(arr: np.ndarray) -> np.ndarray:
    """Vectorized popcount for nonnegative values below 2**32."""
    return _POP16[arr & 0xFFFF] + _POP16[(arr >> 16) & 0xFFFF]


# ---------------------------------------------------------------------------
# partition tables

class _PartitionTable:
    __slots__ = ("masks", "offsets", "singles", "nclasses",
                 "row_part", "row_mask", "row_vertex", "count")

    def __init__(self, n: int):
        parts = _enum_partitions(n)
        parts.sort(key=lambda classes: -len(classes))
        self.count = len(parts)
        masks, offsets, singles, nclasses = [], [0], [], []
        row_part, row_mask, row_vertex = [], [], []
        for pid, classes in enumerate(parts):
            ordered = sorted(classes, key=lambda s: (_POP16[s & 0xFFFF], s))
            single = 0
            for s in ordered:
                masks.append(s)
                if s & (s - 1) == 0:
                    single |= s
                else:
                    members = s
                    v = 0
                    while members:
                        if members & 1:
                            row_part.append(pid)
                            row_mask.append(s)
                            row_vertex.append(v)
                        members >>= 1
                        v += 1
            offsets.append(len(masks))
            singles.append(single)
            nclasses.append(len(classes))
        as_i64 = lambda xs: np.array(xs, dtype=np.int64)
        self.masks = as_i64(masks)
        self.offsets = as_i64(offsets)
        self.singles = as_i64(singles)
        self.nclasses = as_i64(nclasses)
        self.row_part = as_i64(row_part)
        self.row_mask = as_i64(row_mask)
        self.row_vertex = as_i64(row_vertex)


def _enum_partitions(n: int) -> list[tuple[int, ...]]:
    """All set partitions of 0..n-1 as tuples of class bitmasks.

    Restricted-growth order: vertex i joins an existing class or opens the
    next one.  Deterministic, so both backends agree on tie-breaks.
    """
    parts: list[tuple[int, ...]] = []
    masks = [0] * max(n, 1)

    def rec(i: int, k: int):
        if i == n:
            parts.append(tuple(masks[:k]))
            return
        bit = 1 << i
        for lab in range(k):
            masks[lab] |= bit
            rec(i + 1, k)
            masks[lab] &= ~bit
        masks[k] = bit
        rec(i + 1, k + 1)
        masks[k] = 0

    rec(0, 0)
    return parts


_TABLES: dict[int, _PartitionTable] = {}


def _table(n: int) -> _PartitionTable:
    if n not in _TABLES:
        _TABLES[n] = _PartitionTable(n)
    return _TABLES[n]


# ---------------------------------------------------------------------------
# mc kernel

def _mc_table_loop(adj, deg, iso, masks, offsets, singles, nclasses, pop):
    npart = offsets.shape[0] - 1
    for p in range(npart):
        if (singles[p] & ~iso) != 0:
            continue
        ok = True
        for ci in range(offsets[p], offsets[p + 1]):
            s = masks[ci]
            if s & (s - 1) == 0:
                continue
            members = s
            v = 0
            while members != 0:
                if members & 1:
                    if 2 * pop[adj[v] & s] < deg[v]:
                        ok = False
                        break
                members >>= 1
                v += 1
            if not ok:
                break
        if ok:
            return nclasses[p]
    return 1


def _mc_table_numpy(adj, deg, iso, table: _PartitionTable) -> int:
    ok = (table.singles & ~np.int64(iso)) == 0
    if table.row_part.shape[0]:
        same2 = 2 * _POP16[adj[table.row_vertex] & table.row_mask]
        bad = same2 < deg[table.row_vertex]
        bad_per_part = np.bincount(table.row_part[bad], minlength=table.count)
        ok &= bad_per_part == 0
    idx = int(np.argmax(ok))
    return int(table.nclasses[idx]) if ok[idx] else 1


if _HAS_NUMBA:
    _mc_table_jit = njit(cache=True)(_mc_table_loop)

# looked up by name when the sweep compiles, so the jitted sweep calls the
# jitted table kernel and the plain sweep calls the plain one
_MC_TABLE = _mc_table_jit if _HAS_NUMBA else _mc_table_loop


def _graph_arrays(g: Graph):
    adj = np.array(g.bitmasks(), dtype=np.int64)
    deg = np.array(g.degrees(), dtype=np.int64)
    iso = 0
    for v in range(g.n):
        if deg[v] == 0:
            iso |= 1 << v
    return adj, deg, iso


def mc_value_small(g: Graph) -> int:
    """Exact mc(g) for graphs with at most KERNEL_MAX_N vertices."""
    if g.n == 0:
        return 0
    if g.n > KERNEL_MAX_N:
        raise ValueError("kernel handles n <= %d, got n=%d" % (KERNEL_MAX_N, g.n))
    adj, deg, iso = _graph_arrays(g)
    t = _table(g.n)
    if _HAS_NUMBA:
        return int(_mc_table_jit(adj, deg, iso, t.masks, t.offsets,
                                 t.singles, t.nclasses, _POP16))
    return _mc_table_numpy(adj, deg, iso, t)


# ---------------------------------------------------------------------------
# cut oracle: enumerate edge subsets, count components of the remainder

def _cut_scan_loop(n, eu, ev, adj, deg, pop):
    m = eu.shape[0]
    best = -1
    best_code = 0
    deg_f = np.zeros(n, np.int64)
    adj_f = np.zeros(n, np.int64)
    comp_of = np.zeros(n, np.int64)
    for code in range(1 << m):
        ok = True
        rest = code
        i = 0
        while rest != 0:
            if rest & 1:
                deg_f[eu[i]] += 1
                deg_f[ev[i]] += 1
            rest >>= 1
            i += 1
        for v in range(n):
            if 2 * deg_f[v] > deg[v]:
                ok = False
            deg_f[v] = 0
        if not ok:
            continue
        for v in range(n):
            adj_f[v] = adj[v]
        rest = code
        i = 0
        while rest != 0:
            if rest & 1:
                adj_f[eu[i]] &= ~(1 << ev[i])
                adj_f[ev[i]] &= ~(1 << eu[i])
            rest >>= 1
            i += 1
        visited = 0
        count = 0
        for v in range(n):
            if (visited >> v) & 1:
                continue
            count += 1
            comp = 1 << v
            frontier = comp
            while frontier != 0:
                reach = 0
                w = 0
                rest2 = frontier
                while rest2 != 0:
                    if rest2 & 1:
                        reach |= adj_f[w]
                    rest2 >>= 1
                    w += 1
                frontier = reach & ~comp
                comp |= frontier
            visited |= comp
            w = 0
            rest2 = comp
            while rest2 != 0:
                if rest2 & 1:
                    comp_of[w] = comp
                rest2 >>= 1
                w += 1
        valid = True
        for v in range(n):
            if 2 * pop[adj[v] & comp_of[v]] < deg[v]:
                valid = False
                break
        if valid and count > best:
            best = count
            best_code = code
    return best, best_code


if _HAS_NUMBA:
    _cut_scan_jit = njit(cache=True)(_cut_scan_loop)


def _cut_scan_numpy(n, eu, ev, adj, deg):
    """Same scan, vectorized degree prefilter + per-survivor flood fill."""
    m = eu.shape[0]
    inc = np.zeros(n, np.int64)
    for i in range(m):
        inc[eu[i]] |= 1 << i
        inc[ev[i]] |= 1 << i
    half = deg // 2
    best = -1
    best_code = 0
    chunk = 1 << 20
    for start in range(0, 1 << m, chunk):
        stop = min(start + chunk, 1 << m)
        codes = np.arange(start, stop, dtype=np.int64)
        ok = np.ones(codes.shape[0], dtype=bool)
        for v in range(n):
            if deg[v] == 0:
                continue
            ok &= _pop_u32(codes & inc[v]) <= half[v]
        for code in codes[ok]:
            code = int(code)
            adj_f = list(adj)
            rest, i = code, 0
            while rest:
                if rest & 1:
                    adj_f[eu[i]] &= ~(1 << ev[i])
                    adj_f[ev[i]] &= ~(1 << eu[i])
                rest >>= 1
                i += 1
            visited = 0
            count = 0
            comp_of = [0] * n
            for v in range(n):
                if visited >> v & 1:
                    continue
                count += 1
                comp = 1 << v
                frontier = comp
                while frontier:
                    reach = 0
                    w = 0
                    rest2 = frontier
                    while rest2:
                        if rest2 & 1:
                            reach |= adj_f[w]
                        rest2 >>= 1
                        w += 1
                    frontier = reach & ~comp
                    comp |= frontier
                visited |= comp
                rest2, w = comp, 0
                while rest2:
                    if rest2 & 1:
                        comp_of[w] = comp
                    rest2 >>= 1
                    w += 1
            if all(2 * int(_POP16[adj[v] & comp_of[v]]) >= deg[v] for v in range(n)):
                if count > best:
                    best = count
                    best_code = code
    return best, best_code


def cut_oracle_scan(g: Graph) -> tuple[int, int]:
    """Max component count over feasible edge subsets, plus the first
    achieving subset encoded by bit i = i-th edge of g.edges().

    Feasible: per-vertex cut degree at most floor(deg/2) and the component
    coloring of the remainder satisfies the majority condition.
    """
    if g.m > ORACLE_MAX_M:
        raise ValueError("cut oracle handles m <= %d, got m=%d" % (ORACLE_MAX_M, g.m))
    if g.n > 16:
        raise ValueError("cut oracle handles n <= 16, got n=%d" % g.n)
    edges = g.edges()
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    adj, deg, _ = _graph_arrays(g)
    if _HAS_NUMBA:
        best, code = _cut_scan_jit(g.n, eu, ev, adj, deg, _POP16)
    else:
        best, code = _cut_scan_numpy(g.n, eu, ev, adj, deg)
    return int(best), int(code)


# ---------------------------------------------------------------------------
# exhaustive sweep over all labeled n-vertex graphs

def _sweep_loop(n, eu, ev, masks, offsets, singles, nclasses, pop,
                max_edges, min_edges):
    nedges = eu.shape[0]
    adj = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    for code in range(1 << nedges):
        for v in range(n):
            adj[v] = 0
        rest = code
        i = 0
        while rest != 0:
            if rest & 1:
                adj[eu[i]] |= 1 << ev[i]
                adj[ev[i]] |= 1 << eu[i]
            rest >>= 1
            i += 1
        iso = 0
        for v in range(n):
            deg[v] = pop[adj[v]]
            if deg[v] == 0:
                iso |= 1 << v
        k = _MC_TABLE(adj, deg, iso, masks, offsets, singles, nclasses, pop)
        m = pop[code & 0xFFFF] + pop[(code >> 16) & 0xFFFF]
        if m > max_edges[k]:
            max_edges[k] = m
        if m < min_edges[k]:
            min_edges[k] = m


if _HAS_NUMBA:
    _sweep_jit = njit(cache=True)(_sweep_loop)


def _sweep_numpy(n, eu, ev, table, max_edges, min_edges):
    nedges = eu.shape[0]
    for code in range(1 << nedges):
        adj = np.zeros(n, np.int64)
        rest, i = code, 0
        while rest:
            if rest & 1:
                adj[eu[i]] |= 1 << ev[i]
                adj[ev[i]] |= 1 << eu[i]
            rest >>= 1
            i += 1
        deg = _POP16[adj]
        iso = 0
        for v in range(n):
            if deg[v] == 0:
                iso |= 1 << v
        k = _mc_table_numpy(adj, deg, iso, table)
        m = bin(code).count("1")
        if m > max_edges[k]:
            max_edges[k] = m
        if m < min_edges[k]:
            min_edges[k] = m


def extremal_sweep(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Max and min edge counts by mc value over ALL labeled n-vertex graphs.

    Returns (max_edges, min_edges), arrays indexed by k = 1..n (index 0
    unused; -1 / a large sentinel mark values never attained).
    """
    if not (1 <= n <= SWEEP_MAX_N):
        raise ValueError("sweep handles 1 <= n <= %d, got n=%d" % (SWEEP_MAX_N, n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    eu = np.array([p[0] for p in pairs], dtype=np.int64)
    ev = np.array([p[1] for p in pairs], dtype=np.int64)
    max_edges = np.full(n + 1, -1, dtype=np.int64)
    min_edges = np.full(n + 1, 1 << 30, dtype=np.int64)
    t = _table(n)
    if _HAS_NUMBA:
        _sweep_jit(n, eu, ev, t.masks, t.offsets, t.singles, t.nclasses,
                   _POP16, max_edges, min_edges)
    else:
        _sweep_numpy(n, eu, ev, t, max_edges, min_edges)
    return max_edges, min_edges
