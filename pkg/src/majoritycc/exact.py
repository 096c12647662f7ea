"""Exact computation of the majority coloring number.

`exact_mc` runs branch-and-bound over canonical vertex partitions, one
connected component at a time (component values add up).  Within a
component the search space is split at the top two branching levels into
fixed tasks; tasks are solved fully independently and merged by a
deterministic rule (max value, ties to the lexicographically smallest
canonical witness), so the result is identical for any worker count.

`cut_oracle_mc` is an independent cross-check: it enumerates edge subsets
whose removal leaves a valid component coloring and shares no code with
the partition search.  `chromatic_number` is a small exact backtracking
coloring routine used by the extremal checks.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from . import _kernels
from .bounds import bound_delta, bound_delta_Delta
from .coloring import Coloring, CutSubgraph, cut_to_coloring
from .graph import Graph

ALL_RULES = ("bound", "class_size", "local", "disconnected")
DEFAULT_BUDGET = 1_000_000


@dataclass
class SolveStats:
    nodes: int = 0
    leaves: int = 0
    pruned_bound: int = 0
    pruned_class_size: int = 0
    pruned_local: int = 0
    pruned_disconnected: int = 0
    wall_time: float = 0.0

    def add(self, other: "SolveStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.pruned_bound += other.pruned_bound
        self.pruned_class_size += other.pruned_class_size
        self.pruned_local += other.pruned_local
        self.pruned_disconnected += other.pruned_disconnected


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Coloring | None
    status: str  # "optimal" | "budget_exhausted"
    upper_bound: int
    stats: SolveStats


@dataclass(frozen=True)
class DecideResult:
    answer: str  # "yes" | "no" | "unknown"
    witness: Coloring | None


class _OutOfBudget(Exception):
    pass


class _TargetReached(Exception):
    pass


class _Task:
    """One independent search task: a fixed canonical prefix plus a full
    depth-first completion with its own budget and its own incumbent.

    Vertices are searched in (decreasing degree, index) order; vertex i
    may join any open class or open class number `open` (canonical form,
    so color permutations are never revisited).
    """

    def __init__(self, n, adj, deg, bits, prefix, budget, rules, target, min_class):
        self.n = n
        self.adj = adj
        self.deg = deg
        self.bits = bits
        self.prefix = prefix
        self.budget = budget
        self.rules = frozenset(rules)
        self.target = target
        self.min_class = min_class
        self.stats = SolveStats()
        self.best = 0
        self.best_assign: tuple[int, ...] | None = None
        self.exhausted = False

        self.class_of = [-1] * n
        self.same = [0] * n
        self.unassigned_cnt = list(deg)
        self.unassigned_mask = (1 << n) - 1
        self.open = 0
        self.class_sizes: list[int] = []
        self.class_need: list[int] = []
        self.class_masks: list[int] = []
        self.class_adj: list[int] = []
        self.deficit = 0

    def run(self):
        try:
            self._enter(0)
        except _OutOfBudget:
            self.exhausted = True
        except _TargetReached:
            pass
        return self

    def _enter(self, i):
        if i < len(self.prefix):
            c = self.prefix[i]
            self.stats.nodes += 1
            if self.stats.nodes > self.budget:
                raise _OutOfBudget
            undo = self._assign(i, c)
            if self._admissible(i, c):
                self._enter(i + 1)
            self._undo(i, c, undo)
            return
        if i == self.n:
            self._leaf()
            return
        for c in range(self.open + 1):
            self.stats.nodes += 1
            if self.stats.nodes > self.budget:
                raise _OutOfBudget
            undo = self._assign(i, c)
            if self._admissible(i, c):
                self._enter(i + 1)
            self._undo(i, c, undo)

    def _leaf(self):
        self.stats.leaves += 1
        for v in range(self.n):
            if 2 * self.same[v] < self.deg[v]:
                return
        if self.open > self.best:
            self.best = self.open
            self.best_assign = tuple(self.class_of)
            if self.target is not None and self.best >= self.target:
                raise _TargetReached

    def _assign(self, u, c):
        if c == self.open:
            self.open += 1
            self.class_sizes.append(0)
            self.class_need.append(0)
            self.class_masks.append(0)
            self.class_adj.append(0)
        old_need = self.class_need[c]
        old_adj = self.class_adj[c]
        old_def = max(0, old_need - self.class_sizes[c])
        self.class_need[c] = max(old_need, (self.deg[u] + 1) // 2 + 1)
        self.class_sizes[c] += 1
        self.deficit += max(0, self.class_need[c] - self.class_sizes[c]) - old_def
        self.class_masks[c] |= 1 << u
        self.class_adj[c] |= self.bits[u]
        self.class_of[u] = c
        self.unassigned_mask &= ~(1 << u)
        same_u = 0
        for w in self.adj[u]:
            if self.class_of[w] != -1:
                self.unassigned_cnt[w] -= 1
                if self.class_of[w] == c:
                    self.same[w] += 1
                    same_u += 1
        self.same[u] = same_u
        return old_need, old_adj

    def _undo(self, u, c, undo):
        old_need, old_adj = undo
        for w in self.adj[u]:
            if self.class_of[w] != -1 and w != u:
                self.unassigned_cnt[w] += 1
                if self.class_of[w] == c:
                    self.same[w] -= 1
        self.same[u] = 0
        self.class_of[u] = -1
        self.unassigned_mask |= 1 << u
        new_def = max(0, self.class_need[c] - self.class_sizes[c])
        self.class_sizes[c] -= 1
        self.class_need[c] = old_need
        self.class_adj[c] = old_adj
        self.class_masks[c] &= ~(1 << u)
        self.deficit += max(0, old_need - self.class_sizes[c]) - new_def
        if self.class_sizes[c] == 0:
            self.open -= 1
            self.class_sizes.pop()
            self.class_need.pop()
            self.class_masks.pop()
            self.class_adj.pop()

    def _admissible(self, i, c):
        rules = self.rules
        if "local" in rules:
            u = i
            if 2 * (self.same[u] + self.unassigned_cnt[u]) < self.deg[u]:
                self.stats.pruned_local += 1
                return False
            for w in self.adj[u]:
                if self.class_of[w] != -1:
                    if 2 * (self.same[w] + self.unassigned_cnt[w]) < self.deg[w]:
                        self.stats.pruned_local += 1
                        return False
        remaining = self.n - i - 1
        if "class_size" in rules and self.deficit > remaining:
            self.stats.pruned_class_size += 1
            return False
        if "bound" in rules:
            spare = remaining - self.deficit
            potential = self.open + (spare // self.min_class if spare > 0 else 0)
            if potential <= self.best:
                self.stats.pruned_bound += 1
                return False
        if "disconnected" in rules:
            for j in range(self.open):
                if self.class_adj[j] & self.unassigned_mask == 0:
                    if not self._mask_connected(self.class_masks[j]):
                        self.stats.pruned_disconnected += 1
                        return False
        return True

    def _mask_connected(self, mask):
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            reach = 0
            rest = frontier
            while rest:
                low = rest & -rest
                reach |= self.bits[low.bit_length() - 1]
                rest ^= low
            frontier = reach & mask & ~seen
            seen |= frontier
        return seen == mask


def _component_tasks(n):
    return [(0,)] if n == 1 else [(0, 0), (0, 1)]


def _solve_component(sub: Graph, budget, workers, rules, target, stats: SolveStats):
    """Returns (value, assignment in sub's vertex order or None, exhausted)."""
    n = sub.n
    if n == 1:
        stats.nodes += 1
        stats.leaves += 1
        return 1, (0,), False
    order = sorted(range(n), key=lambda v: (-sub.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = [tuple(pos[w] for w in sub.adj[order[i]]) for i in range(n)]
    deg = [sub.degree(order[i]) for i in range(n)]
    bits = [0] * n
    for i in range(n):
        for w in adj[i]:
            bits[i] |= 1 << w
    min_class = (min(deg) + 1) // 2 + 1
    prefixes = _component_tasks(n)
    per_task = max(budget // len(prefixes), 1)
    tasks = [
        _Task(n, adj, deg, bits, p, per_task, rules, target, min_class)
        for p in prefixes
    ]
    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            done = list(pool.map(lambda t: t.run(), tasks))
    else:
        done = [t.run() for t in tasks]

    best_value = 0
    best_assign = None
    exhausted = False
    for t in done:
        stats.add(t.stats)
        exhausted = exhausted or t.exhausted
        if t.best_assign is None:
            continue
        orig = [0] * n
        for i in range(n):
            orig[order[i]] = t.best_assign[i]
        canon = Coloring(orig).assignment
        if t.best > best_value or (t.best == best_value and
                                   (best_assign is None or canon < best_assign)):
            best_value = t.best
            best_assign = canon
    if best_assign is None:
        # budget died before any leaf; the one-class coloring is always valid
        best_value = 1
        best_assign = (0,) * n
    return best_value, best_assign, exhausted


def component_upper_bound(sub: Graph) -> int:
    """Static upper bound on mc for one connected component."""
    if sub.n <= 1:
        return max(sub.n, 0)
    return max(1, min(bound_delta_Delta(sub), bound_delta(sub)))


def exact_mc(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1,
             rules=ALL_RULES) -> SolveResult:
    """Exact mc(g) by branch-and-bound, decomposed over components.

    `budget` caps search nodes per component (split evenly across that
    component's tasks).  On exhaustion the result says so and carries the
    best coloring found plus a still-valid upper bound; the value is then
    only a lower bound, never a silent guess.
    """
    t0 = time.perf_counter()
    stats = SolveStats()
    comps = g.components()
    assign = [0] * g.n
    offset = 0
    value = 0
    upper = 0
    complete = True
    any_exhausted = False
    for comp in comps:
        sub, labels = g.induced(comp)
        got, sub_assign, exhausted = _solve_component(
            sub, budget, workers, rules, None, stats)
        any_exhausted = any_exhausted or exhausted
        value += got
        upper += component_upper_bound(sub) if exhausted else got
        if sub_assign is None:
            complete = False
            continue
        for i, v in enumerate(labels):
            assign[v] = offset + sub_assign[i]
        offset += got
    stats.wall_time = time.perf_counter() - t0
    witness = Coloring(assign) if complete and g.n >= 0 else None
    status = "budget_exhausted" if any_exhausted else "optimal"
    if status == "optimal":
        upper = value
    return SolveResult(value, witness, status, upper, stats)


def decide_mc_at_least(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                       workers: int = 1, rules=ALL_RULES) -> DecideResult:
    """Early-exit decision: does g admit a majority coloring with at least
    k classes?  Components are solved in order until enough classes are
    guaranteed; untouched components then take the all-one coloring.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    t0 = time.perf_counter()
    comps = g.components()
    if k == 1:
        if g.n == 0:
            return DecideResult("no", None)
        return DecideResult("yes", Coloring([0] * g.n))
    subs = [g.induced(comp) for comp in comps]
    ubs = [component_upper_bound(sub) for sub, _ in subs]
    if sum(ubs) < k:
        return DecideResult("no", None)
    stats = SolveStats()
    assign = [0] * g.n
    offset = 0
    acc = 0
    any_exhausted = False
    for idx, (sub, labels) in enumerate(subs):
        rest = len(subs) - idx - 1
        need = k - acc - rest
        target = need if 1 <= need <= ubs[idx] else None
        got, sub_assign, exhausted = _solve_component(
            sub, budget, workers, rules, target, stats)
        any_exhausted = any_exhausted or exhausted
        acc += got
        if sub_assign is None:
            return DecideResult("unknown", None)
        for i, v in enumerate(labels):
            assign[v] = offset + sub_assign[i]
        offset += got
        if acc + rest >= k:
            for sub2, labels2 in subs[idx + 1:]:
                for v in labels2:
                    assign[v] = offset
                offset += 1
            return DecideResult("yes", Coloring(assign))
    del t0, stats
    if acc >= k:
        return DecideResult("yes", Coloring(assign))
    if any_exhausted:
        return DecideResult("unknown", None)
    return DecideResult("no", None)


def cut_oracle_mc(g: Graph) -> SolveResult:
    """mc(g) via exhaustive edge-subset enumeration (Proposition-style
    cut characterization).  Independent of the partition search; intended
    as a cross-check oracle for m <= 24.
    """
    t0 = time.perf_counter()
    if g.n == 0:
        return SolveResult(0, Coloring([]), "optimal", 0, SolveStats())
    best, code = _kernels.cut_oracle_scan(g)
    edges = g.edges()
    chosen = [edges[i] for i in range(g.m) if code >> i & 1]
    witness = cut_to_coloring(g, CutSubgraph.from_edges(g, chosen))
    if witness.k != best:
        raise AssertionError("cut oracle witness does not match its value")
    stats = SolveStats(nodes=1 << g.m, leaves=1 << g.m,
                       wall_time=time.perf_counter() - t0)
    return SolveResult(best, witness, "optimal", best, stats)


def chromatic_number(g: Graph, budget: int = 10_000_000) -> int:
    """Exact chromatic number by backtracking with canonical color order.

    Raises RuntimeError when the node budget runs out.
    """
    n = g.n
    if n == 0:
        return 0
    if g.m == 0:
        return 1
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = [tuple(pos[w] for w in g.adj[order[i]]) for i in range(n)]

    clique = []
    for i in range(n):
        if all(j in adj[i] for j in clique):
            clique.append(i)
    lower = len(clique)

    def greedy(seq):
        colors = {}
        used = 0
        for v in seq:
            taken = {colors[w] for w in adj[v] if w in colors}
            c = 0
            while c in taken:
                c += 1
            colors[v] = c
            used = max(used, c + 1)
        return used

    upper = min(greedy(range(n)), greedy(sorted(range(n), key=lambda i: order[i])))
    nodes = [0]

    def feasible(k):
        color = [-1] * n

        def rec(i, used):
            if i == n:
                return True
            nodes[0] += 1
            if nodes[0] > budget:
                raise RuntimeError("chromatic number search budget exhausted")
            cap = min(used + 1, k)
            for c in range(cap):
                if all(color[w] != c for w in adj[i]):
                    color[i] = c
                    if rec(i + 1, max(used, c + 1)):
                        return True
                    color[i] = -1
            return False

        return rec(0, 0)

    for k in range(lower, upper):
        if feasible(k):
            return k
    return upper
