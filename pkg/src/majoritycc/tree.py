"""Linear-time mc computation for trees and forests.

For a tree rooted at a non-leaf vertex, f(x) and g(x) give the largest
number of components obtainable from the subtree at x by deleting a
cut-feasible edge set, with the parent edge respectively kept or deleted.
With c = floor(deg(x)/2) and the d non-leaf children ordered by
decreasing h = g - f + 1:

    f(x) = 1 + sum of g over the first min(c, d) children
             + sum of (f - 1) over the rest
    g(x) = same with min(c-1, d) children

and at the root s = 1 + the f-style sum with budget floor(deg/2).
A matching edge set is extracted in preorder: a vertex whose parent edge
was deleted has budget floor(deg/2) - 1, otherwise floor(deg/2), and the
budget is spent on its highest-h non-leaf children.  Deleting the set
leaves exactly s components, which become the color classes.

Forests are solved per component and summed; components with at most two
vertices contribute 1 directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, CutSubgraph, cut_to_coloring
from .exact import SolveStats
from .graph import Graph


@dataclass(frozen=True)
class TreeDPState:
    root: int
    parent: tuple[int, ...]          # -1 at the root
    order: tuple[int, ...]           # postorder
    children: tuple[tuple[int, ...], ...]
    f: tuple[int, ...]               # 0 where undefined (leaves, root)
    g: tuple[int, ...]
    h: tuple[int, ...]
    ops: int


@dataclass(frozen=True)
class TreeResult:
    value: int
    witness: Coloring
    cut: CutSubgraph
    status: str
    upper_bound: int
    stats: SolveStats


def _check_forest(t: Graph) -> None:
    if t.m >= t.n - len(t.components()) + 1:
        raise ValueError("input contains a cycle")


def _sorted_nonleaf_children(t, state_children, h, x):
    """Non-leaf children of x by decreasing h, ties by vertex index."""
    ones = [y for y in state_children[x] if state_children[y] and h[y] == 1]
    zeros = [y for y in state_children[x] if state_children[y] and h[y] == 0]
    return ones + zeros


def compute_fgh(t: Graph, root: int) -> TreeDPState:
    """Postorder f/g/h pass over the tree t from the given root.

    The root must not be a leaf when t has three or more vertices.
    """
    n = t.n
    if n >= 3 and t.degree(root) < 2:
        raise ValueError("root must have degree >= 2")
    parent = [-1] * n
    order = []
    stack = [root]
    seen = [False] * n
    seen[root] = True
    ops = 0
    while stack:
        x = stack.pop()
        order.append(x)
        for y in t.adj[x]:
            ops += 1
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)
    if len(order) != n:
        raise ValueError("tree is not connected")
    order.reverse()  # postorder: children before parents
    children = [[] for _ in range(n)]
    for v in range(n):
        if parent[v] != -1:
            children[parent[v]].append(v)
    children = [tuple(cs) for cs in children]
    f = [0] * n
    g = [0] * n
    h = [0] * n
    for x in order:
        if x == root or not children[x]:
            continue
        nonleaf = _sorted_nonleaf_children(t, children, h, x)
        d = len(nonleaf)
        c = t.degree(x) // 2
        fx = 1
        gx = 1
        for i, y in enumerate(nonleaf):
            ops += 1
            fx += g[y] if i < min(c, d) else f[y] - 1
            gx += g[y] if i < min(c - 1, d) else f[y] - 1
        f[x] = fx
        g[x] = gx
        h[x] = gx - fx + 1
    return TreeDPState(root, tuple(parent), tuple(order), children,
                       tuple(f), tuple(g), tuple(h), ops)


def root_value(state: TreeDPState, t: Graph) -> int:
    """Component count s = mc(T) from a finished f/g/h pass."""
    root = state.root
    nonleaf = _sorted_nonleaf_children(t, state.children, state.h, root)
    budget = t.degree(root) // 2
    s = 1
    for i, y in enumerate(nonleaf):
        s += state.g[y] if i < min(budget, len(nonleaf)) else state.f[y] - 1
    return s


def extract_cut(state: TreeDPState, t: Graph) -> CutSubgraph:
    """Preorder pass realizing the f/g/h optimum as a deleted edge set."""
    cut: list[tuple[int, int]] = []
    stack = [(state.root, False)]
    while stack:
        x, parent_cut = stack.pop()
        nonleaf = _sorted_nonleaf_children(t, state.children, state.h, x)
        budget = t.degree(x) // 2 - (1 if parent_cut else 0)
        take = min(budget, len(nonleaf))
        chosen = set(nonleaf[:take])
        for y in nonleaf[:take]:
            cut.append((min(x, y), max(x, y)))
        for y in state.children[x]:
            if state.children[y]:
                stack.append((y, y in chosen))
    return CutSubgraph.from_edges(t, cut)


def tree_mc(t: Graph, workers: int = 1) -> TreeResult:
    """Exact mc for a forest, with witness coloring and deleted edge set.

    `workers` is accepted for interface parity; the pass is linear and
    runs single-threaded regardless.
    """
    _check_forest(t)
    stats = SolveStats()
    value = 0
    assign = [0] * t.n
    offset = 0
    cut_edges: list[tuple[int, int]] = []
    for comp in t.components():
        stats.leaves += 1
        if len(comp) <= 2:
            stats.nodes += len(comp)
            for v in comp:
                assign[v] = offset
            value += 1
            offset += 1
            continue
        sub, labels = t.induced(comp)
        root = min(v for v in range(sub.n) if sub.degree(v) >= 2)
        state = compute_fgh(sub, root)
        s = root_value(state, sub)
        sub_cut = extract_cut(state, sub)
        sub_col = cut_to_coloring(sub, sub_cut)
        if sub_col.k != s:
            raise AssertionError("extracted cut does not realize the f/g value")
        stats.nodes += state.ops
        for i, v in enumerate(labels):
            assign[v] = offset + sub_col.assignment[i]
        for a, b in sorted(sub_cut.edges):
            cut_edges.append((min(labels[a], labels[b]), max(labels[a], labels[b])))
        value += s
        offset += s
    witness = Coloring(assign)
    cut = CutSubgraph.from_edges(t, cut_edges)
    return TreeResult(value, witness, cut, "optimal", value, stats)
