"""Independent brute-force reference implementations for the tests.

Everything here works on (n, edge list) pairs with plain dicts and
lists, on purpose: no bitsets, no shared code with the package, so a
bug in the package kernels cannot hide behind the same bug here.
"""

from itertools import combinations


def neighbor_table(n, edges):
    nbr = {v: set() for v in range(n)}
    for u, v in edges:
        nbr[u].add(v)
        nbr[v].add(u)
    return nbr


def is_majority(n, edges, labels):
    """Definition check: every vertex has at least half its neighbors
    in its own class (2 * same >= deg)."""
    nbr = neighbor_table(n, edges)
    for v in range(n):
        same = sum(1 for w in nbr[v] if labels[w] == labels[v])
        if 2 * same < len(nbr[v]):
            return False
    return True


def _partitions(items):
    """All set partitions of a list, as lists of lists."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def brute_mc(n, edges):
    """Maximum class count over all surjective majority colorings,
    by exhausting every set partition of the vertices."""
    if n == 0:
        return 0
    nbr = neighbor_table(n, edges)
    best = 1
    for part in _partitions(list(range(n))):
        if len(part) <= best:
            continue
        labels = {}
        for color, cls in enumerate(part):
            for v in cls:
                labels[v] = color
        ok = True
        for v in range(n):
            same = sum(1 for w in nbr[v] if labels[w] == labels[v])
            if 2 * same < len(nbr[v]):
                ok = False
                break
        if ok:
            best = len(part)
    return best


def brute_chromatic(n, edges):
    """Smallest k admitting a proper coloring, tried in increasing k."""
    if n == 0:
        return 0
    nbr = neighbor_table(n, edges)
    if not edges:
        return 1

    def colorable(k):
        labels = [-1] * n

        def place(v):
            if v == n:
                return True
            for c in range(k):
                if all(labels[w] != c for w in nbr[v]):
                    labels[v] = c
                    if place(v + 1):
                        return True
                    labels[v] = -1
            return False

        return place(0)

    k = 2
    while not colorable(k):
        k += 1
    return k


def brute_mc_by_cuts(n, edges):
    """Second route: max components over edge subsets F with
    deg_F(v) <= deg(v) / 2 whose component coloring is majority-valid."""
    nbr = neighbor_table(n, edges)
    deg = {v: len(nbr[v]) for v in range(n)}
    best = 0
    m = len(edges)
    for size in range(m + 1):
        for subset in combinations(range(m), size):
            removed = set(subset)
            degf = {v: 0 for v in range(n)}
            for i in removed:
                u, v = edges[i]
                degf[u] += 1
                degf[v] += 1
            if any(2 * degf[v] > deg[v] for v in range(n)):
                continue
            kept = {v: set() for v in range(n)}
            for i, (u, v) in enumerate(edges):
                if i not in removed:
                    kept[u].add(v)
                    kept[v].add(u)
            labels = {}
            color = 0
            for start in range(n):
                if start in labels:
                    continue
                queue = [start]
                labels[start] = color
                while queue:
                    x = queue.pop()
                    for y in kept[x]:
                        if y not in labels:
                            labels[y] = color
                            queue.append(y)
                color += 1
            flat = [labels[v] for v in range(n)]
            if is_majority(n, edges, flat) and color > best:
                best = color
    return best


def random_graph(rng, n, max_m=None):
    """Uniform-ish random graph: each possible edge kept with the result
    truncated to max_m edges chosen by shuffle."""
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    if max_m is None:
        max_m = len(pairs)
    count = rng.randint(0, min(max_m, len(pairs)))
    return sorted(pairs[:count])


def random_tree(rng, n):
    """Random labeled tree: each vertex v >= 1 attaches to a random
    earlier vertex."""
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v))
    return edges
