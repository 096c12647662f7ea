"""Generators for every named graph family used across the package.

Labeling conventions (fixed so witnesses are byte-reproducible):

* paths, cycles and their powers use vertex order 0..n-1;
* attachments get fresh labels after the base labels (star center is 0,
  wheel hub is n, arm vertices of the H family follow the cycle labels);
* the diamond chain is a canonical ring: diamond i occupies 4i..4i+3 with
  the degree-2 corners at 4i and 4i+2, and corner 4i+2 is joined to corner
  4(i+1 mod d).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .graph import Graph

FAMILY_PARAMS = {
    "path": ("n",),
    "cycle": ("n",),
    "power_path": ("n", "k"),
    "power_cycle": ("n", "k"),
    "complete": ("n",),
    "complete_bipartite": ("m", "n"),
    "complete_minus_edge": ("n",),
    "star": ("n",),
    "subdivided_star": ("n",),
    "wheel": ("n",),
    "windmill": ("m",),
    "petersen": (),
    "sharp_lower_H": ("n",),
    "sharp_upper_F": ("k",),
    "diamond_chain": ("d",),
    "extremal_max": ("n", "k"),
    "extremal_min": ("n", "k"),
    "random_tree": ("n", "seed"),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus integer parameters, e.g. ('power_path', (8, 3))."""

    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILY_PARAMS:
            raise ValueError("unknown family %r" % self.family)
        names = FAMILY_PARAMS[self.family]
        if len(self.params) != len(names):
            raise ValueError(
                "family %r takes %d parameter(s) %s, got %d"
                % (self.family, len(names), names, len(self.params))
            )

    def tag(self) -> str:
        """Comment payload, e.g. 'family=power_path n=8 k=3'."""
        names = FAMILY_PARAMS[self.family]
        parts = ["family=%s" % self.family]
        parts += ["%s=%d" % (name, p) for name, p in zip(names, self.params)]
        return " ".join(parts)


def parse_family_tag(comment: str) -> FamilySpec | None:
    """Recover a FamilySpec from a 'family=... a=1 b=2' comment payload."""
    fields = comment.split()
    if not fields or not fields[0].startswith("family="):
        return None
    family = fields[0][len("family="):]
    if family not in FAMILY_PARAMS:
        return None
    names = FAMILY_PARAMS[family]
    values = {}
    for field in fields[1:]:
        if "=" not in field:
            return None
        key, _, val = field.partition("=")
        try:
            values[key] = int(val)
        except ValueError:
            return None
    try:
        params = tuple(values[name] for name in names)
    except KeyError:
        return None
    return FamilySpec(family, params)


def _require(cond: bool, message: str):
    if not cond:
        raise ValueError(message)


def gen_path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_complete_minus_edge(n: int) -> Graph:
    _require(n >= 2, "complete graph minus an edge needs n >= 2")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                     if (i, j) != (0, 1)])


def gen_complete_bipartite(m: int, n: int) -> Graph:
    _require(m >= 1 and n >= 1, "complete bipartite graph needs m, n >= 1")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def gen_star(n: int) -> Graph:
    """Star with n leaves on n+1 vertices; center is vertex 0."""
    _require(n >= 0, "star needs n >= 0")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def gen_subdivided_star(n: int) -> Graph:
    """Star with n rays, every edge subdivided once: 2n+1 vertices.

    Center 0, middle vertices 1..n, leaf of ray i is n+i.
    """
    _require(n >= 0, "subdivided star needs n >= 0")
    edges = []
    for i in range(1, n + 1):
        edges.append((0, i))
        edges.append((i, n + i))
    return Graph(2 * n + 1, edges)


def gen_wheel(n: int) -> Graph:
    """Wheel: cycle 0..n-1 plus hub vertex n joined to every cycle vertex."""
    _require(n >= 3, "wheel needs cycle length n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)]
    return Graph(n + 1, edges)


def gen_windmill(m: int) -> Graph:
    """Dutch windmill (friendship graph): m triangles sharing vertex 0."""
    _require(m >= 2, "windmill needs m >= 2")
    edges = []
    for i in range(m):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * m + 1, edges)


def gen_petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner 5-star 5..9, spokes i-(i+5)."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, edges)


def gen_power_path(n: int, k: int) -> Graph:
    """k-th power of the path: i ~ j iff 0 < |i - j| <= k."""
    _require(n >= 1 and k >= 1, "power of a path needs n >= 1, k >= 1")
    return Graph(n, [(i, j) for i in range(n)
                     for j in range(i + 1, min(i + k, n - 1) + 1)])


def gen_power_cycle(n: int, k: int) -> Graph:
    """k-th power of the cycle: i ~ j iff cyclic distance <= k."""
    _require(n >= 3 and k >= 1, "power of a cycle needs n >= 3, k >= 1")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if min(j - i, n - (j - i)) <= k:
                edges.append((i, j))
    return Graph(n, edges)


def gen_sharp_lower_H(n: int) -> Graph:
    """Cycle of length n with a 5-vertex path hung on every cycle vertex.

    Each cycle vertex v_i is identified with the middle vertex of its own
    path on 5 vertices, adding four fresh vertices per i: labels n+4i..n+4i+3
    are (a, b, d, e) with edges a-b, b-v_i, v_i-d, d-e.  Total 5n vertices
    and 5n edges.
    """
    _require(n >= 3, "construction needs cycle length n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        a = n + 4 * i
        b, d, e = a + 1, a + 2, a + 3
        edges += [(a, b), (b, i), (i, d), (d, e)]
    return Graph(5 * n, edges)


def gen_sharp_upper_F(k: int) -> Graph:
    """Two odd cycles of length 2k+1 joined by two edges.

    First cycle u_1..u_{2k+1} on labels 0..2k, second cycle v_1..v_{2k+1} on
    labels 2k+1..4k+1, plus the edges u_1-v_1 and u_k-v_k.
    """
    _require(k >= 2, "construction needs k >= 2 (u_1 and u_k must differ)")
    c = 2 * k + 1
    edges = [(i, (i + 1) % c) for i in range(c)]
    edges += [(c + i, c + (i + 1) % c) for i in range(c)]
    eu1v1 = (0, c)
    eukvk = (k - 1, c + k - 1)
    edges += [eu1v1, eukvk]
    return Graph(2 * c, edges)


def gen_diamond_chain(d: int) -> Graph:
    """Ring of d diamonds (K_4 minus an edge), joined into a cubic graph.

    Diamond i sits on 4i..4i+3; its degree-2 corners are 4i and 4i+2, and
    corner 4i+2 is joined to corner 4(i+1 mod d) of the next diamond.
    """
    _require(d >= 2, "diamond chain needs d >= 2")
    edges = []
    for i in range(d):
        a, b, c, dd = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(a, b), (a, dd), (b, c), (b, dd), (c, dd)]
        edges.append((c, 4 * ((i + 1) % d)))
    return Graph(4 * d, edges)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniformly random labelled tree, deterministic for a fixed seed."""
    _require(n >= 1, "tree needs n >= 1")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph(n, _prufer_decode(seq, n))


def _prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def gen_extremal_max(n: int, k: int) -> Graph:
    """Densest n-vertex graph construction with majority chromatic number k.

    k = 1 is the complete graph.  Otherwise: if n-k is odd, a complete core
    on n-k+1 vertices plus k-1 isolated vertices; if n-k is even, a complete
    core on n-k+2 vertices minus the perfect matching (2i, 2i+1), plus k-2
    isolated vertices.  Core first, isolated vertices last.
    """
    _require(1 <= k <= n, "needs 1 <= k <= n")
    if k == 1:
        return gen_complete(n)
    if (n - k) % 2 == 1:
        core = n - k + 1
        edges = [(i, j) for i in range(core) for j in range(i + 1, core)]
    else:
        core = n - k + 2
        edges = [(i, j) for i in range(core) for j in range(i + 1, core)
                 if not (j == i + 1 and i % 2 == 0)]
    return Graph(n, edges)


def gen_extremal_min(n: int, k: int) -> Graph:
    """Sparsest n-vertex construction with majority chromatic number k.

    A star on n-k+1 vertices (center 0) plus k-1 isolated vertices.
    """
    _require(1 <= k <= n, "needs 1 <= k <= n")
    return Graph(n, [(0, i) for i in range(1, n - k + 1)])


def gen_named(spec: FamilySpec) -> Graph:
    """Build the graph a FamilySpec describes."""
    fam, p = spec.family, spec.params
    builders = {
        "path": gen_path,
        "cycle": gen_cycle,
        "power_path": gen_power_path,
        "power_cycle": gen_power_cycle,
        "complete": gen_complete,
        "complete_bipartite": gen_complete_bipartite,
        "complete_minus_edge": gen_complete_minus_edge,
        "star": gen_star,
        "subdivided_star": gen_subdivided_star,
        "wheel": gen_wheel,
        "windmill": gen_windmill,
        "petersen": gen_petersen,
        "sharp_lower_H": gen_sharp_lower_H,
        "sharp_upper_F": gen_sharp_upper_F,
        "diamond_chain": gen_diamond_chain,
        "extremal_max": gen_extremal_max,
        "extremal_min": gen_extremal_min,
        "random_tree": gen_random_tree,
    }
    return builders[fam](*p)
