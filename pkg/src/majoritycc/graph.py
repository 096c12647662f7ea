"""Core graph type: simple undirected graphs with dual adjacency storage.

Vertices are labelled 0..n-1.  Adjacency is kept twice: as sorted neighbour
lists, and (for graphs with at most BITSET_CAP vertices) as per-vertex
bitmasks stored in Python ints, which the solvers use for fast neighbourhood
arithmetic.  Larger graphs keep only the lists; everything still works,
just slower.

The module also owns the plain-text edge-list format:

    c optional comment lines
    p <n> <m>
    <u> <v>          (m edge lines)

and a corpus variant (several such blocks separated by blank lines).
"""

from __future__ import annotations

from collections import deque

BITSET_CAP = 128


class GraphError(ValueError):
    """Malformed graph input: bad edges or bad edge-list text."""


class Graph:
    """Immutable simple undirected graph.

    Attributes:
        n:    vertex count.
        m:    edge count.
        adj:  tuple of sorted neighbour tuples, one per vertex.
        bits: tuple of adjacency bitmasks (ints), or None when n > BITSET_CAP.
    """

    __slots__ = ("n", "m", "adj", "bits")

    def __init__(self, n: int, edges):
        if n < 0:
            raise GraphError("vertex count must be nonnegative, got %d" % n)
        seen = set()
        neigh = [[] for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError("edge (%s, %s) out of range for n=%d" % (u, v, n))
            if u == v:
                raise GraphError("self-loop at vertex %d" % u)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError("duplicate edge (%d, %d)" % key)
            seen.add(key)
            neigh[u].append(v)
            neigh[v].append(u)
        self.n = n
        self.m = len(seen)
        self.adj = tuple(tuple(sorted(ns)) for ns in neigh)
        if n <= BITSET_CAP:
            masks = [0] * n
            for u, v in seen:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self.bits = tuple(masks)
        else:
            self.bits = None

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        return cls(n, edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(ns) for ns in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    out.append((u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        if self.bits is not None and 0 <= v < self.n:
            return bool(self.bits[u] >> v & 1)
        return v in self.adj[u]

    def bitmasks(self) -> tuple[int, ...]:
        """Adjacency bitmasks, computed on the fly above BITSET_CAP."""
        if self.bits is not None:
            return self.bits
        masks = [0] * self.n
        for u in range(self.n):
            for v in self.adj[u]:
                masks[u] |= 1 << v
        return tuple(masks)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError("no edge (%d, %d) to delete" % (u, v))
        key = (u, v) if u < v else (v, u)
        return Graph(self.n, [e for e in self.edges() if e != key])

    def delete_edges(self, to_remove) -> "Graph":
        drop = set()
        for u, v in to_remove:
            if not self.has_edge(u, v):
                raise GraphError("no edge (%d, %d) to delete" % (u, v))
            drop.add((u, v) if u < v else (v, u))
        return Graph(self.n, [e for e in self.edges() if e not in drop])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        comps = []
        seen = [False] * self.n
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v in self.adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices) -> tuple["Graph", list[int]]:
        """Induced subgraph on the given vertices.

        Returns (subgraph, labels) where labels[i] is the original label of
        the subgraph's vertex i.  Vertices are taken in sorted order.
        """
        labels = sorted(vertices)
        index = {v: i for i, v in enumerate(labels)}
        sub_edges = []
        for u in labels:
            for v in self.adj[u]:
                if u < v and v in index:
                    sub_edges.append((index[u], index[v]))
        return Graph(len(labels), sub_edges), labels

    def girth(self) -> tuple[int, list[int]] | tuple[None, None]:
        """Length of a shortest cycle plus one witness cycle.

        Returns (None, None) for forests.  The witness is the first
        shortest cycle found under BFS from vertices 0, 1, ... with
        neighbours scanned in sorted order, so it is deterministic.
        """
        best_len = None
        best_cycle = None
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                # cycles through root longer than the current best cannot win
                if best_len is not None and 2 * dist[u] >= best_len:
                    continue
                for v in self.adj[u]:
                    if dist[v] == -1:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        queue.append(v)
                    elif parent[u] != v and parent[v] != u:
                        length = dist[u] + dist[v] + 1
                        if best_len is None or length < best_len:
                            cycle = self._walk_cycle(u, v, parent)
                            if cycle is not None and len(cycle) == length:
                                best_len = length
                                best_cycle = cycle
        if best_len is None:
            return None, None
        return best_len, best_cycle

    @staticmethod
    def _walk_cycle(u: int, v: int, parent: list[int]) -> list[int] | None:
        """Join the BFS paths root..u and root..v into a cycle through (u,v).

        Returns None when the two paths share a vertex besides the root
        (such a candidate is never the shortest, so dropping it is safe).
        """
        path_u = [u]
        while parent[path_u[-1]] != -1:
            path_u.append(parent[path_u[-1]])
        path_v = [v]
        while parent[path_v[-1]] != -1:
            path_v.append(parent[path_v[-1]])
        shared = set(path_u) & set(path_v)
        if len(shared) != 1:
            return None
        return path_u[::-1] + path_v[:-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return "Graph(n=%d, m=%d)" % (self.n, self.m)


def parse_graph(text: str) -> Graph:
    """Parse one edge-list document into a Graph.

    Raises GraphError with a 1-based line number on malformed input.
    """
    n = m = None
    edges = []
    edge_set = set()
    header_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 3 or parts[0] != "p":
                raise GraphError("line %d: expected header 'p <n> <m>'" % lineno)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError("line %d: non-integer header fields" % lineno) from None
            if n < 0 or m < 0:
                raise GraphError("line %d: negative header fields" % lineno)
            header_line = lineno
            continue
        if len(parts) != 2:
            raise GraphError("line %d: expected edge '<u> <v>'" % lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError("line %d: non-integer edge endpoints" % lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError("line %d: vertex index out of range" % lineno)
        if u == v:
            raise GraphError("line %d: self-loop" % lineno)
        key = (u, v) if u < v else (v, u)
        if key in edge_set:
            raise GraphError("line %d: duplicate edge" % lineno)
        edge_set.add(key)
        edges.append(key)
    if n is None:
        raise GraphError("missing header line 'p <n> <m>'")
    if len(edges) != m:
        raise GraphError(
            "header at line %d declares m=%d but %d edge lines found"
            % (header_line, m, len(edges))
        )
    return Graph(n, edges)


def emit_graph(g: Graph, comments=()) -> str:
    """Serialize a Graph to the edge-list format (inverse of parse_graph)."""
    lines = ["p %d %d" % (g.n, g.m)]
    for c in comments:
        lines.append("c %s" % c)
    for u, v in g.edges():
        lines.append("%d %d" % (u, v))
    return "\n".join(lines) + "\n"


def parse_corpus(text: str) -> list[Graph]:
    """Parse a corpus: edge-list blocks separated by one or more blank lines."""
    graphs = []
    block: list[str] = []
    for raw in text.splitlines():
        if raw.strip():
            block.append(raw)
        elif block:
            graphs.append(parse_graph("\n".join(block)))
            block = []
    if block:
        graphs.append(parse_graph("\n".join(block)))
    return graphs


def graph_comments(text: str) -> list[str]:
    """Comment payloads ('c ' lines) of an edge-list document, in order."""
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line == "c":
            out.append("")
        elif line.startswith("c "):
            out.append(line[2:])
    return out
