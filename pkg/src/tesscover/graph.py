"""Simple graphs, multigraphs, parsing, and the structural predicates used everywhere else."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

DEFAULT_CLIQUE_CAP = 100_000


class GraphParseError(ValueError):
    """Malformed graph input. Carries the 1-based line number of the offending line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class CapacityError(RuntimeError):
    """An enumeration grew past its configured cap."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is stored as one sorted tuple of neighbors per vertex; neighbor
    sets are materialized lazily for membership tests.  No loops, no parallel
    edges; construction validates both.
    """

    __slots__ = ("n", "m", "adj", "_nbr_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        buckets: list[list[int]] = [[] for _ in range(n)]
        m = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            buckets[u].append(v)
            buckets[v].append(u)
            m += 1
        adj = []
        for u, nbrs in enumerate(buckets):
            nbrs.sort()
            for i in range(1, len(nbrs)):
                if nbrs[i] == nbrs[i - 1]:
                    raise ValueError(f"duplicate edge ({u}, {nbrs[i]})")
            adj.append(tuple(nbrs))
        self.n = n
        self.m = m
        self.adj = tuple(adj)
        self._nbr_sets: Optional[list[set[int]]] = None

    @classmethod
    def _from_sorted_adj(cls, n: int, adj: Sequence[Sequence[int]], m: int) -> "Graph":
        # Trusted fast path: caller guarantees sorted, symmetric, loop/dup free.
        g = cls.__new__(cls)
        g.n = n
        g.m = m
        g.adj = tuple(tuple(a) for a in adj)
        g._nbr_sets = None
        return g

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def nbr_set(self, v: int) -> set[int]:
        if self._nbr_sets is None:
            self._nbr_sets = [set(a) for a in self.adj]
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr_set(u)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack = [s]
            comp = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comp.sort()
            comps.append(comp)
        return comps

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Subgraph on `vertices` with dense renumbering; returns (subgraph, new->old map)."""
        order = sorted(vertices)
        pos = {v: i for i, v in enumerate(order)}
        adj = []
        m = 0
        for v in order:
            row = [pos[w] for w in self.adj[v] if w in pos]
            row.sort()
            m += len(row)
            adj.append(row)
        return Graph._from_sorted_adj(len(order), adj, m // 2), order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph: no loops, each stored pair carries a multiplicity >= 1."""

    n: int
    edges: tuple[tuple[int, int, int], ...]  # (u, v, multiplicity) with u < v, sorted

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        counts: dict[tuple[int, int], int] = {}
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            counts[key] = counts.get(key, 0) + 1
        return cls(n, tuple((u, v, k) for (u, v), k in sorted(counts.items())))

    def __post_init__(self):
        for u, v, k in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")
            if k < 1:
                raise ValueError(f"multiplicity {k} on edge ({u}, {v})")

    def edge_occurrences(self) -> list[tuple[int, int, int]]:
        """All (u, v, occurrence-index) triples, sorted; the vertex order of the line graph."""
        return [(u, v, i) for u, v, k in self.edges for i in range(k)]

    def total_edges(self) -> int:
        return sum(k for _, _, k in self.edges)

    def support(self) -> Graph:
        """The underlying simple graph."""
        return Graph(self.n, [(u, v) for u, v, _ in self.edges])


# ---------------------------------------------------------------------------
# parsing / formatting


def parse_edge_list(text: str) -> Graph:
    """Parse the `n m` + `u v` edge-list format (0 <= u < v < n, one edge per line)."""
    lines = text.split("\n")
    entries = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not entries:
        raise GraphParseError(1, "empty input, expected header 'n m'")
    line_no, header = entries[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphParseError(line_no, f"expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(line_no, f"non-integer header {header!r}") from None
    if n < 0 or m < 0:
        raise GraphParseError(line_no, "negative counts in header")
    if len(entries) - 1 != m:
        raise GraphParseError(
            entries[-1][0], f"expected {m} edge lines, found {len(entries) - 1}"
        )
    edges = []
    seen = set()
    for line_no, ln in entries[1:]:
        tok = ln.split()
        if len(tok) != 2:
            raise GraphParseError(line_no, f"expected 'u v', got {ln!r}")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise GraphParseError(line_no, f"non-integer vertex in {ln!r}") from None
        if u == v:
            raise GraphParseError(line_no, f"loop at vertex {u}")
        if not (0 <= u < v < n):
            if 0 <= v < u < n:
                raise GraphParseError(line_no, f"edge must be written 'u v' with u < v, got {ln!r}")
            raise GraphParseError(line_no, f"vertex out of range in {ln!r} (n={n})")
        if (u, v) in seen:
            raise GraphParseError(line_no, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (short or long form, optional '>>graph6<<' header)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError(1, "empty graph6 input")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphParseError(1, "invalid graph6 character")
    if data[0] == 63:  # long form marker '~'
        if len(data) < 4:
            raise GraphParseError(1, "truncated graph6 size")
        if data[1] == 63:
            raise GraphParseError(1, "graph6 8-byte sizes not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise GraphParseError(1, "truncated graph6 bit data")
    bits = []
    for b in body[:need]:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# structural predicates


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last vertex order via a bucket queue; ties resolved by lowest index."""
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    maxdeg = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    for v in range(n - 1, -1, -1):
        buckets[deg[v]].append(v)
    removed = [False] * n
    order = []
    cur = 0
    while len(order) < n:
        while cur <= maxdeg and not buckets[cur]:
            cur += 1
        if cur > maxdeg:
            break
        v = buckets[cur].pop()
        if removed[v] or deg[v] != cur:
            continue
        removed[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                buckets[deg[w]].append(w)
        cur = max(cur - 1, 0)
    return order


def maximal_cliques(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, each sorted, the list sorted lexicographically.

    Pivoting backtracking seeded along a degeneracy order.  Isolated vertices
    yield singleton cliques.  Raises CapacityError past `cap` cliques.
    """
    out: list[tuple[int, ...]] = []
    nbr = [g.nbr_set(v) for v in range(g.n)]

    def expand(r: list[int], p: set[int], x: set[int]):
        if not p and not x:
            out.append(tuple(sorted(r)))
            if len(out) > cap:
                raise CapacityError(f"more than {cap} maximal cliques")
            return
        pivot = -1
        best = -1
        for u in sorted(p | x):
            k = len(p & nbr[u])
            if k > best:
                best, pivot = k, u
        for v in sorted(p - nbr[pivot]):
            expand(r + [v], p & nbr[v], x & nbr[v])
            p.remove(v)
            x.add(v)

    order = degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = {w for w in g.adj[v] if pos[w] > pos[v]}
        earlier = {w for w in g.adj[v] if pos[w] < pos[v]}
        expand([v], later, earlier)
    out.sort()
    return out


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges():
        if g.nbr_set(u) & g.nbr_set(v):
            return False
    return True


def is_diamond_free(g: Graph) -> bool:
    """True iff no induced 4-cycle-with-a-chord, i.e. every edge's common neighborhood is a clique."""
    for u, v in g.edges():
        common = sorted(g.nbr_set(u) & g.nbr_set(v))
        for i, a in enumerate(common):
            na = g.nbr_set(a)
            for b in common[i + 1:]:
                if b not in na:
                    return False
    return True


def bipartition(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """A proper 2-sided vertex partition, or None when some component has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    left = [v for v in range(g.n) if color[v] == 0]
    right = [v for v in range(g.n) if color[v] == 1]
    return left, right


def is_chordal(g: Graph) -> bool:
    """Maximum-cardinality-search test for a perfect elimination ordering."""
    n = g.n
    if n == 0:
        return True
    weight = [0] * n
    visited = [False] * n
    order = []
    for _ in range(n):
        v = max((w for w in range(n) if not visited[w]), key=lambda w: (weight[w], -w))
        visited[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not visited[u]:
                weight[u] += 1
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.adj[v] if pos[u] < pos[v]]
        if not earlier:
            continue
        u = max(earlier, key=lambda w: pos[w])
        rest = set(earlier)
        rest.discard(u)
        if not rest <= g.nbr_set(u):
            return False
    return True


def true_twin_classes(g: Graph) -> list[list[int]]:
    """Partition of the vertices into equal-closed-neighborhood classes.

    Refinement is a single hash-and-confirm pass: vertices are bucketed by
    their closed neighborhood (dict keying does hash-bucket plus exact
    comparison), which is expected linear in n + m.
    """
    buckets: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        key = frozenset(g.adj[v] + (v,))
        buckets.setdefault(key, []).append(v)
    classes = [sorted(members) for members in buckets.values()]
    classes.sort()
    return classes


def is_cluster_graph(g: Graph) -> bool:
    """True iff every connected component induces a complete graph."""
    for comp in g.connected_components():
        k = len(comp)
        for v in comp:
            if g.degree(v) != k - 1:
                return False
    return True


def verify_kl_partition(
    g: Graph,
    stables: Sequence[Sequence[int]],
    cliques: Sequence[Sequence[int]],
) -> bool:
    """Check a claimed split of V into stable sets and cliques.

    Raises ValueError when the sets do not partition the vertex set; returns
    whether each stable set is independent and each clique set is complete.
    """
    seen: set[int] = set()
    total = 0
    for part in list(stables) + list(cliques):
        for v in part:
            if not (0 <= v < g.n):
                raise ValueError(f"vertex {v} out of range")
        seen.update(part)
        total += len(part)
    if total != g.n or len(seen) != g.n:
        raise ValueError("sets do not partition the vertex set")
    for part in stables:
        part = sorted(part)
        for i, u in enumerate(part):
            nu = g.nbr_set(u)
            for v in part[i + 1:]:
                if v in nu:
                    return False
    for part in cliques:
        part = sorted(part)
        for i, u in enumerate(part):
            nu = g.nbr_set(u)
            for v in part[i + 1:]:
                if v not in nu:
                    return False
    return True
