"""Vertex and edge coloring: greedy and exact engines plus classical constructive schemes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, bipartition, degeneracy_order

DEFAULT_COLOR_BUDGET = 10_000_000


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]
    count: int


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[tuple[tuple[int, int], int], ...]  # ((u, v), color) with u < v, sorted
    count: int

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.colors)


def is_proper_vertex_coloring(g: Graph, colors) -> bool:
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


def is_proper_edge_coloring(g: Graph, colors: dict[tuple[int, int], int]) -> bool:
    if sorted(colors) != g.edges():
        return False
    seen: dict[tuple[int, int], bool] = {}
    for (u, v), c in colors.items():
        for x in (u, v):
            if (x, c) in seen:
                return False
            seen[(x, c)] = True
    return True


def _make_edge_coloring(colors: dict[tuple[int, int], int]) -> EdgeColoring:
    return EdgeColoring(tuple(sorted(colors.items())), len(set(colors.values())))


def greedy_vertex_coloring(g: Graph) -> VertexColoring:
    """Greedy coloring in reverse degeneracy order; uses at most degeneracy+1 <= maxdeg+1 colors."""
    order = degeneracy_order(g)
    colors = [-1] * g.n
    for v in reversed(order):
        used = {colors[w] for w in g.adj[v] if colors[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    count = len(set(colors)) if g.n else 0
    return VertexColoring(tuple(colors), count)


def greedy_clique(g: Graph) -> tuple[int, ...]:
    """A large clique found greedily; a valid chromatic-number lower bound witness."""
    best: tuple[int, ...] = ()
    by_deg = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for start in by_deg:
        clique = [start]
        cand = [w for w in by_deg if w != start and w in g.nbr_set(start)]
        for w in cand:
            if all(w in g.nbr_set(x) for x in clique):
                clique.append(w)
        if len(clique) > len(best):
            best = tuple(sorted(clique))
    return best


class _Budget:
    __slots__ = ("left",)

    def __init__(self, nodes: int):
        self.left = nodes

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


def _decide_vertex_coloring(g: Graph, k: int, budget: _Budget):
    """First canonical proper k-coloring in index order, or 'no'/'unknown'."""
    n = g.n
    if k <= 0:
        return ("yes", []) if n == 0 else ("no", None)
    full = (1 << k) - 1
    lower_nbrs = [[w for w in g.adj[v] if w < v] for v in range(n)]
    colors = [-1] * n

    def dfs(v: int, max_used: int):
        if v == n:
            return "yes"
        if not budget.spend():
            return "unknown"
        used = 0
        for w in lower_nbrs[v]:
            used |= 1 << colors[w]
        avail = full & ~used & ((1 << min(k, max_used + 2)) - 1)
        while avail:
            c = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            colors[v] = c
            res = dfs(v + 1, max(max_used, c))
            if res != "no":
                return res
            colors[v] = -1
        return "no"

    res = dfs(0, -1)
    return (res, list(colors) if res == "yes" else None)


def exact_chromatic_number(g: Graph, budget: int = DEFAULT_COLOR_BUDGET) -> Optional[VertexColoring]:
    """Minimum proper vertex coloring, or None when the node budget runs out.

    Branch and bound: a greedy clique gives the lower bound, greedy coloring
    the upper; between them, canonical-color DFS decides each k in turn, so a
    returned coloring is always provably optimal.
    """
    if g.n == 0:
        return VertexColoring((), 0)
    greedy = greedy_vertex_coloring(g)
    lb = max(len(greedy_clique(g)), 1)
    if greedy.count == lb:
        return greedy
    b = _Budget(budget)
    for k in range(lb, greedy.count):
        status, colors = _decide_vertex_coloring(g, k, b)
        if status == "yes":
            return VertexColoring(tuple(colors), k)
        if status == "unknown":
            return None
    return greedy


def mycielskian(g: Graph) -> Graph:
    """Mycielski extension: one shadow per vertex plus an apex over the shadows (2n+1 vertices)."""
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    apex = 2 * n
    edges.extend((n + v, apex) for v in range(n))
    return Graph(2 * n + 1, edges)


# ---------------------------------------------------------------------------
# edge coloring


def edge_coloring_delta_plus_one(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most maxdeg+1 colors by fan rotation and path inversion."""
    delta = g.max_degree()
    if g.m == 0:
        return EdgeColoring((), 0)
    ncolors = delta + 1
    at: list[dict[int, int]] = [{} for _ in range(g.n)]  # vertex -> color -> neighbor
    colors: dict[tuple[int, int], int] = {}

    def free(x: int) -> int:
        c = 0
        while c in at[x]:
            c += 1
        return c

    def set_color(u: int, v: int, c: int):
        key = (u, v) if u < v else (v, u)
        old = colors.get(key)
        if old is not None:
            del at[u][old]
            del at[v][old]
        colors[key] = c
        at[u][c] = v
        at[v][c] = u

    def invert_path(start: int, d: int, c: int):
        # Maximal path from `start` alternating d, c, ...; swap the two colors on it.
        path = []
        cur, col = start, d
        while col in at[cur]:
            nxt = at[cur][col]
            path.append((cur, nxt, col))
            cur, col = nxt, (c if col == d else d)
        for a, b, col in path:
            key = (a, b) if a < b else (b, a)
            del at[a][col]
            del at[b][col]
            del colors[key]
        for a, b, col in path:
            set_color(a, b, c if col == d else d)

    for u, v in g.edges():
        # maximal fan of u starting at v
        fan = [v]
        fan_set = {v}
        while True:
            tail = fan[-1]
            nxt = None
            for c in range(ncolors):
                if c in at[tail]:
                    continue
                w = at[u].get(c)
                if w is not None and w not in fan_set:
                    nxt = w
                    break
            if nxt is None:
                break
            fan.append(nxt)
            fan_set.add(nxt)
        c = free(u)
        d = free(fan[-1])
        if c != d:
            invert_path(u, d, c)
        # first fan prefix that is still a fan and whose tip lacks d
        w_idx = None
        for i, x in enumerate(fan):
            if i > 0:
                col = colors[(u, fan[i]) if u < fan[i] else (fan[i], u)]
                if col in at[fan[i - 1]]:
                    break  # prefix beyond i-1 is no longer a fan
            if d not in at[x]:
                w_idx = i
                break
        assert w_idx is not None, "fan rotation invariant violated"
        for j in range(w_idx):
            key = (u, fan[j + 1]) if u < fan[j + 1] else (fan[j + 1], u)
            col = colors.pop(key)
            del at[u][col]
            del at[fan[j + 1]][col]
            set_color(u, fan[j], col)
        set_color(u, fan[w_idx], d)

    assert is_proper_edge_coloring(g, colors)
    return _make_edge_coloring(colors)


def bipartite_edge_coloring(g: Graph) -> EdgeColoring:
    """Proper edge coloring of a bipartite graph with exactly maxdeg colors (path swapping)."""
    if bipartition(g) is None:
        raise ValueError("input graph is not bipartite")
    delta = g.max_degree()
    if g.m == 0:
        return EdgeColoring((), 0)
    at: list[dict[int, int]] = [{} for _ in range(g.n)]
    colors: dict[tuple[int, int], int] = {}

    def free(x: int) -> int:
        c = 0
        while c in at[x]:
            c += 1
        return c

    for u, v in g.edges():
        a, b = free(u), free(v)
        assert a < delta and b < delta
        if a != b:
            # make color a free at v by swapping the a/b path that starts at v
            path = []
            cur, col = v, a
            while col in at[cur]:
                nxt = at[cur][col]
                path.append((cur, nxt, col))
                cur, col = nxt, (b if col == a else a)
            for x, y, col in path:
                key = (x, y) if x < y else (y, x)
                del at[x][col]
                del at[y][col]
                del colors[key]
            for x, y, col in path:
                new = b if col == a else a
                key = (x, y) if x < y else (y, x)
                colors[key] = new
                at[x][new] = y
                at[y][new] = x
        colors[(u, v)] = a
        at[u][a] = v
        at[v][a] = u

    assert is_proper_edge_coloring(g, colors)
    return _make_edge_coloring(colors)


def _decide_edge_coloring(g: Graph, k: int, budget: _Budget):
    edges = g.edges()
    m = len(edges)
    if k <= 0:
        return ("yes", {}) if m == 0 else ("no", None)
    full = (1 << k) - 1
    used = [0] * g.n  # color bitmask per vertex
    colored = [False] * m
    assignment: dict[tuple[int, int], int] = {}

    def dfs(done: int, max_used: int):
        if done == m:
            return "yes"
        if not budget.spend():
            return "unknown"
        # fail-first: branch on the uncolored edge with the fewest open colors
        pick = -1
        pick_avail = 0
        pick_count = k + 1
        for i in range(m):
            if colored[i]:
                continue
            u, v = edges[i]
            avail = full & ~(used[u] | used[v])
            cnt = bin(avail).count("1")
            if cnt == 0:
                return "no"
            if cnt < pick_count:
                pick, pick_count, pick_avail = i, cnt, avail
        u, v = edges[pick]
        avail = pick_avail & ((1 << min(k, max_used + 2)) - 1)
        colored[pick] = True
        while avail:
            c = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            bit = 1 << c
            used[u] |= bit
            used[v] |= bit
            assignment[(u, v)] = c
            res = dfs(done + 1, max(max_used, c))
            if res != "no":
                return res
            used[u] &= ~bit
            used[v] &= ~bit
            del assignment[(u, v)]
        colored[pick] = False
        return "no"

    res = dfs(0, -1)
    return (res, dict(assignment) if res == "yes" else None)


def exact_chromatic_index(g: Graph, budget: int = DEFAULT_COLOR_BUDGET) -> Optional[EdgeColoring]:
    """Minimum proper edge coloring, or None when the node budget runs out.

    The count is maxdeg or maxdeg+1; a single canonical DFS decides which.
    """
    if g.m == 0:
        return EdgeColoring((), 0)
    delta = g.max_degree()
    fallback = edge_coloring_delta_plus_one(g)
    if fallback.count <= delta:
        return fallback
    if g.m > delta * (g.n // 2):
        # color classes are matchings of at most n//2 edges, so delta colors
        # cannot reach m: the fan-built delta+1 coloring is already optimal
        return fallback
    status, assignment = _decide_edge_coloring(g, delta, _Budget(budget))
    if status == "yes":
        return _make_edge_coloring(assignment)
    if status == "unknown":
        return None
    return fallback
