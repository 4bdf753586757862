"""Exact minimum tessellation covers via set covering over edge-maximal tessellations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cliquegraph import clique_graph
from .coloring import edge_coloring_delta_plus_one, exact_chromatic_number, greedy_vertex_coloring
from .graph import CapacityError, DEFAULT_CLIQUE_CAP, Graph, maximal_cliques
from .tessellation import (
    Tessellation,
    TessellationCover,
    cover_from_edge_coloring,
    cover_from_kg_coloring,
    exposed_maximal_cliques,
    validate_cover,
)

DEFAULT_CATALOG_CAP = 200_000
DEFAULT_SEARCH_BUDGET = 10_000_000


class _BudgetExceeded(Exception):
    pass


class _Budget:
    __slots__ = ("limit", "spent")

    def __init__(self, limit: int):
        self.limit = limit
        self.spent = 0

    def tick(self):
        self.spent += 1
        if self.spent > self.limit:
            raise _BudgetExceeded


@dataclass
class TessellationCatalog:
    """Every edge-maximal tessellation of the host graph, exactly once.

    `edge_sets[i]` is the bitmask of `tessellations[i]`'s edges over `edges`;
    the list is sorted by descending edge count, then lexicographically, which
    fixes the search order everywhere downstream.
    """

    tessellations: list[Tessellation]
    edge_sets: list[int]
    edges: list[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.tessellations)


@dataclass
class SolveResult:
    t_number: int
    cover: TessellationCover
    optimal: bool
    nodes: int
    catalog_size: int

    def to_dict(self) -> dict:
        return {
            "t_number": self.t_number,
            "optimal": self.optimal,
            "nodes": self.nodes,
            "catalog_size": self.catalog_size,
            "cover": [[list(c) for c in t.cliques] for t in self.cover.tessellations],
        }


@dataclass(frozen=True)
class TessDecision:
    """Three-valued answer: 'yes' carries a validating cover, 'no' is proven, 'unknown' is a budget stop."""

    status: str  # "yes" | "no" | "unknown"
    cover: Optional[TessellationCover] = None


def enumerate_tessellations(g: Graph, cap: int = DEFAULT_CATALOG_CAP) -> TessellationCatalog:
    """All edge-maximal tessellations by backtracking over vertex-disjoint clique packings.

    Partitions with two parts whose union is again a clique are pruned during
    generation (merging them only gains edges, so such partitions are never
    edge-maximal); a final pass removes edge sets contained in another.
    """
    edges = g.edges()
    eidx = {e: i for i, e in enumerate(edges)}
    n = g.n
    nbr = [g.nbr_set(v) for v in range(n)]
    found: dict[int, tuple[tuple[int, ...], ...]] = {}
    assigned = [False] * n
    parts: list[tuple[int, ...]] = []
    part_sets: list[set[int]] = []

    def mergeable_with_existing(cand: list[int]) -> bool:
        for ps in part_sets:
            if all(set(cand) <= nbr[a] for a in ps):
                return True
        return False

    def record():
        mask = 0
        for p in parts:
            for i, u in enumerate(p):
                for w in p[i + 1:]:
                    mask |= 1 << eidx[(u, w)]
        if mask not in found:
            found[mask] = tuple(p for p in parts if len(p) >= 2)
            if len(found) > cap:
                raise CapacityError(f"more than {cap} tessellations")

    def cliques_at(v: int) -> list[list[int]]:
        cands = sorted(w for w in nbr[v] if not assigned[w])
        out: list[list[int]] = []
        cur = [v]

        def grow(idx: int):
            out.append(list(cur))
            for j in range(idx, len(cands)):
                w = cands[j]
                if all(w in nbr[x] for x in cur[1:]):
                    cur.append(w)
                    grow(j + 1)
                    cur.pop()

        grow(0)
        return out

    def rec(start: int):
        v = start
        while v < n and assigned[v]:
            v += 1
        if v == n:
            record()
            return
        for cand in cliques_at(v):
            if mergeable_with_existing(cand):
                continue
            for w in cand:
                assigned[w] = True
            parts.append(tuple(cand))
            part_sets.append(set(cand))
            rec(v + 1)
            parts.pop()
            part_sets.pop()
            for w in cand:
                assigned[w] = False

    rec(0)

    items = sorted(
        found.items(), key=lambda kv: (-bin(kv[0]).count("1"), kv[1])
    )
    kept_masks: list[int] = []
    kept_parts: list[tuple[tuple[int, ...], ...]] = []
    for mask, p in items:
        if any(mask | km == km for km in kept_masks):
            continue  # edge set contained in an earlier (larger) one
        kept_masks.append(mask)
        kept_parts.append(p)
    tessellations = [Tessellation.of(p) for p in kept_parts]
    return TessellationCatalog(tessellations, kept_masks, edges)


def greedy_cover(g: Graph) -> TessellationCover:
    """Cover built pass by pass; each pass grows disjoint cliques maximizing newly covered edges."""
    uncovered = set(g.edges())
    nbr = [g.nbr_set(v) for v in range(g.n)]
    rounds: list[list[list[int]]] = []
    while uncovered:
        assigned = [False] * g.n
        parts: list[list[int]] = []
        progress = 0
        for u in range(g.n):
            if assigned[u]:
                continue
            clique = [u]
            gained = 0
            while True:
                best_w = None
                best_gain = 0
                for w in sorted(nbr[u]):
                    if assigned[w] or w in clique:
                        continue
                    if not all(w in nbr[x] for x in clique):
                        continue
                    key_gain = sum(
                        1
                        for x in clique
                        if ((x, w) if x < w else (w, x)) in uncovered
                    )
                    if key_gain > best_gain:
                        best_gain, best_w = key_gain, w
                if best_w is None:
                    break
                clique.append(best_w)
                gained += best_gain
            if gained > 0:
                for w in clique:
                    assigned[w] = True
                parts.append(sorted(clique))
                progress += gained
        assert progress > 0, "greedy pass made no progress"
        rounds.append(parts)
        for p in parts:
            for i, a in enumerate(p):
                for b in p[i + 1:]:
                    uncovered.discard((a, b))
    return TessellationCover.of(rounds)


def _prepare_search(catalog: TessellationCatalog):
    m = len(catalog.edges)
    full = (1 << m) - 1
    sets_for_edge: list[list[int]] = [[] for _ in range(m)]
    for si, mask in enumerate(catalog.edge_sets):
        mm = mask
        while mm:
            bit = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            sets_for_edge[bit].append(si)
    max_size = max((bin(mask).count("1") for mask in catalog.edge_sets), default=1)
    return full, sets_for_edge, max_size


def _cover_from_selection(catalog: TessellationCatalog, selection: list[int]) -> TessellationCover:
    return TessellationCover(tuple(catalog.tessellations[i] for i in sorted(selection)))


def min_cover_exact(
    g: Graph,
    budget: int = DEFAULT_SEARCH_BUDGET,
    catalog_cap: int = DEFAULT_CATALOG_CAP,
) -> SolveResult:
    """Minimum-cardinality tessellation cover by branch and bound on the catalog.

    Branches on the uncovered edge lying in the fewest catalog sets; the
    greedy cover seeds the incumbent size.  When the node budget runs out the
    best cover found so far is returned with optimal=False.
    """
    if g.m == 0:
        return SolveResult(0, TessellationCover(()), True, 0, 0)
    catalog = enumerate_tessellations(g, cap=catalog_cap)
    full, sets_for_edge, max_size = _prepare_search(catalog)
    seed = greedy_cover(g)
    best = seed.size + 1
    best_sel: Optional[list[int]] = None
    edge_sets = catalog.edge_sets
    bud = _Budget(budget)

    def dfs(uncovered: int, chosen: list[int]):
        nonlocal best, best_sel
        bud.tick()
        if uncovered == 0:
            if len(chosen) < best:
                best = len(chosen)
                best_sel = list(chosen)
            return
        need = (bin(uncovered).count("1") + max_size - 1) // max_size
        if len(chosen) + max(need, 1) >= best:
            return
        pick = -1
        pick_count = None
        mm = uncovered
        while mm:
            bit = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            cnt = len(sets_for_edge[bit])
            if pick_count is None or cnt < pick_count:
                pick, pick_count = bit, cnt
        for si in sets_for_edge[pick]:
            chosen.append(si)
            dfs(uncovered & ~edge_sets[si], chosen)
            chosen.pop()

    optimal = True
    try:
        dfs(full, [])
    except _BudgetExceeded:
        optimal = False

    if best_sel is not None:
        cover = _cover_from_selection(catalog, best_sel)
        t_number = best
    else:
        cover = seed
        t_number = seed.size
    assert validate_cover(g, cover).ok
    return SolveResult(t_number, cover, optimal, bud.spent, catalog.size)


def is_t_tessellable(
    g: Graph,
    t: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    catalog_cap: int = DEFAULT_CATALOG_CAP,
) -> TessDecision:
    """Find a cover of size at most t, prove none exists, or stop at the budget.

    Cheap certificates come first (greedy cover, maxdeg+1 edge coloring,
    clique-graph coloring), each checked by the cover validator; a 'no' is
    only ever produced by a completed catalog search.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if g.m == 0:
        return TessDecision("yes", TessellationCover(()))
    if t == 0:
        return TessDecision("no")

    seed = greedy_cover(g)
    if seed.size <= t:
        return TessDecision("yes", seed)
    ec = edge_coloring_delta_plus_one(g)
    if ec.count <= t:
        return TessDecision("yes", cover_from_edge_coloring(g, ec.as_dict()))
    try:
        kgr = clique_graph(g, cap=DEFAULT_CLIQUE_CAP)
        col = greedy_vertex_coloring(kgr.kg)
        if col.count > t and kgr.kg.n <= 64:
            exact = exact_chromatic_number(kgr.kg, budget=min(budget, 200_000))
            if exact is not None:
                col = exact
        if col.count <= t:
            cover = cover_from_kg_coloring(g, kgr, col.colors)
            assert validate_cover(g, cover).ok
            return TessDecision("yes", cover)
    except CapacityError:
        pass

    catalog = enumerate_tessellations(g, cap=catalog_cap)
    full, sets_for_edge, max_size = _prepare_search(catalog)
    edge_sets = catalog.edge_sets
    bud = _Budget(budget)
    found: Optional[list[int]] = None

    def dfs(uncovered: int, chosen: list[int]) -> bool:
        nonlocal found
        bud.tick()
        if uncovered == 0:
            found = list(chosen)
            return True
        need = (bin(uncovered).count("1") + max_size - 1) // max_size
        if len(chosen) + max(need, 1) > t:
            return False
        pick = -1
        pick_count = None
        mm = uncovered
        while mm:
            bit = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            cnt = len(sets_for_edge[bit])
            if pick_count is None or cnt < pick_count:
                pick, pick_count = bit, cnt
        for si in sets_for_edge[pick]:
            chosen.append(si)
            if dfs(uncovered & ~edge_sets[si], chosen):
                return True
            chosen.pop()
        return False

    try:
        if dfs(full, []):
            cover = _cover_from_selection(catalog, found)
            assert validate_cover(g, cover).ok
            return TessDecision("yes", cover)
        return TessDecision("no")
    except _BudgetExceeded:
        return TessDecision("unknown")


def _enumerate_min_covers(g: Graph, budget: int, catalog_cap: int):
    """Yield every minimum cover assembled from edge-maximal tessellations.

    Extending any tessellation to an edge-maximal one only adds edges and
    keeps maximal-clique parts intact, so both exposure predicates below are
    unchanged by restricting to the catalog.
    """
    result = min_cover_exact(g, budget=budget, catalog_cap=catalog_cap)
    if not result.optimal:
        raise _BudgetExceeded
    target = result.t_number
    catalog = enumerate_tessellations(g, cap=catalog_cap)
    edge_sets = catalog.edge_sets
    k = catalog.size
    m = len(catalog.edges)
    full = (1 << m) - 1
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] | edge_sets[i]
    bud = _Budget(budget)
    chosen: list[int] = []

    def rec(i: int, uncovered: int):
        bud.tick()
        if uncovered == 0:
            if len(chosen) == target:
                yield list(chosen)
            return
        if len(chosen) == target or uncovered & ~suffix[i]:
            return
        for j in range(i, k):
            add = edge_sets[j] & uncovered
            if not add:
                continue  # a minimum cover never carries a set with no private gain
            if uncovered & ~suffix[j]:
                break
            chosen.append(j)
            yield from rec(j + 1, uncovered & ~edge_sets[j])
            chosen.pop()

    def covers():
        for sel in rec(0, full):
            yield TessellationCover(tuple(catalog.tessellations[i] for i in sel))

    return covers()


def exists_min_cover_without_exposed(
    g: Graph,
    budget: int = DEFAULT_SEARCH_BUDGET,
    catalog_cap: int = DEFAULT_CATALOG_CAP,
) -> Optional[bool]:
    """Whether some minimum cover leaves no maximal clique exposed. None = budget ran out."""
    if g.m == 0:
        # The minimum cover is empty; any vertex leaves its singleton clique exposed.
        return g.n == 0
    try:
        for cover in _enumerate_min_covers(g, budget, catalog_cap):
            if not exposed_maximal_cliques(g, cover):
                return True
        return False
    except _BudgetExceeded:
        return None


def all_min_covers_need_cliqueless_tessellation(
    g: Graph,
    budget: int = DEFAULT_SEARCH_BUDGET,
    catalog_cap: int = DEFAULT_CATALOG_CAP,
) -> Optional[bool]:
    """Whether every minimum cover has a tessellation containing no maximal clique of g.

    A tessellation 'contains' a maximal clique when the clique is one of its
    parts; implicit singleton parts count, so any isolated vertex makes every
    tessellation contain one.  None = budget ran out.
    """
    if g.m == 0:
        return False
    maximal = set(maximal_cliques(g))
    has_isolated = any(g.degree(v) == 0 for v in range(g.n))
    try:
        for cover in _enumerate_min_covers(g, budget, catalog_cap):
            every_tess_has_clique = True
            for tess in cover.tessellations:
                if has_isolated:
                    continue  # isolated vertices are implicit parts of every tessellation
                if not any(part in maximal for part in tess.cliques):
                    every_tess_has_clique = False
                    break
            if every_tess_has_clique:
                return False
        return True
    except _BudgetExceeded:
        return None
