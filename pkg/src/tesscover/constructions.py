"""Generators for the hardness constructions, plus the oracles that certify them at desk scale."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, bipartition, maximal_cliques
from .solver import (
    DEFAULT_CATALOG_CAP,
    DEFAULT_SEARCH_BUDGET,
    _Budget,
    _BudgetExceeded,
    enumerate_tessellations,
    is_t_tessellable,
)

Literal = tuple[int, bool]  # (variable index, polarity); True is the positive literal


@dataclass(frozen=True)
class NaeInstance:
    """A not-all-equal 3-SAT formula: every clause must get both a true and a false literal."""

    var_count: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != 3:
                raise ValueError("every clause needs exactly 3 literals")
            for var, _ in clause:
                if not (0 <= var < self.var_count):
                    raise ValueError(f"variable {var} out of range")


def parse_nae(text: str) -> NaeInstance:
    """Parse 'p nae3 <vars> <clauses>' followed by lines of three signed 1-based literals."""
    lines = [ln.strip() for ln in text.split("\n") if ln.strip()]
    if not lines or not lines[0].startswith("p nae3"):
        raise ValueError("expected header 'p nae3 <vars> <clauses>'")
    head = lines[0].split()
    if len(head) != 4:
        raise ValueError("malformed nae3 header")
    var_count, clause_count = int(head[2]), int(head[3])
    if len(lines) - 1 != clause_count:
        raise ValueError(f"expected {clause_count} clause lines, found {len(lines) - 1}")
    clauses = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 3:
            raise ValueError(f"clause needs 3 literals: {ln!r}")
        lits = []
        for tok in toks:
            val = int(tok)
            if val == 0:
                raise ValueError("literal 0 is not allowed")
            lits.append((abs(val) - 1, val > 0))
        clauses.append(tuple(lits))
    return NaeInstance(var_count, tuple(clauses))


def format_nae(inst: NaeInstance) -> str:
    out = [f"p nae3 {inst.var_count} {len(inst.clauses)}"]
    for clause in inst.clauses:
        out.append(" ".join(str(var + 1 if pol else -(var + 1)) for var, pol in clause))
    return "\n".join(out) + "\n"


def nae_brute_force(inst: NaeInstance) -> bool:
    """Exhaustive satisfiability check; guards at 25 variables."""
    if inst.var_count > 25:
        raise ValueError("too many variables for brute force")
    for assignment in range(1 << inst.var_count):
        ok = True
        for clause in inst.clauses:
            values = [((assignment >> var) & 1 == 1) == pol for var, pol in clause]
            if all(values) or not any(values):
                ok = False
                break
        if ok:
            return True
    return False


@dataclass(frozen=True)
class KlAnnotation:
    """A stable-set/clique vertex partition plus a role label per vertex."""

    stables: tuple[tuple[int, ...], ...]
    cliques: tuple[tuple[int, ...], ...]
    roles: tuple[tuple[int, str], ...]

    def role_map(self) -> dict[int, str]:
        return dict(self.roles)

    def to_dict(self) -> dict:
        return {
            "stables": [list(s) for s in self.stables],
            "cliques": [list(c) for c in self.cliques],
            "roles": {str(v): r for v, r in self.roles},
        }


# ---------------------------------------------------------------------------
# extremal extensions


def star_extension(g: Graph, chi_prime: int) -> Graph:
    """Attach a star with `chi_prime` leaves, one leaf identified with a minimum-degree vertex.

    Vertex layout: the input vertices, then the star center n, then the
    chi_prime - 1 leaves that were not identified.
    """
    if g.n == 0:
        raise ValueError("base graph needs at least one vertex")
    if chi_prime < 1:
        raise ValueError("chi_prime must be positive")
    target = min(range(g.n), key=lambda v: (g.degree(v), v))
    center = g.n
    edges = list(g.edges())
    edges.append((target, center))
    edges.extend((center, center + 1 + i) for i in range(chi_prime - 1))
    return Graph(g.n + chi_prime, edges)


def pendant_extension(g: Graph, v: int, chi_kg: int) -> Graph:
    """Add pendants to v until it lies in `chi_kg` maximal cliques; pendants are appended after n."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    current = Graph(g.n, g.edges())
    while sum(1 for c in maximal_cliques(current) if v in c) < chi_kg:
        edges = list(current.edges())
        edges.append((v, current.n))
        current = Graph(current.n + 1, edges)
    return current


# ---------------------------------------------------------------------------
# gadget replacement


@dataclass(frozen=True)
class GadgetSpec:
    """A vertex gadget: its graph, a middle triangle, and external triangles with attachment pairs."""

    graph: Graph
    middle_triangle: tuple[int, int, int]
    external_triangles: tuple[tuple[int, int, int], ...]
    attachment_vertices: tuple[tuple[int, int], ...]  # one pair per external triangle

    def validate(self):
        def check_triangle(tri):
            a, b, c = tri
            for x in tri:
                if not (0 <= x < self.graph.n):
                    raise ValueError(f"gadget vertex {x} out of range")
            if len({a, b, c}) != 3 or not (
                self.graph.has_edge(a, b)
                and self.graph.has_edge(a, c)
                and self.graph.has_edge(b, c)
            ):
                raise ValueError(f"{tri} is not a triangle of the gadget graph")

        check_triangle(self.middle_triangle)
        if len(self.attachment_vertices) != len(self.external_triangles):
            raise ValueError("one attachment pair is needed per external triangle")
        for tri, (a, b) in zip(self.external_triangles, self.attachment_vertices):
            check_triangle(tri)
            if a == b or a not in tri or b not in tri:
                raise ValueError(f"attachments {(a, b)} must be two vertices of triangle {tri}")


def gadget_spec_to_json(spec: GadgetSpec) -> str:
    return json.dumps(
        {
            "n": spec.graph.n,
            "edges": [list(e) for e in spec.graph.edges()],
            "middle_triangle": list(spec.middle_triangle),
            "external_triangles": [list(t) for t in spec.external_triangles],
            "attachment_vertices": [list(p) for p in spec.attachment_vertices],
        }
    )


def gadget_spec_from_json(text: str) -> GadgetSpec:
    data = json.loads(text)
    spec = GadgetSpec(
        Graph(data["n"], [tuple(e) for e in data["edges"]]),
        tuple(data["middle_triangle"]),
        tuple(tuple(t) for t in data["external_triangles"]),
        tuple(tuple(p) for p in data["attachment_vertices"]),
    )
    spec.validate()
    return spec


def verify_gadget(
    spec: GadgetSpec,
    budget: int = DEFAULT_SEARCH_BUDGET,
    catalog_cap: int = DEFAULT_CATALOG_CAP,
) -> Optional[bool]:
    """Whether every cover of size at most 3 keeps the middle and all external
    triangles inside a single tessellation.

    The quantifier ranges over arbitrary tessellations, not only edge-maximal
    ones: any violating tessellation is dominated either by a violating
    edge-maximal one or by an edge-maximal one with a triangle-holding part
    split into two blocks, so searching covers over that finite family is
    exhaustive.  Returns None when the budget runs out; raises if the gadget
    graph is not 3-tessellable in the first place.
    """
    spec.validate()
    g = spec.graph
    decision = is_t_tessellable(g, 3, budget=budget, catalog_cap=catalog_cap)
    if decision.status == "unknown":
        return None
    if decision.status == "no":
        raise ValueError("gadget graph is not 3-tessellable")

    required = [tuple(sorted(spec.middle_triangle))] + [
        tuple(sorted(t)) for t in spec.external_triangles
    ]
    catalog = enumerate_tessellations(g, cap=catalog_cap)
    edges = g.edges()
    eidx = {e: i for i, e in enumerate(edges)}
    m = len(edges)
    full = (1 << m) - 1

    def part_mask(part) -> int:
        mask = 0
        for i, a in enumerate(part):
            for b in part[i + 1:]:
                mask |= 1 << eidx[(a, b) if a < b else (b, a)]
        return mask

    def holding_parts(tess) -> Optional[list[tuple[int, ...]]]:
        # the parts containing each required triangle, or None if some triangle is split
        part_of = {}
        for idx, c in enumerate(tess.cliques):
            for v in c:
                part_of[v] = idx
        out = []
        for tri in required:
            first = part_of.get(tri[0])
            if first is None or any(part_of.get(v) != first for v in tri[1:]):
                return None
            out.append(tess.cliques[first])
        return out

    bad_masks: set[int] = set()
    for ti, tess in enumerate(catalog.tessellations):
        holders = holding_parts(tess)
        mask = catalog.edge_sets[ti]
        if holders is None:
            bad_masks.add(mask)
            continue
        # Split each triangle-holding part in two; every violating tessellation
        # refines one of these variants, so they dominate all violating covers.
        for tri, part in zip(required, holders):
            whole = part_mask(part)
            rest = [v for v in part if v != part[0]]
            for bits in range(1 << len(rest)):
                block_a = [part[0]] + [v for i, v in enumerate(rest) if (bits >> i) & 1]
                block_b = [v for i, v in enumerate(rest) if not (bits >> i) & 1]
                if not block_b:
                    continue
                sa, sb = set(block_a), set(block_b)
                if set(tri) <= sa or set(tri) <= sb:
                    continue
                bad_masks.add(mask & ~whole | part_mask(block_a) | part_mask(block_b))

    ordered = sorted(bad_masks, key=lambda mk: (-bin(mk).count("1"), mk))
    kept: list[int] = []
    for mk in ordered:
        if not any(mk | km == km for km in kept):
            kept.append(mk)

    sets_for_edge: list[list[int]] = [[] for _ in range(m)]
    for si, mk in enumerate(kept):
        mm = mk
        while mm:
            bit = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            sets_for_edge[bit].append(si)
    if any(not lst for lst in sets_for_edge):
        return True  # some edge is covered only by tessellations holding the triangles
    bud = _Budget(budget)

    def dfs(uncovered: int, depth: int) -> bool:
        bud.tick()
        if uncovered == 0:
            return True
        if depth == 3:
            return False
        bit = -1
        count = None
        mm = uncovered
        while mm:
            b = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            if count is None or len(sets_for_edge[b]) < count:
                bit, count = b, len(sets_for_edge[b])
        for si in sets_for_edge[bit]:
            if dfs(uncovered & ~kept[si], depth + 1):
                return True
        return False

    try:
        violating_cover_exists = dfs(full, 0)
    except _BudgetExceeded:
        return None
    return not violating_cover_exists


def gadget_replacement(g: Graph, spec: GadgetSpec) -> Graph:
    """One gadget copy per vertex; each edge identifies attachment pairs of two unused external triangles.

    Copies are laid out blockwise in vertex order; for each edge (u, v) in
    sorted order the lowest unused external triangle of each copy is consumed
    and the attachment pairs are identified first-with-first.  Identified
    vertices keep the identity of the lower copy, and ids are recompacted
    densely afterwards.
    """
    spec.validate()
    ext = len(spec.external_triangles)
    for v in range(g.n):
        if g.degree(v) > ext:
            raise ValueError(
                f"vertex {v} has degree {g.degree(v)} but the gadget has {ext} external triangles"
            )
    s = spec.graph.n
    parent = list(range(g.n * s))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    used = [0] * g.n
    for u, v in g.edges():
        iu, iv = used[u], used[v]
        used[u] += 1
        used[v] += 1
        (a1, a2) = spec.attachment_vertices[iu]
        (b1, b2) = spec.attachment_vertices[iv]
        union(u * s + a1, v * s + b1)
        union(u * s + a2, v * s + b2)

    dense: dict[int, int] = {}
    for x in range(g.n * s):
        root = find(x)
        if root not in dense:
            dense[root] = len(dense)
    edges = set()
    for u in range(g.n):
        for x, y in spec.graph.edges():
            a, b = dense[find(u * s + x)], dense[find(u * s + y)]
            edges.add((a, b) if a < b else (b, a))
    return Graph(len(dense), sorted(edges))


# ---------------------------------------------------------------------------
# fixed-t lifting and the incidence extensions


def fixed_t_extension(g: Graph, f: Sequence[int], t: int) -> Graph:
    """Anchor structure that lifts 3-tessellability of g to t-tessellability of the result.

    Layout after g's vertices: the clique U (one u_j per fixed vertex, in
    sorted f order), the three hubs, then the t-3 link vertices per fixed
    vertex, then pendants (t-1 per hub, then t-1 per link vertex).
    """
    if t < 4:
        raise ValueError("t must be at least 4")
    fs = sorted(set(f))
    for v in fs:
        if not (0 <= v < g.n):
            raise ValueError(f"fixed vertex {v} out of range")
    k = len(fs)
    n = g.n
    u_base = n
    c_base = n + k
    w_base = c_base + 3
    links_per = t - 3
    pend_base = w_base + k * links_per

    edges = list(g.edges())
    for i in range(k):
        for j in range(i + 1, k):
            edges.append((u_base + i, u_base + j))
    for ci in range(3):
        for i in range(k):
            edges.append((u_base + i, c_base + ci))
    nxt = pend_base
    for ci in range(3):
        for _ in range(t - 1):
            edges.append((c_base + ci, nxt))
            nxt += 1
    for j in range(k):
        edges.append((fs[j], u_base + j))
        for l in range(links_per):
            w = w_base + j * links_per + l
            edges.append((fs[j], w))
            edges.append((u_base + j, w))
    for j in range(k):
        for l in range(links_per):
            w = w_base + j * links_per + l
            for _ in range(t - 1):
                edges.append((w, nxt))
                nxt += 1
    return Graph(nxt, edges)


def incidence_chordal_graph(g: Graph) -> tuple[Graph, KlAnnotation]:
    """Chordal split-like extension of a non-bipartite graph: one clique and two stable sets.

    Layout: g's vertices (kept edgeless), then one vertex per g-edge in
    lexicographic order forming a clique, then the hub adjacent to every edge
    vertex, then 3 pendants per base vertex, then 3 pendants for the hub.
    """
    if bipartition(g) is not None:
        raise ValueError("base graph must be non-bipartite")
    n, m = g.n, g.m
    hub = n + m
    edges = []
    g_edges = g.edges()
    for i in range(m):
        for j in range(i + 1, m):
            edges.append((n + i, n + j))
    for i, (u, v) in enumerate(g_edges):
        edges.append((u, n + i))
        edges.append((v, n + i))
    for i in range(m):
        edges.append((n + i, hub))
    roles = [(v, "base") for v in range(n)]
    roles += [(n + i, "edge") for i in range(m)]
    roles.append((hub, "hub"))
    nxt = hub + 1
    pendants = []
    for v in range(n):
        for _ in range(3):
            edges.append((v, nxt))
            roles.append((nxt, "pendant"))
            pendants.append(nxt)
            nxt += 1
    for _ in range(3):
        edges.append((hub, nxt))
        roles.append((nxt, "pendant"))
        pendants.append(nxt)
        nxt += 1
    h = Graph(nxt, edges)
    annotation = KlAnnotation(
        stables=(tuple(list(range(n)) + [hub]), tuple(pendants)),
        cliques=(tuple(range(n, n + m)),),
        roles=tuple(roles),
    )
    return h, annotation


def incidence_one_two_graph(g: Graph) -> tuple[Graph, KlAnnotation]:
    """Variant with the base vertices turned into a clique: one stable set and two cliques.

    Layout: g's vertices (now a clique), edge vertices, the hub, the second
    hub adjacent to every base vertex, then 2 pendants per base vertex, 3 for
    each hub.
    """
    if bipartition(g) is not None:
        raise ValueError("base graph must be non-bipartite")
    n, m = g.n, g.m
    hub = n + m
    hub2 = n + m + 1
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v))
    for i in range(m):
        for j in range(i + 1, m):
            edges.append((n + i, n + j))
    for i, (u, v) in enumerate(g.edges()):
        edges.append((u, n + i))
        edges.append((v, n + i))
    for i in range(m):
        edges.append((n + i, hub))
    for v in range(n):
        edges.append((v, hub2))
    roles = [(v, "base") for v in range(n)]
    roles += [(n + i, "edge") for i in range(m)]
    roles += [(hub, "hub"), (hub2, "hub2")]
    nxt = hub2 + 1
    pendants = []
    for v in range(n):
        for _ in range(2):
            edges.append((v, nxt))
            roles.append((nxt, "pendant"))
            pendants.append(nxt)
            nxt += 1
    for x in (hub, hub2):
        for _ in range(3):
            edges.append((x, nxt))
            roles.append((nxt, "pendant"))
            pendants.append(nxt)
            nxt += 1
    h = Graph(nxt, edges)
    annotation = KlAnnotation(
        stables=(tuple(pendants),),
        cliques=(tuple(list(range(n, n + m)) + [hub]), tuple(list(range(n)) + [hub2])),
        roles=tuple(roles),
    )
    return h, annotation


# ---------------------------------------------------------------------------
# the not-all-equal reduction pair


def nae_constraint_graph(inst: NaeInstance) -> Graph:
    """Formula graph: a joined literal pair per variable, a hub over all literals, a
    triangle per clause linked to its literals.

    Layout: variable j gets literal vertices 2j (positive) and 2j+1
    (negative); the hub is 2*var_count; clause k gets triangle vertices
    2*var_count + 1 + 3k + slot for slots 0..2.
    """
    v = inst.var_count
    hub = 2 * v
    edges = []
    for j in range(v):
        edges.append((2 * j, 2 * j + 1))
    for lit in range(2 * v):
        edges.append((lit, hub))
    base = hub + 1
    for k, clause in enumerate(inst.clauses):
        t0 = base + 3 * k
        edges.append((t0, t0 + 1))
        edges.append((t0, t0 + 2))
        edges.append((t0 + 1, t0 + 2))
        for slot, (var, pol) in enumerate(clause):
            lit_vertex = 2 * var + (0 if pol else 1)
            edges.append((lit_vertex, t0 + slot))
    return Graph(base + 3 * len(inst.clauses), [(min(e), max(e)) for e in edges])


def nae_instance_graph(inst: NaeInstance) -> Graph:
    """Diamond-free graph whose clique graph reproduces the formula graph.

    Layout: one variable vertex per variable (0..var_count-1, forming a
    clique), then per clause a star: center var_count + 4k and three leaves
    var_count + 4k + 1 + slot.  Each literal spans a clique over its variable
    vertex and all leaves standing for that literal.
    """
    v = inst.var_count
    edges: set[tuple[int, int]] = set()

    def add(a: int, b: int):
        edges.add((a, b) if a < b else (b, a))

    for i in range(v):
        for j in range(i + 1, v):
            add(i, j)
    literal_members: dict[Literal, list[int]] = {}
    for k, clause in enumerate(inst.clauses):
        center = v + 4 * k
        for slot, (var, pol) in enumerate(clause):
            leaf = center + 1 + slot
            add(center, leaf)
            literal_members.setdefault((var, pol), []).append(leaf)
    for (var, _), leaves in literal_members.items():
        members = [var] + leaves
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                add(a, b)
    return Graph(v + 4 * len(inst.clauses), sorted(edges))
