"""Deterministic test corpora: the small-graph catalog and seeded random graph families."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .constructions import NaeInstance
from .graph import Graph, Multigraph, format_edge_list, is_diamond_free
from .iso import are_isomorphic, wl_colors, wl_invariant
from .twotess import line_graph


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices up to isomorphism.

    Built by augmentation: every connected graph arises from a connected graph
    one vertex smaller by attaching a new vertex, so extending the (n-1)
    catalog with every nonempty neighborhood and deduplicating by isomorphism
    is exhaustive.
    """
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1),)
    buckets: dict[tuple, list[tuple[Graph, tuple[int, ...]]]] = {}
    out: list[Graph] = []
    new = n - 1
    for base in connected_graphs(n - 1):
        base_edges = base.edges()
        for mask in range(1, 1 << new):
            edges = list(base_edges)
            edges.extend((i, new) for i in range(new) if (mask >> i) & 1)
            g = Graph(n, edges)
            colors = wl_colors(g)
            bucket = buckets.setdefault(wl_invariant(g, colors), [])
            if any(are_isomorphic(g, h, colors, hc) for h, hc in bucket):
                continue
            bucket.append((g, colors))
            out.append(g)
    return tuple(out)


def connected_graphs_up_to(max_n: int) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(connected_graphs(n))
    return out


# ---------------------------------------------------------------------------
# seeded random families


def erdos_renyi(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def _bridge_components(g: Graph) -> Graph:
    comps = g.connected_components()
    if len(comps) <= 1:
        return g
    edges = g.edges()
    # An edge between components lies in no triangle, so bridging preserves
    # triangle- and diamond-freeness.
    for a, b in zip(comps, comps[1:]):
        edges.append((min(a[0], b[0]), max(a[0], b[0])))
    return Graph(g.n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    return _bridge_components(erdos_renyi(rng, n, p))


def random_triangle_free(rng: random.Random, n: int, p: float, connected: bool = True) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for u, v in pairs:
        if rng.random() >= p:
            continue
        if nbrs[u] & nbrs[v]:
            continue
        nbrs[u].add(v)
        nbrs[v].add(u)
        edges.append((u, v))
    g = Graph(n, edges)
    return _bridge_components(g) if connected else g


def random_diamond_free(rng: random.Random, n: int, p: float, connected: bool = True) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    g = Graph(n)
    for u, v in pairs:
        if rng.random() >= p:
            continue
        candidate = Graph(n, g.edges() + [(min(u, v), max(u, v))])
        if is_diamond_free(candidate):
            g = candidate
    return _bridge_components(g) if connected else g


def random_bipartite_multigraph(
    rng: random.Random, left: int, right: int, edges: int, connected: bool = False
) -> Multigraph:
    """Random bipartite multigraph: sides 0..left-1 and left..left+right-1; repeats make parallels.

    With connected=True an alternating backbone path is laid down first (its
    edges count toward the total), so the line graph is a single component.
    """
    pairs: list[tuple[int, int]] = []
    if connected and left > 0 and right > 0:
        k = min(left, right)
        seq: list[int] = []
        for i in range(k):
            seq.append(i)
            seq.append(left + i)
        pairs.extend(zip(seq, seq[1:]))  # alternating path, degree <= 2
        pairs.extend((i, left) for i in range(k, left))
        pairs.extend((0, left + j) for j in range(k, right))
        if edges < len(pairs):
            raise ValueError("connected multigraph needs at least left+right-1 edges")
    while len(pairs) < edges:
        a = rng.randrange(left)
        b = left + rng.randrange(right)
        pairs.append((a, b))
    return Multigraph.from_pairs(left + right, pairs)


def random_line_graph(rng: random.Random, left: int, right: int, edges: int) -> Graph:
    return line_graph(random_bipartite_multigraph(rng, left, right, edges))


def random_nae_instance(
    rng: random.Random,
    var_count: int,
    clause_count: int,
    distinct_vars: bool = True,
) -> NaeInstance:
    """Seeded formula; with distinct_vars each clause uses three different variables."""
    clauses = []
    for _ in range(clause_count):
        if distinct_vars:
            if var_count < 3:
                raise ValueError("distinct-variable clauses need at least 3 variables")
            vs = rng.sample(range(var_count), 3)
        else:
            vs = [rng.randrange(var_count) for _ in range(3)]
        clauses.append(tuple((v, rng.random() < 0.5) for v in vs))
    return NaeInstance(var_count, tuple(clauses))


# ---------------------------------------------------------------------------
# file corpus


@dataclass(frozen=True)
class CorpusSpec:
    er: tuple[tuple[int, float, int], ...] = ((7, 0.25, 10), (8, 0.40, 10), (9, 0.55, 10))
    line_graphs: tuple[tuple[int, int, int, int], ...] = ((4, 4, 10, 10),)  # left, right, edges, count
    diamond_free: tuple[tuple[int, float, int], ...] = ((8, 0.3, 10),)
    catalog_max_n: int = 7


def corpus_generate(seed: int, out_dir: str, spec: Optional[CorpusSpec] = None) -> list[str]:
    """Write a deterministic corpus of edge-list files; returns the created paths in order."""
    spec = spec or CorpusSpec()
    rng = random.Random(seed)
    os.makedirs(out_dir, exist_ok=True)
    paths: list[str] = []

    def emit(name: str, g: Graph):
        path = os.path.join(out_dir, name)
        with open(path, "w") as fh:
            fh.write(format_edge_list(g))
        paths.append(path)

    for n, p, count in spec.er:
        for i in range(count):
            emit(f"er_n{n}_p{int(p * 100):03d}_{i:03d}.txt", erdos_renyi(rng, n, p))
    for left, right, edges, count in spec.line_graphs:
        for i in range(count):
            emit(f"lg_{left}x{right}_{i:03d}.txt", random_line_graph(rng, left, right, edges))
    for n, p, count in spec.diamond_free:
        for i in range(count):
            emit(f"df_n{n}_{i:03d}.txt", random_diamond_free(rng, n, p))
    for n in range(1, spec.catalog_max_n + 1):
        for i, g in enumerate(connected_graphs(n)):
            emit(f"catalog_n{n}_{i:04d}.txt", g)
    return paths
