"""Clique graphs: the intersection graph of a graph's maximal cliques."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DEFAULT_CLIQUE_CAP, Graph, maximal_cliques


@dataclass(frozen=True)
class CliqueGraphResult:
    """Clique graph plus the correspondence from its vertices back to maximal cliques.

    Vertex i of `kg` stands for `cliques[i]`; kg has an edge (i, j) exactly
    when the two maximal cliques share a vertex.
    """

    kg: Graph
    cliques: tuple[tuple[int, ...], ...]


def clique_graph(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> CliqueGraphResult:
    """Build K(g) with deterministic numbering from the sorted maximal-clique list.

    Intersection edges come from per-vertex membership lists, so no pairwise
    clique comparison happens; isolated vertices of g become isolated
    clique-graph vertices.
    """
    cliques = maximal_cliques(g, cap=cap)
    member: list[list[int]] = [[] for _ in range(g.n)]
    for idx, c in enumerate(cliques):
        for v in c:
            member[v].append(idx)
    edges: set[tuple[int, int]] = set()
    for lst in member:
        for i, a in enumerate(lst):
            for b in lst[i + 1:]:
                edges.add((a, b))
    kg = Graph(len(cliques), sorted(edges))
    return CliqueGraphResult(kg, tuple(cliques))


def kg_intersection_sizes(r: CliqueGraphResult) -> dict[tuple[int, int], int]:
    """For each clique-graph edge, the size of the underlying cliques' intersection."""
    sets = [set(c) for c in r.cliques]
    return {(i, j): len(sets[i] & sets[j]) for i, j in r.kg.edges()}
