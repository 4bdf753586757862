"""Upper and lower bounds on the tessellation cover number, with materialized witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cliquegraph import clique_graph
from .coloring import (
    DEFAULT_COLOR_BUDGET,
    EdgeColoring,
    edge_coloring_delta_plus_one,
    exact_chromatic_index,
    exact_chromatic_number,
    greedy_vertex_coloring,
)
from .graph import DEFAULT_CLIQUE_CAP, Graph, bipartition, is_cluster_graph, is_triangle_free
from .tessellation import (
    TessellationCover,
    cover_from_edge_coloring,
    cover_from_kg_coloring,
    validate_cover,
)


@dataclass
class BoundsReport:
    """Edge-coloring and clique-graph-coloring upper bounds plus the structural lower bound.

    Each upper bound carries the induced cover as its witness; exactness flags
    distinguish proven chromatic values from heuristic brackets, so no field
    ever presents a heuristic number as exact.
    """

    lower: int
    upper_edge: int
    upper_kg: int
    upper: int
    edge_exact: bool
    kg_exact: bool
    edge_witness: TessellationCover
    kg_witness: TessellationCover

    def to_dict(self, n: int) -> dict:
        return {
            "lower": self.lower,
            "upper_edge": self.upper_edge,
            "upper_kg": self.upper_kg,
            "upper": self.upper,
            "edge_exact": self.edge_exact,
            "kg_exact": self.kg_exact,
            "edge_witness": [[list(c) for c in t.cliques] for t in self.edge_witness.tessellations],
            "kg_witness": [[list(c) for c in t.cliques] for t in self.kg_witness.tessellations],
        }


def lower_bound(g: Graph, clique_cap: int = DEFAULT_CLIQUE_CAP) -> int:
    """Structural lower bound: 0 edgeless, 1 cluster, 2 bipartite clique graph, else 3.

    A triangle-free graph additionally needs maxdeg tessellations, since the
    tessellations at a maximum-degree vertex must be distinct size-two cliques.
    """
    if g.m == 0:
        return 0
    if is_cluster_graph(g):
        return 1
    kg = clique_graph(g, cap=clique_cap).kg
    base = 2 if bipartition(kg) is not None else 3
    if is_triangle_free(g):
        base = max(base, g.max_degree())
    return base


def upper_bounds(
    g: Graph,
    exact: bool = True,
    budget: int = DEFAULT_COLOR_BUDGET,
    clique_cap: int = DEFAULT_CLIQUE_CAP,
) -> BoundsReport:
    """Covers induced by an edge coloring and by a clique-graph coloring, and their minimum."""
    edge_exact = False
    edge_col: Optional[EdgeColoring] = None
    if exact:
        edge_col = exact_chromatic_index(g, budget=budget)
        edge_exact = edge_col is not None
    if edge_col is None:
        edge_col = edge_coloring_delta_plus_one(g)
    edge_witness = cover_from_edge_coloring(g, edge_col.as_dict())
    assert validate_cover(g, edge_witness).ok

    kgr = clique_graph(g, cap=clique_cap)
    kg_exact = False
    kg_col = None
    if exact:
        kg_col = exact_chromatic_number(kgr.kg, budget=budget)
        kg_exact = kg_col is not None
    if kg_col is None:
        kg_col = greedy_vertex_coloring(kgr.kg)
    kg_witness = cover_from_kg_coloring(g, kgr, kg_col.colors)
    assert validate_cover(g, kg_witness).ok

    return BoundsReport(
        lower=lower_bound(g, clique_cap=clique_cap),
        upper_edge=edge_col.count,
        upper_kg=kg_col.count,
        upper=min(edge_col.count, kg_col.count),
        edge_exact=edge_exact,
        kg_exact=kg_exact,
        edge_witness=edge_witness,
        kg_witness=kg_witness,
    )


@dataclass(frozen=True)
class ChromaticIndexBracket:
    """Tessellation number of a triangle-free graph: equal to its chromatic index.

    When the exact search finishes, lower == upper == the tessellation number;
    otherwise the bracket is [maxdeg, maxdeg+1] with exact=False.
    """

    lower: int
    upper: int
    exact: bool

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError("value is only defined for an exact result")
        return self.lower


def triangle_free_tessellation_number(
    g: Graph, budget: int = DEFAULT_COLOR_BUDGET
) -> ChromaticIndexBracket:
    """Tessellation number of a triangle-free graph via its chromatic index."""
    if not is_triangle_free(g):
        raise ValueError("input graph has a triangle")
    col = exact_chromatic_index(g, budget=budget)
    if col is not None:
        return ChromaticIndexBracket(col.count, col.count, True)
    delta = g.max_degree()
    return ChromaticIndexBracket(delta, delta + 1, False)
