"""Independent tessellation-number oracle: label edges, merge components, require cliques.

Deliberately avoids the catalog machinery: a labeling is feasible when, for
every label, the connected components of that label's edge set are cliques of
the host graph.  Components being host cliques is exactly tessellation
membership, so the minimum feasible label count is the tessellation number.
"""

from __future__ import annotations

from tesscover.graph import Graph


def _labeling_exists(g: Graph, t: int) -> bool:
    edges = g.edges()
    m = len(edges)
    if m == 0:
        return True
    if t == 0:
        return False
    comp: list[dict[int, frozenset[int]]] = [dict() for _ in range(t)]

    def feasible(label: int, u: int, v: int):
        merged = comp[label].get(u, frozenset([u])) | comp[label].get(v, frozenset([v]))
        members = sorted(merged)
        for i, a in enumerate(members):
            na = g.nbr_set(a)
            for b in members[i + 1:]:
                if b not in na:
                    return None
        return merged

    def assign(i: int, used: int) -> bool:
        if i == m:
            return True
        u, v = edges[i]
        limit = min(t, used + 1)
        for label in range(limit):
            merged = feasible(label, u, v)
            if merged is None:
                continue
            saved = [(w, comp[label].get(w)) for w in merged]
            for w in merged:
                comp[label][w] = merged
            if assign(i + 1, max(used, label + 1)):
                return True
            for w, old in saved:
                if old is None:
                    comp[label].pop(w, None)
                else:
                    comp[label][w] = old
        return False

    return assign(0, 0)


def naive_tessellation_number(g: Graph, t_max: int = 16) -> int:
    for t in range(t_max + 1):
        if _labeling_exists(g, t):
            return t
    raise RuntimeError("tessellation number above t_max")
