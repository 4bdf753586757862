"""Isomorphism testing: color refinement for invariants, backtracking for certainty."""

from __future__ import annotations

from collections import Counter
from typing import Optional

from .graph import Graph


def wl_colors(g: Graph) -> tuple[int, ...]:
    """Stable color-refinement labels, canonical across graphs (ids follow sorted signatures)."""
    colors = [g.degree(v) for v in range(g.n)]
    classes = len(set(colors))
    for _ in range(g.n):
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in g.adj[v]))) for v in range(g.n)
        ]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ids[s] for s in sigs]
        if len(ids) == classes:
            break
        classes = len(ids)
    return tuple(colors)


def wl_invariant(g: Graph, colors: Optional[tuple[int, ...]] = None) -> tuple:
    """Isomorphism-invariant key: refined color multiset plus per-edge color pairs."""
    if colors is None:
        colors = wl_colors(g)
    pairs = sorted(
        (colors[u], colors[v]) if colors[u] <= colors[v] else (colors[v], colors[u])
        for u, v in g.edges()
    )
    return (g.n, g.m, tuple(sorted(colors)), tuple(pairs))


def are_isomorphic(
    a: Graph,
    b: Graph,
    ca: Optional[tuple[int, ...]] = None,
    cb: Optional[tuple[int, ...]] = None,
) -> bool:
    """Exact isomorphism test: refinement classes guide a backtracking vertex map."""
    if a.n != b.n or a.m != b.m:
        return False
    if ca is None:
        ca = wl_colors(a)
    if cb is None:
        cb = wl_colors(b)
    if sorted(ca) != sorted(cb):
        return False
    counts = Counter(ca)
    order = sorted(range(a.n), key=lambda v: (counts[ca[v]], -a.degree(v), v))
    by_color: dict[int, list[int]] = {}
    for w in range(b.n):
        by_color.setdefault(cb[w], []).append(w)
    mapping = [-1] * a.n
    reverse = [-1] * b.n

    def backtrack(i: int) -> bool:
        if i == a.n:
            return True
        v = order[i]
        for w in by_color.get(ca[v], ()):
            if reverse[w] != -1:
                continue
            ok = True
            for x in a.adj[v]:
                mx = mapping[x]
                if mx != -1 and mx not in b.nbr_set(w):
                    ok = False
                    break
            if ok:
                for y in b.adj[w]:
                    py = reverse[y]
                    if py != -1 and py not in a.nbr_set(v):
                        ok = False
                        break
            if ok:
                mapping[v] = w
                reverse[w] = v
                if backtrack(i + 1):
                    return True
                mapping[v] = -1
                reverse[w] = -1
        return False

    return backtrack(0)
