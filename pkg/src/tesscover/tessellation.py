"""Tessellations (vertex partitions into cliques), covers, validation, and exposure checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .graph import Graph, maximal_cliques

COVER_SCHEMA = 1


@dataclass(frozen=True)
class Tessellation:
    """Vertex-disjoint cliques of a host graph; vertices not listed are implicit singletons.

    Singleton cliques are never stored: `of` drops them during normalization.
    """

    cliques: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, cliques: Iterable[Sequence[int]]) -> "Tessellation":
        norm = sorted(tuple(sorted(c)) for c in cliques if len(c) >= 2)
        return cls(tuple(norm))

    def vertices(self) -> set[int]:
        return {v for c in self.cliques for v in c}

    def edge_set(self) -> set[tuple[int, int]]:
        out = set()
        for c in self.cliques:
            for i, u in enumerate(c):
                for v in c[i + 1:]:
                    out.add((u, v))
        return out


@dataclass(frozen=True)
class TessellationCover:
    """An ordered family of tessellations meant to cover every edge of the host graph."""

    tessellations: tuple[Tessellation, ...]

    @classmethod
    def of(cls, tessellations: Iterable[Iterable[Sequence[int]]]) -> "TessellationCover":
        return cls(tuple(Tessellation.of(t) for t in tessellations))

    @property
    def size(self) -> int:
        return len(self.tessellations)


@dataclass(frozen=True)
class Violation:
    kind: str  # "bad-vertex" | "overlap" | "missing-edge" | "uncovered-edge"
    detail: tuple
    message: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def __bool__(self) -> bool:
        return self.ok


class InvalidCoverError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(report.first.message if report.first else "invalid cover")
        self.report = report


def validate_tessellation(g: Graph, t: Tessellation) -> ValidationReport:
    """Check disjointness and that every clique is complete in g.

    The report lists every violation; the first one is the deterministic
    debugging handle (overlaps name the shared vertex, non-cliques the
    missing edge).
    """
    report = ValidationReport()
    owner: dict[int, int] = {}
    for idx, c in enumerate(t.cliques):
        for v in c:
            if not (0 <= v < g.n):
                report.violations.append(
                    Violation("bad-vertex", (v,), f"vertex {v} out of range (n={g.n})")
                )
                continue
            if v in owner:
                report.violations.append(
                    Violation("overlap", (v,), f"vertex {v} appears in two cliques")
                )
            else:
                owner[v] = idx
        for i, u in enumerate(c):
            nu = g.nbr_set(u) if 0 <= u < g.n else set()
            for v in c[i + 1:]:
                if v != u and 0 <= v < g.n and v not in nu:
                    report.violations.append(
                        Violation(
                            "missing-edge", (u, v), f"clique lacks edge ({u}, {v})"
                        )
                    )
    return report


def tessellation_edges(g: Graph, t: Tessellation) -> set[tuple[int, int]]:
    """Edges with both endpoints inside one clique of t. Raises on an invalid tessellation."""
    report = validate_tessellation(g, t)
    if not report.ok:
        raise InvalidCoverError(report)
    return t.edge_set()


def validate_cover(g: Graph, cover: TessellationCover) -> ValidationReport:
    """Check every tessellation and that their edge sets union to E(g). O(size * (n + m))."""
    report = ValidationReport()
    covered: set[tuple[int, int]] = set()
    for t in cover.tessellations:
        sub = validate_tessellation(g, t)
        report.violations.extend(sub.violations)
        if sub.ok:
            covered |= t.edge_set()
    for u, v in g.edges():
        if (u, v) not in covered:
            report.violations.append(
                Violation("uncovered-edge", (u, v), f"edge ({u}, {v}) covered by no tessellation")
            )
    return report


def exposed_maximal_cliques(g: Graph, cover: TessellationCover) -> list[tuple[int, ...]]:
    """Maximal cliques of g whose edges lie wholly inside no single tessellation."""
    report = validate_cover(g, cover)
    if not report.ok:
        raise InvalidCoverError(report)
    part_maps = []
    for t in cover.tessellations:
        part = {}
        for idx, c in enumerate(t.cliques):
            for v in c:
                part[v] = idx
        part_maps.append(part)
    exposed = []
    for clique in maximal_cliques(g):
        if len(clique) == 1:
            # Implicit in every tessellation, so exposed only under an empty cover.
            if not cover.tessellations:
                exposed.append(clique)
            continue
        inside_some = False
        for part in part_maps:
            first = part.get(clique[0])
            if first is not None and all(part.get(v) == first for v in clique[1:]):
                inside_some = True
                break
        if not inside_some:
            exposed.append(clique)
    return exposed


def cover_from_edge_coloring(g: Graph, colors: dict[tuple[int, int], int]) -> TessellationCover:
    """One tessellation of size-two cliques per color class of a proper edge coloring."""
    classes: dict[int, list[tuple[int, int]]] = {}
    for (u, v), c in colors.items():
        key = (u, v) if u < v else (v, u)
        if not g.has_edge(*key):
            raise ValueError(f"colored pair {key} is not an edge")
        classes.setdefault(c, []).append(key)
    by_color = []
    for c in sorted(classes):
        used: set[int] = set()
        for u, v in classes[c]:
            if u in used or v in used:
                raise ValueError(f"color {c} repeats at a vertex: improper edge coloring")
            used.add(u)
            used.add(v)
        by_color.append(sorted(classes[c]))
    return TessellationCover.of(by_color)


def cover_from_kg_coloring(g: Graph, kg_result, colors: Sequence[int]) -> TessellationCover:
    """One tessellation per color of a proper clique-graph coloring.

    Same-colored clique-graph vertices correspond to disjoint maximal cliques,
    so each color class is a tessellation; their union covers E(g) because
    every edge lies in some maximal clique.
    """
    kg = kg_result.kg
    if len(colors) != kg.n:
        raise ValueError("coloring length does not match clique-graph order")
    for u, v in kg.edges():
        if colors[u] == colors[v]:
            raise ValueError(f"improper clique-graph coloring: edge ({u}, {v}) monochromatic")
    classes: dict[int, list[tuple[int, ...]]] = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(kg_result.cliques[i])
    return TessellationCover.of([classes[c] for c in sorted(classes)])


# ---------------------------------------------------------------------------
# JSON interchange


def cover_to_json(n: int, cover: TessellationCover) -> str:
    payload = {
        "schema": COVER_SCHEMA,
        "n": n,
        "tessellations": [
            [list(c) for c in t.cliques] for t in cover.tessellations
        ],
    }
    return json.dumps(payload)


def cover_from_json(text: str) -> tuple[int, TessellationCover]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad cover JSON: {exc}") from None
    if not isinstance(payload, dict) or "n" not in payload or "tessellations" not in payload:
        raise ValueError("cover JSON must carry 'n' and 'tessellations'")
    n = payload["n"]
    tessellations = payload["tessellations"]
    if not isinstance(n, int) or n < 0 or not isinstance(tessellations, list):
        raise ValueError("malformed cover JSON")
    for t in tessellations:
        if not isinstance(t, list) or any(
            not isinstance(c, list) or any(not isinstance(v, int) for v in c) for c in t
        ):
            raise ValueError("malformed cover JSON tessellation")
    return n, TessellationCover.of(tessellations)
