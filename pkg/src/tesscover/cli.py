"""Command-line frontend: solve, check, bounds, 2tess, kgraph, color, gen, corpus."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import constructions as cons
from .bounds import triangle_free_tessellation_number, upper_bounds
from .cliquegraph import clique_graph
from .coloring import (
    edge_coloring_delta_plus_one,
    exact_chromatic_index,
    exact_chromatic_number,
    greedy_vertex_coloring,
)
from .corpus import CorpusSpec, corpus_generate
from .graph import (
    CapacityError,
    Graph,
    GraphParseError,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
)
from .solver import (
    DEFAULT_CATALOG_CAP,
    DEFAULT_SEARCH_BUDGET,
    is_t_tessellable,
    min_cover_exact,
)
from .tessellation import cover_from_json, cover_to_json, exposed_maximal_cliques, validate_cover
from .twotess import is_two_tessellable

SCHEMA = 1


@dataclass
class RunConfig:
    command: str
    input: Optional[str] = None
    output: Optional[str] = None
    cover: Optional[str] = None
    t: Optional[int] = None
    budget: int = DEFAULT_SEARCH_BUDGET
    catalog_cap: int = DEFAULT_CATALOG_CAP
    clique_cap: int = 100_000
    exact: bool = False
    threads: int = 0  # 0 = all cores; engines are sequential, output never depends on it
    seed: int = 0
    graph6: bool = False
    mode: Optional[str] = None  # color: "edges" | "vertices"
    generator: Optional[str] = None  # gen: c1..c8
    vertex: Optional[int] = None
    fset: tuple[int, ...] = field(default_factory=tuple)
    gadget: Optional[str] = None
    out_dir: Optional[str] = None

    def __post_init__(self):
        if self.budget <= 0 or self.catalog_cap <= 0 or self.clique_cap <= 0:
            raise ValueError("budgets must be positive")


class CliError(Exception):
    pass


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _load_graph(config: RunConfig) -> Graph:
    text = _read_text(config.input)
    try:
        return parse_graph6(text) if config.graph6 else parse_edge_list(text)
    except (GraphParseError, ValueError) as exc:
        raise CliError(f"bad graph input: {exc}") from None


def _emit(payload: dict, config: RunConfig):
    payload = {"schema": SCHEMA, **payload}
    text = json.dumps(payload, indent=2)
    if config.output and config.command not in ("gen", "kgraph"):
        with open(config.output, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _cover_lists(cover) -> list:
    return [[list(c) for c in t.cliques] for t in cover.tessellations]


def _cmd_solve(config: RunConfig) -> int:
    g = _load_graph(config)
    if config.t is not None:
        decision = is_t_tessellable(g, config.t, budget=config.budget, catalog_cap=config.catalog_cap)
        payload = {"command": "solve", "t": config.t, "status": decision.status}
        if decision.cover is not None:
            payload["cover"] = _cover_lists(decision.cover)
        _emit(payload, config)
        return {"yes": 0, "no": 1, "unknown": 2}[decision.status]
    result = min_cover_exact(g, budget=config.budget, catalog_cap=config.catalog_cap)
    _emit({"command": "solve", **result.to_dict()}, config)
    return 0


def _cmd_check(config: RunConfig) -> int:
    g = _load_graph(config)
    if config.cover is None:
        raise CliError("check needs --cover <cover.json>")
    n, cover = cover_from_json(_read_text(config.cover))
    if n != g.n:
        raise CliError(f"cover is for n={n} but the graph has n={g.n}")
    report = validate_cover(g, cover)
    payload = {
        "command": "check",
        "ok": report.ok,
        "violations": [
            {"kind": v.kind, "detail": list(v.detail), "message": v.message}
            for v in report.violations
        ],
    }
    if report.ok:
        payload["exposed_maximal_cliques"] = [list(c) for c in exposed_maximal_cliques(g, cover)]
    _emit(payload, config)
    return 0 if report.ok else 2


def _cmd_bounds(config: RunConfig) -> int:
    g = _load_graph(config)
    report = upper_bounds(g, exact=config.exact, budget=config.budget, clique_cap=config.clique_cap)
    payload = {"command": "bounds", **report.to_dict(g.n)}
    from .graph import is_triangle_free

    if is_triangle_free(g):
        bracket = triangle_free_tessellation_number(g, budget=config.budget)
        payload["triangle_free"] = {
            "lower": bracket.lower,
            "upper": bracket.upper,
            "exact": bracket.exact,
        }
    _emit(payload, config)
    return 0


def _cmd_2tess(config: RunConfig) -> int:
    g = _load_graph(config)
    result = is_two_tessellable(g)
    payload = {"command": "2tess", "decision": result.decision}
    if result.decision:
        payload["cover"] = _cover_lists(result.cover)
        payload["roots"] = [
            {
                "n": rg.root.n,
                "edges": [list(e) for e in rg.root.edges],
                "occurrence_to_vertex": list(rg.occurrence_to_vertex),
            }
            for rg in result.roots
        ]
    else:
        payload["witness"] = result.witness
    _emit(payload, config)
    return 0 if result.decision else 1


def _cmd_kgraph(config: RunConfig) -> int:
    g = _load_graph(config)
    result = clique_graph(g, cap=config.clique_cap)
    edge_text = format_edge_list(result.kg)
    sidecar = {
        "schema": SCHEMA,
        "cliques": {str(i): list(c) for i, c in enumerate(result.cliques)},
    }
    if config.output:
        with open(config.output, "w") as fh:
            fh.write(edge_text)
        with open(config.output + ".cliques.json", "w") as fh:
            json.dump(sidecar, fh, indent=2)
    print(json.dumps({"schema": SCHEMA, "command": "kgraph",
                      "edge_list": edge_text, **{k: v for k, v in sidecar.items() if k != "schema"}},
                     indent=2))
    return 0


def _cmd_color(config: RunConfig) -> int:
    g = _load_graph(config)
    if config.mode == "vertices":
        if config.exact:
            col = exact_chromatic_number(g, budget=config.budget)
            exact = col is not None
            if col is None:
                col = greedy_vertex_coloring(g)
        else:
            col, exact = greedy_vertex_coloring(g), False
        payload = {
            "command": "color",
            "mode": "vertices",
            "count": col.count,
            "exact": exact,
            "colors": list(col.colors),
        }
    elif config.mode == "edges":
        if config.exact:
            col = exact_chromatic_index(g, budget=config.budget)
            exact = col is not None
            if col is None:
                col = edge_coloring_delta_plus_one(g)
        else:
            col, exact = edge_coloring_delta_plus_one(g), False
        payload = {
            "command": "color",
            "mode": "edges",
            "count": col.count,
            "exact": exact,
            "colors": [[list(e), c] for e, c in col.colors],
        }
    else:
        raise CliError("color needs --edges or --vertices")
    _emit(payload, config)
    return 0


def _cmd_gen(config: RunConfig) -> int:
    which = config.generator
    annotation = None
    if which in ("c7", "c8"):
        inst = cons.parse_nae(_read_text(config.input))
        out = cons.nae_constraint_graph(inst) if which == "c7" else cons.nae_instance_graph(inst)
    elif which == "c1":
        g = _load_graph(config)
        col = exact_chromatic_index(g, budget=config.budget)
        if col is None:
            raise CliError("chromatic index search hit the budget; raise --budget")
        out = cons.star_extension(g, col.count)
        annotation = {"chi_prime": col.count}
    elif which == "c2":
        g = _load_graph(config)
        if config.vertex is None:
            raise CliError("c2 needs --vertex")
        kg = clique_graph(g, cap=config.clique_cap).kg
        col = exact_chromatic_number(kg, budget=config.budget)
        if col is None:
            raise CliError("clique-graph coloring hit the budget; raise --budget")
        out = cons.pendant_extension(g, config.vertex, col.count)
        annotation = {"chi_kg": col.count}
    elif which == "c3":
        g = _load_graph(config)
        if config.gadget is None:
            raise CliError("c3 needs --gadget <spec.json>")
        spec = cons.gadget_spec_from_json(_read_text(config.gadget))
        out = cons.gadget_replacement(g, spec)
    elif which == "c4":
        g = _load_graph(config)
        if config.t is None:
            raise CliError("c4 needs --t")
        out = cons.fixed_t_extension(g, config.fset, config.t)
    elif which == "c5":
        g = _load_graph(config)
        out, ann = cons.incidence_chordal_graph(g)
        annotation = ann.to_dict()
    elif which == "c6":
        g = _load_graph(config)
        out, ann = cons.incidence_one_two_graph(g)
        annotation = ann.to_dict()
    else:
        raise CliError(f"unknown generator {which!r}")
    edge_text = format_edge_list(out)
    if config.output:
        with open(config.output, "w") as fh:
            fh.write(edge_text)
        if annotation is not None:
            with open(config.output + ".annotation.json", "w") as fh:
                json.dump({"schema": SCHEMA, **annotation}, fh, indent=2)
    payload = {"schema": SCHEMA, "command": "gen", "generator": which, "edge_list": edge_text}
    if annotation is not None:
        payload["annotation"] = annotation
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_corpus(config: RunConfig) -> int:
    if not config.out_dir:
        raise CliError("corpus needs --out-dir")
    paths = corpus_generate(config.seed, config.out_dir, CorpusSpec())
    print(json.dumps({"schema": SCHEMA, "command": "corpus", "files": paths}, indent=2))
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "check": _cmd_check,
    "bounds": _cmd_bounds,
    "2tess": _cmd_2tess,
    "kgraph": _cmd_kgraph,
    "color": _cmd_color,
    "gen": _cmd_gen,
    "corpus": _cmd_corpus,
}


def run(config: RunConfig) -> int:
    """Dispatch a parsed configuration; returns the process exit status."""
    try:
        handler = _COMMANDS.get(config.command)
        if handler is None:
            raise CliError(f"unknown command {config.command!r}")
        return handler(config)
    except (CliError, CapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tesscover", description="Graph tessellation cover toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", "-i", help="edge-list file ('-' for stdin)")
        p.add_argument("--output", "-o", help="output path")
        p.add_argument("--graph6", action="store_true", help="read the input as graph6")
        p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
        p.add_argument("--catalog-cap", type=int, default=DEFAULT_CATALOG_CAP)
        p.add_argument("--clique-cap", type=int, default=100_000)
        p.add_argument("--threads", type=int, default=0)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("solve", help="minimum tessellation cover, or decide t-tessellability")
    common(p)
    p.add_argument("--t", type=int, default=None)

    p = sub.add_parser("check", help="validate a cover JSON and report exposed maximal cliques")
    common(p)
    p.add_argument("--cover", required=True)

    p = sub.add_parser("bounds", help="lower/upper tessellation bounds with witnesses")
    common(p)
    p.add_argument("--exact", action="store_true")

    p = sub.add_parser("2tess", help="linear-time 2-tessellability decision")
    common(p)

    p = sub.add_parser("kgraph", help="clique graph plus vertex-to-clique sidecar")
    common(p)

    p = sub.add_parser("color", help="vertex or edge coloring")
    common(p)
    p.add_argument("--edges", action="store_true")
    p.add_argument("--vertices", action="store_true")
    p.add_argument("--exact", action="store_true")

    p = sub.add_parser("gen", help="hardness-instance generators c1..c8")
    common(p)
    p.add_argument("generator", choices=[f"c{i}" for i in range(1, 9)])
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--vertex", type=int, default=None)
    p.add_argument("--fset", default="", help="comma-separated vertex list for c4")
    p.add_argument("--gadget", default=None, help="gadget spec JSON for c3")

    p = sub.add_parser("corpus", help="write the deterministic test corpus")
    common(p)
    p.add_argument("--out-dir", required=True)

    return parser


def config_from_args(argv: Sequence[str]) -> RunConfig:
    args = _build_parser().parse_args(argv)
    mode = None
    if args.command == "color":
        if getattr(args, "edges", False) and getattr(args, "vertices", False):
            raise CliError("pass exactly one of --edges / --vertices")
        mode = "edges" if getattr(args, "edges", False) else (
            "vertices" if getattr(args, "vertices", False) else None
        )
    fset: tuple[int, ...] = ()
    if getattr(args, "fset", ""):
        fset = tuple(int(tok) for tok in args.fset.split(",") if tok.strip())
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        output=getattr(args, "output", None),
        cover=getattr(args, "cover", None),
        t=getattr(args, "t", None),
        budget=args.budget,
        catalog_cap=args.catalog_cap,
        clique_cap=args.clique_cap,
        exact=getattr(args, "exact", False),
        threads=args.threads,
        seed=args.seed,
        graph6=args.graph6,
        mode=mode,
        generator=getattr(args, "generator", None),
        vertex=getattr(args, "vertex", None),
        fset=fset,
        gadget=getattr(args, "gadget", None),
        out_dir=getattr(args, "out_dir", None),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        config = config_from_args(argv)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
