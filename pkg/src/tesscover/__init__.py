"""Graph tessellation covers: validation, bounds, exact solving, 2-tessellability, generators."""

from .bounds import (
    BoundsReport,
    ChromaticIndexBracket,
    lower_bound,
    triangle_free_tessellation_number,
    upper_bounds,
)
from .cliquegraph import CliqueGraphResult, clique_graph, kg_intersection_sizes
from .coloring import (
    EdgeColoring,
    VertexColoring,
    bipartite_edge_coloring,
    edge_coloring_delta_plus_one,
    exact_chromatic_index,
    exact_chromatic_number,
    greedy_vertex_coloring,
    mycielskian,
)
from .constructions import (
    GadgetSpec,
    KlAnnotation,
    NaeInstance,
    fixed_t_extension,
    gadget_replacement,
    incidence_chordal_graph,
    incidence_one_two_graph,
    nae_brute_force,
    nae_constraint_graph,
    nae_instance_graph,
    parse_nae,
    pendant_extension,
    star_extension,
    verify_gadget,
)
from .corpus import CorpusSpec, connected_graphs, corpus_generate
from .graph import (
    CapacityError,
    Graph,
    GraphParseError,
    Multigraph,
    bipartition,
    format_edge_list,
    is_chordal,
    is_cluster_graph,
    is_diamond_free,
    is_triangle_free,
    maximal_cliques,
    parse_edge_list,
    parse_graph6,
    true_twin_classes,
    verify_kl_partition,
)
from .solver import (
    SolveResult,
    TessDecision,
    TessellationCatalog,
    all_min_covers_need_cliqueless_tessellation,
    enumerate_tessellations,
    exists_min_cover_without_exposed,
    greedy_cover,
    is_t_tessellable,
    min_cover_exact,
)
from .tessellation import (
    Tessellation,
    TessellationCover,
    cover_from_edge_coloring,
    cover_from_json,
    cover_from_kg_coloring,
    cover_to_json,
    exposed_maximal_cliques,
    tessellation_edges,
    validate_cover,
    validate_tessellation,
)
from .twotess import (
    RootGraph,
    TwoTessResult,
    is_two_tessellable,
    line_graph,
    recognize_line_graph_simple,
    two_tess_reference,
)

__version__ = "0.1.0"
