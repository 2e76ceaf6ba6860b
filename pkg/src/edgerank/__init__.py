"""Edge importance ranking for undirected networks, evaluated by edge percolation."""

from .graph import (EdgeMask, Graph, GraphError, GraphStats, InducedSubgraph,
                    NormalizationReport, build_graph, connected_components,
                    generate_ba, graph_stats, induced_subgraph,
                    largest_component_nodes, neighbors_within)
from .metrics import (DEFAULT_CLIQUE_BUDGET, CliqueSearchOverflow, EdgeScore,
                      MetricKind, RankedEdges, bn_score, di_score, dp_score,
                      max_clique_containing, rank_edges, score_all, sn_score,
                      so_score, to_score)
from .percolation import (CurvePoint, PercolationCurve, RobustnessSummary,
                          compare_metrics, evaluate_metric, kappa_bar,
                          percolate, robustness)
from .dataio import (EdgeListFormat, EdgeListParseError, REFERENCE_NM,
                     load_edge_list, reference_nm_for, write_curve_csv,
                     write_edge_list, write_ranking_csv, write_summary_csv)

__version__ = "0.1.0"

__all__ = [
    "EdgeMask", "Graph", "GraphError", "GraphStats", "InducedSubgraph",
    "NormalizationReport", "build_graph", "connected_components",
    "generate_ba", "graph_stats", "induced_subgraph",
    "largest_component_nodes", "neighbors_within",
    "DEFAULT_CLIQUE_BUDGET", "CliqueSearchOverflow", "EdgeScore",
    "MetricKind", "RankedEdges", "bn_score", "di_score", "dp_score",
    "max_clique_containing", "rank_edges", "score_all", "sn_score",
    "so_score", "to_score",
    "CurvePoint", "PercolationCurve", "RobustnessSummary", "compare_metrics",
    "evaluate_metric", "kappa_bar", "percolate", "robustness",
    "EdgeListFormat", "EdgeListParseError", "REFERENCE_NM", "load_edge_list",
    "reference_nm_for", "write_curve_csv", "write_edge_list",
    "write_ranking_csv", "write_summary_csv",
    "__version__",
]
