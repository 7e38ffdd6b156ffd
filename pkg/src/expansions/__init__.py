"""Crosscuts, expansions, and small-instance Turan search for triple systems."""

from .core import (Graph, TripleSystem, canonical_edge, canonical_triple, codegree,
                   edge_codegree_extremes, is_linear, neighborhood, remove_vertices,
                   shadow)
from .crosscuts import (CrosscutPair, Expansion, best_crosscut_pair,
                        complete_forest_to_tree, crosscut_audit, crosscut_number,
                        expand, forest_lambda, min_crosscut, tree_crosscut_number,
                        tree_lambda)
from .extraction import (AugmentedFamily, SetFamily, Sunflower,
                         find_biclique_avoiding_lists, find_sunflower, full_subgraph,
                         random_list_filter, select_disjoint_augmented,
                         sunflower_threshold)
from .generate import forests, trees, triple_trees
from .ramsey import (COLUMN_CANONICAL, MONOCHROMATIC, RAINBOW, ROW_CANONICAL,
                     GridColoring, ListAssignment, Multicoloring, StructuredSearch,
                     build_list_assignment, classify, extract_multicoloring,
                     find_classified_subgrid, find_structured_multicoloring)
from .search import (EmbeddingCertificate, TuranResult, audit_forest_bound,
                     audit_sigma_jump, contains, contains_expansion, graph_contains,
                     lower_bound_construction, turan_number)

__all__ = [
    "Graph", "TripleSystem", "canonical_edge", "canonical_triple", "codegree",
    "edge_codegree_extremes", "is_linear", "neighborhood", "remove_vertices",
    "shadow",
    "CrosscutPair", "Expansion", "best_crosscut_pair", "complete_forest_to_tree",
    "crosscut_audit", "crosscut_number", "expand", "forest_lambda", "min_crosscut",
    "tree_crosscut_number", "tree_lambda",
    "AugmentedFamily", "SetFamily", "Sunflower", "find_biclique_avoiding_lists",
    "find_sunflower", "full_subgraph", "random_list_filter",
    "select_disjoint_augmented", "sunflower_threshold",
    "forests", "trees", "triple_trees",
    "COLUMN_CANONICAL", "MONOCHROMATIC", "RAINBOW", "ROW_CANONICAL",
    "GridColoring", "ListAssignment", "Multicoloring", "StructuredSearch",
    "build_list_assignment", "classify", "extract_multicoloring",
    "find_classified_subgrid", "find_structured_multicoloring",
    "EmbeddingCertificate", "TuranResult", "audit_forest_bound", "audit_sigma_jump",
    "contains", "contains_expansion", "graph_contains", "lower_bound_construction",
    "turan_number",
]
