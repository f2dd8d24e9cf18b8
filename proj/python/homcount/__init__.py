"""Exact homomorphism counting and density bounds for finite simple graphs."""

from ._core import (
    DEFAULT_BUDGET,
    BoundCheck,
    BudgetExceededError,
    EmptyCodomainError,
    Error,
    Graph,
    ParseError,
    SearchStats,
    SuiteResult,
    SuiteViolation,
    all_suite_selectors,
    append_isolated,
    check_complete_codomain_bound,
    check_complete_domain_bound,
    check_edgeless_iff_one,
    check_isolated_invariance,
    complement,
    complete,
    count_homomorphisms,
    count_homomorphisms_naive,
    count_injective,
    count_mappings,
    count_ordered_cliques,
    count_proper_colorings,
    cycle,
    density,
    density_complete_complete,
    edgeless,
    generate_corpus,
    injective_density,
    is_homomorphism,
    parse_edge_list,
    parse_graph6,
    parse_graph6_lines,
    path,
    run_suite,
    strip_isolated,
    suite_description,
    write_edge_list,
    write_graph6,
)

__all__ = [
    "DEFAULT_BUDGET",
    "BoundCheck",
    "BudgetExceededError",
    "EmptyCodomainError",
    "Error",
    "Graph",
    "ParseError",
    "SearchStats",
    "SuiteResult",
    "SuiteViolation",
    "all_suite_selectors",
    "append_isolated",
    "check_complete_codomain_bound",
    "check_complete_domain_bound",
    "check_edgeless_iff_one",
    "check_isolated_invariance",
    "complement",
    "complete",
    "count_homomorphisms",
    "count_homomorphisms_naive",
    "count_injective",
    "count_mappings",
    "count_ordered_cliques",
    "count_proper_colorings",
    "cycle",
    "density",
    "density_complete_complete",
    "edgeless",
    "generate_corpus",
    "injective_density",
    "is_homomorphism",
    "parse_edge_list",
    "parse_graph6",
    "parse_graph6_lines",
    "path",
    "run_suite",
    "strip_isolated",
    "suite_description",
    "write_edge_list",
    "write_graph6",
]

__version__ = "1.0.0"
