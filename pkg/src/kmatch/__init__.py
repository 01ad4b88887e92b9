"""Exact tools for k-matchings in r-uniform hypergraphs.

Core currency: bitset vertex sets and canonically ordered hypergraphs.
On top of that: candidate extremal families and their exact counts, a
deterministic branch-and-bound k-matching solver, index-shift compression,
capture-coupling verification, and a desk-scale exact extremal search.
"""

from .constructions import (KSetFamily, complete_hypergraph, ekr_b_family,
                            frankl_family, generalized_family, h0_family)
from .core import (Hypergraph, Params, VertexSet, binomial, colex_rank,
                   colex_unrank, degree, delete, enumerate_r_subsets, link,
                   max_degree_kset, read_hypergraph, write_hypergraph)
from .counting import (b_family_size, count_cover_oracle, family_size,
                       frankl_size, g_count, g_recurrence_check,
                       g_recurrence_gap)
from .coupling import (CouplingContext, CouplingReport, captures,
                       coupling_map, disjointify, disjointify_step,
                       verify_coupling)
from .errors import ParameterError, ResourceBudgetError
from .extremal import (CandidateReport, ConjectureReport, LargeNReport,
                       check_conjecture, conjecture_value, extremal_number,
                       large_n_threshold, verify_large_n_inequalities)
from .matching import (MatchingWitness, greedy_maximal_k_matching,
                       has_k_matching_of_size, is_k_matching, nu_k)
from .shifting import is_stable, shift, stabilize

__version__ = "0.1.0"

__all__ = [
    "Hypergraph", "KSetFamily", "MatchingWitness", "Params", "VertexSet",
    "CandidateReport", "ConjectureReport", "CouplingContext", "CouplingReport",
    "LargeNReport", "ParameterError", "ResourceBudgetError",
    "binomial", "colex_rank", "colex_unrank", "degree", "delete",
    "enumerate_r_subsets", "link", "max_degree_kset",
    "read_hypergraph", "write_hypergraph",
    "complete_hypergraph", "ekr_b_family", "frankl_family",
    "generalized_family", "h0_family",
    "b_family_size", "count_cover_oracle", "family_size", "frankl_size",
    "g_count", "g_recurrence_check", "g_recurrence_gap",
    "captures", "coupling_map", "disjointify", "disjointify_step",
    "verify_coupling",
    "check_conjecture", "conjecture_value", "extremal_number",
    "large_n_threshold", "verify_large_n_inequalities",
    "greedy_maximal_k_matching", "has_k_matching_of_size", "is_k_matching",
    "nu_k",
    "is_stable", "shift", "stabilize",
]
