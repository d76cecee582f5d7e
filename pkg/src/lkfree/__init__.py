"""Counting r-graphs that avoid forbidden induced edge counts on k-sets."""

from .core import (Hypergraph, HypergraphError, canonical_form, complement, induced_edge_count,
                   induced_subhypergraph, is_isomorphic, link_graph, rank_subset, unrank_subset)
from .freeness import ForbiddenList, FreenessReport, complement_list, is_3_good, is_lk_free
from .csp import Constraint, Csp, count_satisfying, derive_extension_csp, extremal_csp, is_satisfying
from .enumerator import (BudgetExceeded, CountReport, count_iso_classes, count_labeled, enumerate_free,
                         extension_set, max_d)

__version__ = "0.1.0"
