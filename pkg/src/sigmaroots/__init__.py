"""Root combinatorics for quivers.

Positive roots of the underlying graph, membership in the set of simple
dimension vectors of the deformed preprojective algebra at a rational
weight, local graphs of representation types, containment of tame
settings, and the genetic closure that rebuilds the simple set
inductively.
"""

from .quiver import (
    ENTRY_CAP,
    DimVector,
    Quiver,
    Weight,
    format_vector,
    glex_key,
    iter_box,
    parse_vector,
    unit_vector,
)
from .roots import RootClass, classify_root, in_fundamental_region, positive_roots_upto, reflect
from .sigma import (
    SigmaContext,
    SigmaReason,
    SigmaVerdict,
    in_sigma,
    max_decomp_sum,
    minimal_vectors,
    roots_lambda,
    sigma_upto,
)
from .local import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    RepType,
    UGraph,
    ext_dim,
    local_graph,
    parse_rep_type,
    refine_type,
    rep_types,
    underlying_graph,
)
from .tame import Embedding, TameSetting, catalog, contains_tame, find_all_tame
from .genetic import (
    CompareRecord,
    CompareReport,
    GeneticCert,
    compare,
    genetic_closure,
    irreducible_sigma_check,
    seeds,
)
from . import oracle

__all__ = [
    "ENTRY_CAP",
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "CompareRecord",
    "CompareReport",
    "DimVector",
    "Embedding",
    "GeneticCert",
    "Quiver",
    "RepType",
    "RootClass",
    "SigmaContext",
    "SigmaReason",
    "SigmaVerdict",
    "TameSetting",
    "UGraph",
    "Weight",
    "catalog",
    "classify_root",
    "compare",
    "contains_tame",
    "ext_dim",
    "find_all_tame",
    "format_vector",
    "genetic_closure",
    "glex_key",
    "in_fundamental_region",
    "in_sigma",
    "irreducible_sigma_check",
    "iter_box",
    "local_graph",
    "max_decomp_sum",
    "minimal_vectors",
    "oracle",
    "parse_rep_type",
    "parse_vector",
    "positive_roots_upto",
    "reflect",
    "refine_type",
    "rep_types",
    "roots_lambda",
    "seeds",
    "sigma_upto",
    "underlying_graph",
    "unit_vector",
]
