"""Exact tree-indexed tropical and valuation data for Grassmannians of planes.

The package computes, for labeled trivalent trees on n leaves: membership
and reconstruction for the space of tree dissimilarity vectors, the value
semigroup of edge weightings with its graded counts, straightening and
two families of valuations on Pluecker polynomials, and the binomial
initial ideal with an exact dimension check.  All arithmetic is exact.
"""

from .trees import (
    EdgeId,
    LabeledTree,
    contract_edge,
    double_factorial,
    enumerate_trivalent,
    leaf_path,
    parse_edge_order,
    tree_equal,
    tree_from_json,
    tree_from_newick,
    tree_to_json,
    tree_to_newick,
)
from .tropical import (
    DissimilarityVector,
    EdgeWeighting,
    QuartetWitness,
    cone_of,
    dissimilarity,
    is_tropical_point,
    leaf_pairs,
    reconstruct_tree,
)
from .semigroup import (
    PairMultiset,
    SigmaWeight,
    decompose,
    gorenstein_witness_check,
    graded_count,
    in_semigroup,
    invariant_dim,
    omega,
    pieri_dim,
)
from .plucker import (
    PlueckerMonomial,
    PlueckerPolynomial,
    format_polynomial,
    is_noncrossing,
    p,
    parse_polynomial,
    straighten,
    three_term_relation,
)
from .valuation import (
    ValuationMatrix,
    ValueVector,
    monomial_weight,
    quasi_valuation_weight,
    rank_valuation,
    tropical_weight,
    valuation_matrix,
)
from .ideals import (
    EdgeMonomial,
    HilbertReport,
    initial_form,
    initial_ideal_hilbert_check,
    internal_indicator,
    monomial_map,
    toric_kernel_membership,
)
from .linalg import exact_rank

__version__ = "0.1.0"

__all__ = [
    "EdgeId",
    "LabeledTree",
    "contract_edge",
    "double_factorial",
    "enumerate_trivalent",
    "leaf_path",
    "parse_edge_order",
    "tree_equal",
    "tree_from_json",
    "tree_from_newick",
    "tree_to_json",
    "tree_to_newick",
    "DissimilarityVector",
    "EdgeWeighting",
    "QuartetWitness",
    "cone_of",
    "dissimilarity",
    "is_tropical_point",
    "leaf_pairs",
    "reconstruct_tree",
    "PairMultiset",
    "SigmaWeight",
    "decompose",
    "gorenstein_witness_check",
    "graded_count",
    "in_semigroup",
    "invariant_dim",
    "omega",
    "pieri_dim",
    "PlueckerMonomial",
    "PlueckerPolynomial",
    "format_polynomial",
    "is_noncrossing",
    "p",
    "parse_polynomial",
    "straighten",
    "three_term_relation",
    "ValuationMatrix",
    "ValueVector",
    "monomial_weight",
    "quasi_valuation_weight",
    "rank_valuation",
    "tropical_weight",
    "valuation_matrix",
    "EdgeMonomial",
    "HilbertReport",
    "initial_form",
    "initial_ideal_hilbert_check",
    "internal_indicator",
    "monomial_map",
    "toric_kernel_membership",
    "exact_rank",
    "__version__",
]
