"""Exact multidegrees of inverse pairs of symmetric matrices.

The package computes, entirely in exact arithmetic: the bidegree coefficient
lists of the variety of pairs (M, inverse of M) of symmetric n x n matrices
and of the boundary pairs with product zero; the algebraic degree of
semidefinite programming; ML-degrees of generic linear concentration models
together with their interpolating polynomials in n; and symbolic / rational
certificates (graph vanishing, adjugate identity, swap symmetry, span
comparison, rank witnesses) backing the combinatorial formulas.
"""

from .exact import InvariantViolation, SkewMatrix, binomial, pfaffian, pfaffian_reference
from .mldegree import (
    DifferenceReport,
    MLPolynomial,
    finite_difference_check,
    ml_degree,
    ml_polynomial,
    ml_table,
    smallest_valid_n,
)
from .multidegree import (
    MultidegreeIdentityReport,
    MultidegreeTable,
    beta,
    beta_vector,
    gamma_degrees,
    multidegree_table,
    sdp_degree,
    sigma_coefficients,
    sym_dimension,
    verify_multidegree_identity,
)
from .psi import PsiTable, Subsequence, p_alpha, psi_pair, psi_seq, psi_single, psi_table
from .symbolic import (
    RationalSymMatrix,
    SparsePoly,
    SymbolicMatrix,
    VanishingReport,
    VarId,
    adjugate,
    adjugate_identity_holds,
    adjugate_sym,
    det_sym,
    determinant,
    generic_sym_matrix,
    graph_ideal_generators,
    mat_mul,
    matrix_rank,
    product_entries,
    product_matrix,
    spans_product_entries,
    sparse_rank,
    swap_sides,
    swap_symmetry_holds,
    verify_graph_vanishing,
    witness_pair_valid,
    witness_rank_pair,
    xvar,
    yvar,
)

__version__ = "0.1.0"

__all__ = [
    "InvariantViolation",
    "SkewMatrix",
    "binomial",
    "pfaffian",
    "pfaffian_reference",
    "PsiTable",
    "Subsequence",
    "p_alpha",
    "psi_pair",
    "psi_seq",
    "psi_single",
    "psi_table",
    "MultidegreeIdentityReport",
    "MultidegreeTable",
    "beta",
    "beta_vector",
    "gamma_degrees",
    "multidegree_table",
    "sdp_degree",
    "sigma_coefficients",
    "sym_dimension",
    "verify_multidegree_identity",
    "DifferenceReport",
    "MLPolynomial",
    "finite_difference_check",
    "ml_degree",
    "ml_polynomial",
    "ml_table",
    "smallest_valid_n",
    "RationalSymMatrix",
    "SparsePoly",
    "SymbolicMatrix",
    "VanishingReport",
    "VarId",
    "adjugate",
    "adjugate_identity_holds",
    "adjugate_sym",
    "det_sym",
    "determinant",
    "generic_sym_matrix",
    "graph_ideal_generators",
    "mat_mul",
    "matrix_rank",
    "product_entries",
    "product_matrix",
    "spans_product_entries",
    "sparse_rank",
    "swap_sides",
    "swap_symmetry_holds",
    "verify_graph_vanishing",
    "witness_pair_valid",
    "witness_rank_pair",
    "xvar",
    "yvar",
    "__version__",
]
