"""Exact matrix models of the exceptional Lie algebras g2, d4, f4, e6, e7, e8.

Everything is computed over the Gaussian rationals: octonion and Jordan
algebra arithmetic, the graded bracket towers, adjoint-representation
matrices, Killing forms, root systems, Dynkin diagrams, compact real
forms, and the classical subalgebra embeddings.
"""

from exalg.adjoint import (
    BasisLabel,
    BasisSet,
    LABELS,
    LEVEL_DIMS,
    ad_matrix,
    ad_matrix_assembled,
    ad_matrix_level,
    basis_element,
    build_basis,
    clip,
    unit_element,
)
from exalg.exact import (
    AmbiguousSolution,
    ColumnEchelon,
    DenseVector,
    GaussianRational,
    NoSolution,
    SparseMatrix,
    gr,
    mat_commutator,
    nullspace_exact,
    rank_exact,
    solve_exact,
)

__all__ = [
    "AmbiguousSolution",
    "BasisLabel",
    "BasisSet",
    "ColumnEchelon",
    "DenseVector",
    "GaussianRational",
    "LABELS",
    "LEVEL_DIMS",
    "NoSolution",
    "SparseMatrix",
    "ad_matrix",
    "ad_matrix_assembled",
    "ad_matrix_level",
    "basis_element",
    "build_basis",
    "clip",
    "gr",
    "mat_commutator",
    "nullspace_exact",
    "rank_exact",
    "solve_exact",
]
