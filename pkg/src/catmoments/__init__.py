"""Exact generation and Stieltjes moment certification of sequences driven
by three-term weight recurrences.

Everything is computed over arbitrary-precision rationals; there is no
floating point anywhere.  The package builds recursive matrices from weight
pairs, certifies total positivity of their tridiagonal coefficient
matrices, evaluates both Hankel determinant families, and cross-validates
three independent computation routes: the recurrence, the Hankel
factorization, and generating-function expansion.
"""

from .exact import (
    FALSE,
    INCONCLUSIVE,
    TRUE,
    DenseMatrix,
    all_minors_nonneg,
    as_rat,
    det_bareiss,
    det_cofactor,
    format_rat,
)
from .hankel import (
    FAIL,
    PASS,
    MomentSequence,
    StieltjesReport,
    TotalsDiagonal,
    build_hankel,
    hankel_det_product,
    stieltjes_check,
    verify_H_eq_RTRt,
)
from .jacobi import (
    JacobiMatrix,
    JacobiParams,
    MinorChain,
    TPReport,
    leading_minors,
    tp_by_leading_minors,
    tp_certify,
    tp_check_sections,
    tp_criterion_pqst,
    tp_sufficient_dominance,
)
from .recursive import (
    RecursiveMatrix,
    build_recursive,
    catalan_like,
    motzkin_oracle,
    verify_RJ_identity,
    verify_step_factorization,
)
from .seqspec import (
    CATALOG,
    CATALOG_NAMES,
    CatalogEntry,
    ConstantTail,
    PolynomialTail,
    SequenceSpec,
    catalog_lookup,
    pqst_of,
)
from .series import (
    ClosedFormGF,
    InverseSqrtGF,
    NamedGF,
    Series,
    TiedQGF,
    TiedQPGF,
    closed_form_d,
    closed_form_h,
    column_gf,
    gf_expand,
    gf_from_json,
    gf_to_json,
    riordan_column_check,
    solve_d,
    solve_h,
    sqrt_discriminant,
)

__version__ = "0.1.0"

__all__ = [
    "TRUE",
    "FALSE",
    "INCONCLUSIVE",
    "PASS",
    "FAIL",
    "DenseMatrix",
    "as_rat",
    "format_rat",
    "det_bareiss",
    "det_cofactor",
    "all_minors_nonneg",
    "SequenceSpec",
    "ConstantTail",
    "PolynomialTail",
    "CatalogEntry",
    "CATALOG",
    "CATALOG_NAMES",
    "catalog_lookup",
    "pqst_of",
    "RecursiveMatrix",
    "build_recursive",
    "catalan_like",
    "motzkin_oracle",
    "verify_RJ_identity",
    "verify_step_factorization",
    "JacobiMatrix",
    "JacobiParams",
    "MinorChain",
    "TPReport",
    "leading_minors",
    "tp_by_leading_minors",
    "tp_sufficient_dominance",
    "tp_criterion_pqst",
    "tp_check_sections",
    "tp_certify",
    "MomentSequence",
    "StieltjesReport",
    "TotalsDiagonal",
    "build_hankel",
    "stieltjes_check",
    "verify_H_eq_RTRt",
    "hankel_det_product",
    "Series",
    "solve_h",
    "solve_d",
    "sqrt_discriminant",
    "closed_form_h",
    "closed_form_d",
    "column_gf",
    "ClosedFormGF",
    "TiedQGF",
    "TiedQPGF",
    "InverseSqrtGF",
    "NamedGF",
    "gf_expand",
    "gf_to_json",
    "gf_from_json",
    "riordan_column_check",
]
