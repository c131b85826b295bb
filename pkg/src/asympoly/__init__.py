"""Exact asymptotic polynomials of rational functions."""

from .asymptote import (
    AsymptoteResult,
    CoefficientMatrix,
    Lemma21Report,
    Method,
    ThetaTrace,
    asymptote_of,
    build_matrix,
    check_lemma21,
    det_fraction_free,
    det_hessenberg,
    hessenberg_minors,
    lemma21_expression,
    theta_det,
    theta_recurrence_all,
)
from .poly_core import (
    NEG_INF,
    Polynomial,
    Rational,
    RationalFunction,
    make_rational,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_from_coeffs,
    poly_mul,
    poly_sub,
)

__version__ = "0.1.0"
