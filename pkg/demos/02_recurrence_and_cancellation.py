"""
Skipping the determinants
=========================

The signed determinants theta'_j obey a short linear recurrence, so the whole
asymptote can be had in O(k^2) operations. This script compares the two and
shows the cancellation polynomial whose top coefficients all vanish.
"""

from asympoly import (
    build_matrix,
    check_lemma21,
    det_fraction_free,
    lemma21_expression,
    theta_recurrence_all,
)
from asympoly.parser import format_polynomial, parse_rational_function

f = parse_rational_function("(3x^6 - x^5 + 2x^3 + 7)/(2x^2 + x - 1)")
print(f, " k =", f.k)

###############################################################################
# Recurrence values next to (-1)^j det(M_j) computed by Bareiss elimination.

for t in theta_recurrence_all(f):
    det = det_fraction_free(build_matrix(f, t.alpha))
    print(f"j={t.alpha}  recurrence={t.theta_prime!s:>6}  (-1)^j det={(-1) ** t.alpha * det!s:>6}")

###############################################################################
# For phi = 1..k, everything above degree n - phi cancels and the coefficient
# at n - phi is exactly theta'_phi.

for phi in range(1, f.k + 1):
    e = lemma21_expression(f, phi)
    rep = check_lemma21(f, phi)
    print(f"phi={phi}  E(x) = {format_polynomial(e)}")
    print(f"        surviving x^{f.n - phi} coefficient {rep.surviving} == theta'_{phi} {rep.expected}: {rep.passed}")
