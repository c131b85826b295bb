"""
Worked examples: oblique and curvilinear asymptotes
===================================================

Three small rational functions, each solved with the determinant formula.
Run with ``python demos/01_worked_examples.py``.
"""

from asympoly import Method, asymptote_of, build_matrix, det_hessenberg
from asympoly.parser import format_polynomial, parse_rational_function

###############################################################################
# An oblique asymptote. The degree gap k = 1, so we need theta_0 and theta_1.

f = parse_rational_function("(5x^3+13x^2+3x+9)/(4x^2+5x+7)")
print(f, "  n =", f.n, " k =", f.k)

m1 = build_matrix(f, 1)
print("M_1 =", [[str(v) for v in row] for row in m1.entries])
print("det M_1 =", det_hessenberg(m1))  # -27, so theta_1 = 27/16

result = asymptote_of(f)
print("y =", format_polynomial(result.asymptote))

###############################################################################
# A curvilinear asymptote, k = 2. Zero coefficients (no x^2 term in
# 2x^2 - 5) still appear in the matrices.

f = parse_rational_function("(x^4-2x^3+3x-9)/(2x^2-5)")
result = asymptote_of(f, keep_matrices=True)
for t in result.traces:
    print(f"alpha={t.alpha}  det={t.det_value}  theta={t.theta}")
print("y =", format_polynomial(result.asymptote))
print("LaTeX:", format_polynomial(result.asymptote, "latex"))

###############################################################################
# The formula against plain long division on the first example.

f = parse_rational_function("(8x^3+7)/(x-4)")
by_det = asymptote_of(f, Method.DETERMINANT)
by_div = asymptote_of(f, Method.DIVISION)
print("determinant:", format_polynomial(by_det.asymptote), " remainder", format_polynomial(by_det.remainder))
print("division:   ", format_polynomial(by_div.asymptote), " remainder", format_polynomial(by_div.remainder))
assert by_det.asymptote == by_div.asymptote
