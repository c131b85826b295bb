"""
What "asymptote" means, numerically
===================================

f - g is the proper fraction r/b. We tabulate it exactly at growing x, for the
right asymptote and for a truncated one.
"""

from asympoly import asymptote_of, poly_from_coeffs
from asympoly.oracle import residual, residual_decay_table
from asympoly.parser import format_polynomial, parse_rational_function

f = parse_rational_function("(8x^3+7)/(x-4)")
g = asymptote_of(f).asymptote
r = residual(f, g)
print("f - g =", r)  # 519/(x-4)

for row in residual_decay_table(f, g, [4, 10, 100, 1000, 10**6]):
    if row.pole:
        print(f"x={row.x}: pole")
    else:
        print(f"x={row.x}: {row.value} ~ {float(row.value):.3e}")

###############################################################################
# Dropping the constant term leaves a residual that tends to 128, not 0: its
# numerator degree equals the denominator degree.

bad = poly_from_coeffs([0, 32, 8])
print("wrong g =", format_polynomial(bad), " residual", residual(f, bad))
for row in residual_decay_table(f, bad, [10, 1000, 10**6]):
    print(f"x={row.x}: {float(row.value):.6f}")
