"""
Exact generating functions: fixed points, Newton iteration, continued fraction.

B = 1/sqrt(1-4z) and C = (1 - sqrt(1-4z))/(2z) are never evaluated
numerically; every series here is a list of exact integers (or integer
polynomials in a marker variable) truncated at a fixed order.  The numpy
part at the end only looks at growth rates.
"""

import numpy as np

from vincular import solvers
from vincular.expr import evaluate
from vincular.series import lemma_identities_check

N = 12

print("B =", evaluate("B", N).to_list())
print("C =", evaluate("C", N).to_list())
print("B - 1 - 2zBC =", evaluate("B-1-2*z*B*C", N).to_list())

failed = [name for name, ok in lemma_identities_check(30) if not ok]
print("B/C identities to order 30:", "all hold" if not failed else failed)

# Descents on 321-avoiders: F = 1 + z(1 + (t-1)z) F^2.
F = solvers.solve_des_equation(N)
print()
print("[z^5] F(t,z) =", F[5].format("t"))
print("F_1(1,z)     =", F.marker_derivative_at_one().to_list())

# The cubic solved by Newton iteration.
H = solvers.solve_Hhat_cubic(N)
print("[z^5] H-hat(t,z) =", H[5].format("t"))

# Two independent evaluations of the continued fraction agree.
cf = solvers.contfrac_F(N)
for n in range(6):
    print(f"[z^{n}] F(q,z) = {cf[n].format() if hasattr(cf[n], 'format') else cf[n]}")

# How quickly do the totals grow?  The ratio approaches 4 for every pattern.
print()
totals = np.array([float(c) for c in evaluate("z^3*B*C^5", 40).to_list()[5:]])
ratios = totals[1:] / totals[:-1]
print("ratios of consecutive (2-13) totals:", np.round(ratios[-5:], 4))
