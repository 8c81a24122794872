"""
Staircase polyominoes counted by semiperimeter and area.

The continued fraction F(q, z) also counts staircase polyominoes:
P(q, z) = z (F(q, zq) - 1).  Here we compare that with direct enumeration
and check the classical identity relating P to squared q-binomials.
"""

from collections import Counter

from vincular import dyck, solvers
from vincular.poly import LaurentPoly

N = 8
P = solvers.polyomino_gf(N)
for n in range(2, N + 1):
    direct = LaurentPoly.from_dict(Counter(g.area for g in dyck.enumerate_polyominoes(n)))
    print(f"semiperimeter {n}: {P[n].format()}   [{'match' if direct == P[n] else 'MISMATCH'}]")

g = next(iter(dyck.enumerate_polyominoes(4)))
print()
print("a polyomino:", g.upper, "/", g.lower, "area", g.area, "-> path", dyck.xi(g))

ok, lhs, rhs = solvers.flajolet_identity_check(N)
print()
print("P(q,z) + P(1/q,z) + 2z = 1 - 1/sum z^(i+j) [i+j,i]_q [i+j,i]_(1/q):", "holds" if ok else "fails")
print("[z^4] of either side:", lhs[4].format())
