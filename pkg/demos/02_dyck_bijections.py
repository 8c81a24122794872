"""
Bijections between pattern-avoiding permutations and Dyck paths.

Three maps carry a permutation statistic to a path statistic:

* phi on 321-avoiders: inversions become peak heights minus one.
* Krattenthaler's map on 231-avoiders: occurrences of 31-2 become the mass.
* theta on Dyck paths: the t statistic becomes the mass.

and the Simion-Schmidt map psi sends Denert's statistic on 321-avoiders to
the major index on 231-avoiders.
"""

from collections import Counter

from vincular import dyck
from vincular.permutations import enumerate_avoiders, occurrences
from vincular.statistics import den, inv, maj, simion_schmidt

perm = (4, 5, 1, 7, 2, 3, 9, 12, 6, 8, 10, 11, 15, 13, 14)
path = dyck.phi_321(perm)
print("pi        =", " ".join(map(str, perm)))
print("phi(pi)   =", path)
print("peaks     =", dyck.peak_heights(path))
print("inv(pi)   =", inv(perm), "= sum(h - 1) =", sum(h - 1 for h in dyck.peak_heights(path)))
print("round trip ok:", dyck.phi_321_inv(path) == perm)

print()
pi = (3, 1, 4, 6, 2, 8, 5, 7)
image = simion_schmidt(pi)
print("psi(", "".join(map(str, pi)), ") =", "".join(map(str, image)))
print("den(pi) =", den(pi), " maj(psi(pi)) =", maj(image))

print()
print("31-2 on S_n(231) versus mass of the image path:")
for n in range(1, 7):
    by_perm = Counter(occurrences("31-2", s) for s in enumerate_avoiders(n, "231"))
    by_path = Counter(dyck.mass(dyck.phi_kratt(s)) for s in enumerate_avoiders(n, "231"))
    print(f"  n={n}", dict(sorted(by_perm.items())), "same" if by_perm == by_path else "DIFFERENT")

print()
print("theta sends t to mass; on UUUUDDDD:")
p = "UUUUDDDD"
print("  t(p) =", dyck.t_stat(p), " theta(p) =", dyck.theta(p), " mass =", dyck.mass(dyck.theta(p)))
