"""
Totals of vincular patterns over 231- and 321-avoiders.

Every class S_n(tau) for a classical tau of length 3 has C_n members.  The
interesting question is how often a *vincular* pattern occurs summed over
such a class.  Run this script to see brute-force totals next to the
generating-function coefficients and the binomial closed forms.
"""

from vincular.closed_forms import lookup
from vincular.permutations import CLASSICAL_3, enumerate_avoiders, total_occurrences
from vincular.series import catalan

N = 9

print("Class sizes (each column should be the Catalan numbers):")
for tau in CLASSICAL_3:
    sizes = [sum(1 for _ in enumerate_avoiders(n, tau)) for n in range(N + 1)]
    print(f"  S_n({tau}):", sizes)
print("  C_n:       ", [catalan(n) for n in range(N + 1)])

# A handful of patterns with a binomial closed form on 231-avoiders.
print()
for text in ["21", "2-13", "213", "123"]:
    entry = lookup(text, "231")
    series = entry.series(N)
    brute = [total_occurrences(n, "231", text) for n in range(N + 1)]
    closed = [entry.closed_form(n) for n in range(N + 1)]
    print(f"({text}) on S_n(231)  <->  {entry.expression}  =  {entry.closed_form.name}")
    print("   brute  ", brute)
    print("   series ", series.to_list())
    print("   closed ", closed)

# Patterns without a binomial form are still pinned down by the series.
print()
for text in ["1-23", "3-21", "1-32"]:
    entry = lookup(text, "231")
    print(f"({text}) <-> {entry.expression}:", [total_occurrences(n, "231", text) for n in range(N + 1)])

# On 321-avoiders, inversions split into three vincular pieces.
print()
for text in ["2-1", "21", "31-2", "23-1"]:
    print(f"({text}) on S_n(321):", [total_occurrences(n, "321", text) for n in range(N + 1)])
print("(2-1) = (21) + (31-2) + (23-1), and (31-2) = (23-1) column by column.")
