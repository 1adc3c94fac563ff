"""Walk through the exact decomposition machinery.

The colored Tornheim double series

    T(p,q,r; a,b) = sum_{m,n>=1} a^n b^(m+n) / (m^p n^q (m+n)^r)

is, term for term, a rearrangement of double polylogarithm values once the
partial-fraction identity splits 1/(m^p n^q).  This script shows the split,
a few decompositions at various colors, and rebuilds the full alternating
R-series table in bar notation.
"""
from tornheim import (
    MINUS_ONE,
    ONE,
    MTIndex,
    RootOfUnity,
    decompose,
    partial_fraction,
    r_decomposition,
    s_decomposition,
)

print("The partial-fraction split of 1/(x^2 y^3):")
for term in partial_fraction(2, 3):
    core = f"x^{term.x_exp}" if term.x_exp else f"y^{term.y_exp}"
    print(f"  {term.coefficient} / ({core} (x+y)^{term.sum_exp})")

print("\nDecompositions at assorted colors:")
cases = [
    (MTIndex(2, 1, 2), MINUS_ONE, ONE),
    (MTIndex(2, 1, 2), RootOfUnity(1, 4), RootOfUnity(1, 3)),
    (MTIndex(0, 2, 2), RootOfUnity(1, 4), MINUS_ONE),  # p=0 collapses to one term
    (MTIndex(3, 0, 2), MINUS_ONE, RootOfUnity(2, 3)),  # q=0 likewise
]
for idx, alpha, beta in cases:
    d = decompose(idx, alpha, beta)
    print(f"  T{idx}; alpha={alpha}, beta={beta}:")
    print(f"    {d.to_text()}")

print("\nThe alternating series R(p,q,r) = sum (-1)^n/(m^p n^q (m+n)^r),")
print("expanded into alternating double zeta values (bars shown with  ̄ ):")
table = [
    (1, 1, 3), (1, 2, 2), (1, 1, 5), (2, 1, 2), (2, 3, 2), (1, 2, 4), (1, 3, 3),
    (2, 1, 4), (1, 4, 2), (2, 2, 3), (3, 1, 3), (3, 2, 2), (4, 1, 2),
]
for p, q, r in table:
    terms = r_decomposition(p, q, r)
    print(f"  R({p},{q},{r}) = " + " + ".join(t.pretty() for t in terms))

print("\nAnd the companion S(p,q,r) = sum (-1)^(m+n)/(m^p n^q (m+n)^r):")
for p, q, r in [(1, 1, 3), (2, 1, 2), (2, 2, 3)]:
    terms = s_decomposition(p, q, r)
    print(f"  S({p},{q},{r}) = " + " + ".join(t.pretty() for t in terms))
