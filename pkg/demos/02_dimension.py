"""
Dimension of the locus of good determinantal schemes
====================================================

For each family W(b; a) the engine reports the degree sum ell, the
matrix-parameter count lambda, the correction terms K_i, and the final
dimension, all in exact integer arithmetic.
"""

from detloci import DegreeData, dimension_report

families = [
    ("twisted cubic curve in P^3", DegreeData((0, 0), (1, 1, 1), 1)),
    ("degree-15 curve in P^5", DegreeData((0, 0, 0), (1,) * 6, 1)),
    ("degree-21 curve in P^6", DegreeData((0, 0, 0), (1,) * 7, 1)),
    ("degree-6 surface in P^7", DegreeData((0, 0), (1,) * 6, 2)),
    ("unstable family with a jump column", DegreeData((0,), (1, 1, 5), 1)),
]

for label, d in families:
    rep = dimension_report(d)
    print(label)
    print(f"  t = {d.t}, c = {d.c}, ambient P^{d.N}")
    print(f"  ell = {rep.ell}, lambda = {rep.lam}, K = {list(rep.k)}")
    print(f"  aut = {rep.aut}, stable = {rep.stable}")
    print(f"  dim W = {rep.dim_w}  (cross-check ok: {rep.cross_check_ok})")
    print()

# empty degree data short-circuits: no scheme, no dimension
rep = dimension_report(DegreeData((0, 0), (0, 1, 1), 1))
print("degenerate data (a zero-degree column):", rep)
