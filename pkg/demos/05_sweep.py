"""
Sweeping equal-degree families against the closed form
======================================================

For matrices whose entries all have the same degree there is a single
polynomial formula for dim W.  This sweep recomputes every family two
ways and tabulates the outcome, the same comparison `detloci scan`
writes to CSV.
"""

from detloci import DegreeData, classify, dimension_report, equal_degree_conjecture

print(f"{'t':>2} {'c':>2} {'n':>2} {'d':>2} {'dimW':>6} {'formula':>8}"
      f" {'match':>6}  dim/component")
for t in (1, 2, 3):
    for c in (2, 3, 4):
        for deg in (1, 2):
            for n in (1, 2):
                d = DegreeData((0,) * t, (deg,) * (t + c - 1), n)
                rep = dimension_report(d)
                conj = equal_degree_conjecture(t, c, deg, n)
                v = classify(d)
                verdict = f"{v.dim_status}/{v.component_status}"
                print(f"{t:>2} {c:>2} {n:>2} {deg:>2} {rep.dim_w:>6} "
                      f"{conj:>8} {str(rep.dim_w == conj):>6}  {verdict}")
