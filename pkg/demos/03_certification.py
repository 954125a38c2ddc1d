"""
Which results are certified, and by what rule
=============================================

The classifier runs every applicable rule and reports two verdicts:
whether the computed dimension is exact or only an upper bound, and
whether the family is known to fill out a generically smooth component
of the Hilbert scheme.  Rules are cited by id so a verdict can be
traced back to the hypothesis that produced it.
"""

from detloci import DegreeData, classify

families = [
    DegreeData((0, 0), (1, 1, 1), 1),          # R1 territory, codim 2
    DegreeData((0, 0), (1, 1, 1, 3), 1),       # codim 3 with a jump
    DegreeData((0, 0, 0), (1,) * 6, 1),        # known non-component
    DegreeData((0, 0), (1,) * 6, 2),           # codim 5, conditional
    DegreeData((0, 0), (1,) * 6, 2, 7),        # same family over char 7
]

for d in families:
    v = classify(d)
    head = f"b={list(d.b)} a={list(d.a)} n={d.n}"
    if d.charK:
        head += f" char={d.charK}"
    print(head)
    print(f"  dimension: {v.dim_status}"
          + (f" = {v.dim_value}" if v.dim_value is not None else "")
          + (f"  [{v.dim_rule}]" if v.dim_rule else ""))
    print(f"  component: {v.component_status}"
          + (f"  [{v.component_rule}]" if v.component_rule else ""))
    for note in v.notes:
        print(f"  note: {note}")
    failed = [c.name for c in v.checks if not c.passed]
    if failed:
        print(f"  failed checks: {', '.join(failed)}")
    print()
