"""Certification rules: when is the reported dimension exact, and when is
the closure of W known to be an irreducible component of the Hilbert
scheme.

Each published sufficient condition is encoded as one rule with a stable
identifier.  Dimension rules (R1..R6b) certify dim W = lambda + sum(K);
component rules (R7..R9) certify generically smooth componenthood, and
every component rule also pins the dimension, so Certified implies
Exact by construction.  R10 marks the codimension-5 gap where the only
known componenthood route runs through cohomological hypotheses this
package deliberately does not decide.

The raw hypotheses are a depth condition on the degree sequences and
two ladders of strict column-growth inequalities, (i_k) and (j_k).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .degrees import DegreeData, is_nonempty
from .dimension import DimensionReport, dimension_report


def depth_condition(d: DegreeData, alpha: int) -> bool:
    """a_{i-min(alpha,t)} >= b_i for min(alpha,t) <= i <= t (1-based b)."""
    m = min(alpha, d.t)
    return all(d.a[i - m] >= d.b[i - 1] for i in range(m, d.t + 1))


def condition_i(d: DegreeData, k: int) -> bool:
    """(i_k): a_{t+k-2} > a_{t-1} + ... + a_{t+k-4} - (a_0 + ... + a_{k-4})."""
    if not 3 <= k <= d.c:
        raise IndexError(f"condition index must be in 3..{d.c}, got {k}")
    t = d.t
    rhs = sum(d.a[t - 1: t + k - 3]) - sum(d.a[: k - 3])
    return d.a[t + k - 2] > rhs


def condition_j(d: DegreeData, k: int) -> bool:
    """(j_k), the variant with -b_1 on the right-hand side.

    k = 3 and k = 4 use a short form, both reading
    a_{t-1} + a_t - b_1 on the right; from k = 5 on the uniform shape is
    a_{t-1} + ... + a_{t+k-4} - (a_0 + ... + a_{k-5}) - b_1.  (For k = 4
    the uniform shape happens to coincide with the special form.)
    """
    if not 3 <= k <= d.c:
        raise IndexError(f"condition index must be in 3..{d.c}, got {k}")
    t = d.t
    if k in (3, 4):
        rhs = d.a[t - 1] + d.a[t] - d.b[0]
    else:
        rhs = sum(d.a[t - 1: t + k - 3]) - sum(d.a[: k - 4]) - d.b[0]
    return d.a[t + k - 2] > rhs


@dataclass
class Check:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class Verdict:
    nonempty: bool
    dim_status: str            # Exact | UpperBound | Empty
    dim_value: int | None
    dim_rule: str | None
    component_status: str      # Certified | Conditional | Unknown | Empty
    component_rule: str | None
    applied_rules: list[str] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    report: DimensionReport | None = None

    def to_json(self) -> dict:
        return {
            "nonempty": self.nonempty,
            "dim": {
                "status": self.dim_status,
                "value": None if self.dim_value is None else str(self.dim_value),
                "rule": self.dim_rule,
            },
            "component": {
                "status": self.component_status,
                "rule": self.component_rule,
            },
            "appliedRules": list(self.applied_rules),
            "checks": [c.to_json() for c in self.checks],
            "notes": list(self.notes),
        }


def _j_ladder(d: DegreeData, jays: dict[int, bool]) -> bool:
    """(j_5)..(j_c) with the waiver: (j_k) may fail when (j_{k-1}) holds.

    Vacuously true below codimension 5.
    """
    c = d.c
    if c < 5:
        return True
    if not jays[5]:
        return False
    return all(jays[k] or jays[k - 1] for k in range(6, c + 1))


_R10_NOTE = (
    "R10: dimension is exact, but componenthood needs unverified "
    "cohomological hypotheses (depth of auxiliary symmetric-power modules "
    "and first-cohomology vanishing); this package does not compute those."
)

# Families whose generic member is known NOT to span a component even
# though the dimension formula is exact: linear entries, (t, c, n) below.
_KNOWN_NON_COMPONENT = {(3, 4, 1), (3, 5, 1)}


def classify(d: DegreeData) -> Verdict:
    """Evaluate every rule, cite the first passing one per class."""
    checks: list[Check] = []
    ne = is_nonempty(d)
    checks.append(Check("nonempty", ne,
                        f"a[i-1] - b[i] > 0 for i = 1..{d.t}"))
    if not ne:
        return Verdict(False, "Empty", None, None, "Empty", None,
                       [], checks, [], DimensionReport(empty=True))

    report = dimension_report(d)
    t, c, n = d.t, d.c, d.n
    char0 = d.charK == 0

    depth2 = depth_condition(d, 2)
    depth3 = depth_condition(d, 3)
    checks.append(Check("stable", report.stable,
                        f"(c-1)*a_max = {(c - 1) * d.a[-1]} vs ell = {report.ell}"))
    checks.append(Check("depth_2", depth2, "a[i-min(2,t)] >= b[i] up to i = t"))
    checks.append(Check("depth_3", depth3, "a[i-min(3,t)] >= b[i] up to i = t"))
    checks.append(Check("char_zero", char0, f"char = {d.charK}"))

    eyes = {k: condition_i(d, k) for k in range(3, c + 1)}
    jays = {k: condition_j(d, k) for k in range(3, c + 1)}
    for k in range(3, c + 1):
        lhs = d.a[t + k - 2]
        bound_i = sum(d.a[t - 1: t + k - 3]) - sum(d.a[: k - 3])
        checks.append(Check(f"i_{k}", eyes[k],
                            f"a[{t + k - 2}] = {lhs} must exceed {bound_i}"))
        if k in (3, 4):
            bound_j = d.a[t - 1] + d.a[t] - d.b[0]
            split = " (special short form)"
        else:
            bound_j = sum(d.a[t - 1: t + k - 3]) - sum(d.a[: k - 4]) - d.b[0]
            split = ""
        checks.append(Check(f"j_{k}", jays[k],
                            f"a[{t + k - 2}] = {lhs} must exceed {bound_j}{split}"))

    dim_rules = [
        ("R1", c == 2),
        ("R2", c == 3 and n >= 1 and depth2),
        ("R3", c == 3 and n == 0 and depth2 and eyes[3]),
        ("R4", c == 4 and n >= 1 and depth3),
        ("R5", c == 5 and n >= 1 and depth3 and char0),
        ("R6", c >= 6 and depth3 and char0
         and all(eyes[k] for k in range(6, c + 1))),
        ("R6a", c >= 5 and depth3 and all(eyes[k] for k in range(5, c + 1))),
        ("R6b", c >= 4 and depth2 and all(eyes[k] for k in range(4, c + 1))),
    ]
    r5 = dict(dim_rules)["R5"]
    r8 = (((c >= 5 and n >= 1) or (c in (3, 4) and n >= 2))
          and depth3 and _j_ladder(d, jays))
    comp_rules = [
        ("R1", c == 2 and n >= 1),
        ("R7", c in (3, 4) and n >= 2 and depth3),
        ("R8", r8),
        ("R9", n >= 1 and ((c == 3 and depth2 and jays[3])
                           or (c == 4 and depth3 and jays[4]))),
    ]

    applied = [rid for rid, ok in dim_rules if ok]
    certified = [rid for rid, ok in comp_rules if ok]
    for rid in certified:
        if rid not in applied:
            applied.append(rid)

    notes: list[str] = []
    if certified:
        comp_status, comp_rule = "Certified", certified[0]
    elif c == 5 and r5 and not r8:
        comp_status, comp_rule = "Conditional", "R10"
        applied.append("R10")
        notes.append(_R10_NOTE)
    else:
        comp_status, comp_rule = "Unknown", None

    dim_passing = [rid for rid, ok in dim_rules if ok]
    if dim_passing:
        dim_status, dim_rule = "Exact", dim_passing[0]
    elif certified:
        # a component rule certifies the dimension along the way
        dim_status, dim_rule = "Exact", certified[0]
    else:
        dim_status, dim_rule = "UpperBound", None

    if ((t, c, n) in _KNOWN_NON_COMPONENT
            and len(set(d.a)) == 1 and len(set(d.b)) == 1
            and d.a[0] - d.b[0] == 1):
        notes.append(
            "known counterexample family: the generic member deforms into a "
            "strictly larger flat family, so clos(W) is not a component "
            "even though the dimension count is exact")

    return Verdict(True, dim_status, report.dim_w, dim_rule,
                   comp_status, comp_rule, applied, checks, notes, report)
