"""Graded Betti data for the free complexes attached to degree data.

Only twists are recorded, never differentials.  Write F for the graded
free module with generators in degrees b_1..b_t (rows) and G for the one
with generators in degrees a_0..a_{t+c-2} (columns); a matrix of the
family is a map G(-)* -> F in the usual grading.  The complexes built
here are direct sums of modules of the shape

    wedge^r G* (x) S_k(F) (x) wedge^t F      or      wedge^r G* (x) S_k(F*),

and each summand contributes one twist per (subset, multiset) pair:
minus a column-degree sum over an r-subset, plus (or minus, for the
dual) a row-degree sum over a k-multiset, plus the full row-degree sum
for the wedge^t F factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .degrees import DegreeData, binom


@dataclass(frozen=True)
class GradedFreeModule:
    """A finite multiset of twists; rank is the multiplicity count."""

    twists: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "twists", tuple(sorted(self.twists)))

    @property
    def rank(self) -> int:
        return len(self.twists)


@dataclass(frozen=True)
class GradedComplex:
    """Terms indexed by homological degree, term 0 first."""

    terms: tuple[GradedFreeModule, ...]

    def betti(self) -> list[list[int]]:
        """Serializable form: one sorted twist list per term."""
        return [list(term.twists) for term in self.terms]


def _module(twists) -> GradedFreeModule:
    return GradedFreeModule(tuple(twists))


@lru_cache(maxsize=4096)
def eagon_northcott(d: DegreeData) -> GradedComplex:
    """Eagon-Northcott complex: the minimal free resolution of R/I.

    Term 0 is R itself.  Term k (1 <= k <= c) is
    wedge^{t+k-1} G* (x) S_{k-1}(F) (x) wedge^t F, so it carries one
    twist per pair of a (t+k-1)-subset S of columns and a (k-1)-multiset
    J of rows:  -sum(a_S) + sum(b_J) + sum(b).
    """
    t, c = d.t, d.c
    total_b = sum(d.b)
    terms = [_module((0,))]
    for k in range(1, c + 1):
        twists = []
        for S in combinations(range(t + c - 1), t + k - 1):
            neg = total_b - sum(d.a[j] for j in S)
            for J in combinations_with_replacement(range(t), k - 1):
                twists.append(neg + sum(d.b[i] for i in J))
        terms.append(_module(twists))
    return GradedComplex(tuple(terms))


def symmetric_power_resolution(d: DegreeData, i: int) -> GradedComplex:
    """Resolution of the i-th symmetric power of the cokernel of G* -> F*.

    For 1 <= i <= c the complex splices a head of terms
    wedge^m G* (x) S_{i-m}(F*) in homological degrees m = 0..i onto a
    tail of terms wedge^{t+k} G* (x) S_{k-i}(F) (x) wedge^t F in
    homological degrees k+1 for k = i..c-1.  i = 1 is the
    Buchsbaum-Rim complex, i = c has an empty tail.
    """
    t, c = d.t, d.c
    if not 1 <= i <= c:
        raise IndexError(f"symmetric power index must be in 1..{c}, got {i}")
    total_b = sum(d.b)
    terms = []
    for m in range(i + 1):
        twists = []
        for S in combinations(range(t + c - 1), m):
            neg = -sum(d.a[j] for j in S)
            for J in combinations_with_replacement(range(t), i - m):
                twists.append(neg - sum(d.b[x] for x in J))
        terms.append(_module(twists))
    for k in range(i, c):
        twists = []
        for S in combinations(range(t + c - 1), t + k):
            neg = total_b - sum(d.a[j] for j in S)
            for J in combinations_with_replacement(range(t), k - i):
                twists.append(neg + sum(d.b[x] for x in J))
        terms.append(_module(twists))
    return GradedComplex(tuple(terms))


@lru_cache(maxsize=4096)
def k_term_resolution(d: DegreeData, i: int) -> GradedComplex:
    """Resolution whose degree-zero Euler characteristic is K_i.

    Drop all but the first t+i-2 columns and let B be the cokernel of
    the restricted map; this resolves Hom(B, R(a_{t+i-2})).  Term k
    (0 <= k <= i-3) carries one twist per (t+k+1)-subset S of the first
    t+i-2 columns and k-multiset J of rows:
    a_{t+i-2} - sum(a_S) + sum(b_J) + sum(b).
    """
    t, c = d.t, d.c
    if not 3 <= i <= c:
        raise IndexError(f"correction index must be in 3..{c}, got {i}")
    top = d.a[t + i - 2]
    total_b = sum(d.b)
    terms = []
    for k in range(i - 2):
        twists = []
        for S in combinations(range(t + i - 2), t + k + 1):
            base = top + total_b - sum(d.a[j] for j in S)
            for J in combinations_with_replacement(range(t), k):
                twists.append(base + sum(d.b[x] for x in J))
        terms.append(_module(twists))
    return GradedComplex(tuple(terms))


def term_dimension(module: GradedFreeModule, v: int, N: int) -> int:
    """Dimension of the degree-v graded piece in N+1 variables."""
    return sum(binom(v + s + N, N) for s in module.twists)


def euler_char(cx: GradedComplex, v: int, N: int) -> int:
    """Alternating sum of graded piece dimensions in degree v."""
    return sum((-1) ** k * term_dimension(term, v, N)
               for k, term in enumerate(cx.terms))
