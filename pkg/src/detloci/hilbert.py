"""Hilbert function and Hilbert polynomial of the generic family member.

Both come from the Eagon-Northcott complex.  The function is the
alternating sum of graded piece dimensions with the truncating binomial
convention; the polynomial expands each C(v + s + N, N) as the exact
rational polynomial prod_{k=1..N} (v + s + k) / N! and sums with signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .degrees import DegreeData, is_nonempty
from .resolutions import eagon_northcott, euler_char


class EmptyLocusError(ValueError):
    """The family is empty, there is no scheme to measure."""


class ConsistencyError(ValueError):
    """The declared scheme dimension disagrees with the polynomial degree."""


def hilbert_function(d: DegreeData, v: int) -> int:
    """H_{R/I}(v) for the generic member, exact."""
    return euler_char(eagon_northcott(d), v, d.N)


@lru_cache(maxsize=None)
def _rising_product(s: int, N: int) -> tuple[int, ...]:
    """Integer coefficients of N! * C(v + s + N, N) as a polynomial in v."""
    coeffs = [1]
    for k in range(1, N + 1):
        const = s + k
        nxt = [0] * (len(coeffs) + 1)
        for e, cf in enumerate(coeffs):
            nxt[e] += cf * const
            nxt[e + 1] += cf
        coeffs = nxt
    return tuple(coeffs)


def _poly_coeffs(d: DegreeData) -> tuple[Fraction, ...]:
    """Hilbert polynomial coefficients, ascending, trailing zeros removed."""
    N = d.N
    num = [0] * (N + 1)
    for k, term in enumerate(eagon_northcott(d).terms):
        sign = -1 if k % 2 else 1
        for s in term.twists:
            for e, cf in enumerate(_rising_product(s, N)):
                num[e] += sign * cf
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    fact = math.factorial(N)
    return tuple(Fraction(x, fact) for x in num)


@dataclass(frozen=True)
class HilbertSummary:
    """Hilbert polynomial plus the invariants read off from it."""

    coeffs: tuple[Fraction, ...]
    dimension: int
    degree: int
    genus: int | None

    def evaluate(self, v: int) -> Fraction:
        acc = Fraction(0)
        for cf in reversed(self.coeffs):
            acc = acc * v + cf
        return acc

    def to_json(self) -> dict:
        return {
            "poly": [str(cf) for cf in self.coeffs],
            "dim": self.dimension,
            "degree": str(self.degree),
            "genus": self.genus,
        }


def hilbert_polynomial(d: DegreeData) -> HilbertSummary:
    """Exact Hilbert polynomial with dimension, degree, and genus for curves.

    Raises EmptyLocusError on empty families and ConsistencyError if the
    polynomial degree does not equal n.  The degree of the scheme is
    n! times the leading coefficient; the arithmetic genus 1 - p(0) is
    only reported for curves.
    """
    if not is_nonempty(d):
        raise EmptyLocusError(f"no matrix of degrees b={d.b}, a={d.a} exists")
    coeffs = _poly_coeffs(d)
    deg = len(coeffs) - 1
    if coeffs == (Fraction(0),):
        raise ConsistencyError("Hilbert polynomial vanishes identically")
    if deg != d.n:
        raise ConsistencyError(
            f"Hilbert polynomial has degree {deg}, declared dimension is {d.n}")
    scheme_degree = coeffs[-1] * math.factorial(deg)
    if scheme_degree.denominator != 1 or scheme_degree <= 0:
        raise ConsistencyError(f"impossible scheme degree {scheme_degree}")
    genus = None
    if d.n == 1:
        g = 1 - coeffs[0]
        if g.denominator != 1:
            raise ConsistencyError(f"non-integral genus {g}")
        genus = int(g)
    return HilbertSummary(coeffs, deg, int(scheme_degree), genus)


def check_codim(d: DegreeData) -> bool:
    """Whether the Hilbert polynomial degree matches the declared n.

    For every nonempty valid input this holds identically: the minors
    always cut codimension c out of P^{n+c}, so the polynomial tracks n
    no matter which n was declared.  Kept as the documented contract.
    """
    if not is_nonempty(d):
        raise EmptyLocusError(f"no matrix of degrees b={d.b}, a={d.a} exists")
    return len(_poly_coeffs(d)) - 1 == d.n
