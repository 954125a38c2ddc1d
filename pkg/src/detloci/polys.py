"""Sparse multivariate polynomials over a prime field.

Exponent vectors are plain int tuples of fixed length nvars; terms live
in a dict mapping exponent tuple to a coefficient in 1..p-1.  Just
enough arithmetic for building matrices and expanding their minors; the
heavy lifting happens in coefficient matrices, not here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


@dataclass
class SparsePoly:
    nvars: int
    p: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for exps, cf in self.terms.items():
            cf %= self.p
            if cf:
                cleaned[tuple(int(e) for e in exps)] = cf
        self.terms = cleaned

    @classmethod
    def zero(cls, nvars: int, p: int) -> "SparsePoly":
        return cls(nvars, p, {})

    @classmethod
    def monomial(cls, nvars: int, p: int, exps, coeff: int = 1) -> "SparsePoly":
        return cls(nvars, p, {tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for exps, cf in other.terms.items():
            out[exps] = (out.get(exps, 0) + cf) % self.p
        return SparsePoly(self.nvars, self.p, out)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for exps, cf in other.terms.items():
            out[exps] = (out.get(exps, 0) - cf) % self.p
        return SparsePoly(self.nvars, self.p, out)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = (out.get(key, 0) + c1 * c2) % self.p
        return SparsePoly(self.nvars, self.p, out)

    def scale(self, c: int) -> "SparsePoly":
        return SparsePoly(self.nvars, self.p,
                          {e: (cf * c) % self.p for e, cf in self.terms.items()})

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending lex order of exponent tuples, x0-major."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, cf in self.sorted_terms():
            vars_part = " ".join(f"x{i}^{e}" for i, e in enumerate(exps))
            parts.append(f"{cf} {vars_part}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def monomial_exponents(nvars: int, deg: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of total degree deg, descending lex, x0-major."""
    if deg < 0:
        return ()
    if nvars == 1:
        return ((deg,),)
    out = []
    for e0 in range(deg, -1, -1):
        for rest in monomial_exponents(nvars - 1, deg - e0):
            out.append((e0,) + rest)
    return tuple(out)


class MonomialBasis:
    """Indexed monomial basis of one graded piece, with product lookup.

    Encodes exponent tuples in base `enc_base` so the index of a product
    monomial can be found with one addition and one binary search; the
    base must exceed every exponent that can appear, which for products
    landing in degree v means enc_base >= v + 1.
    """

    def __init__(self, nvars: int, deg: int, enc_base: int | None = None):
        self.nvars = nvars
        self.deg = deg
        self.exponents = monomial_exponents(nvars, deg)
        self.dim = len(self.exponents)
        self.enc_base = enc_base if enc_base is not None else deg + 1
        self._weights = np.array(
            [self.enc_base ** i for i in range(nvars)], dtype=np.int64)
        self.exp_array = (np.array(self.exponents, dtype=np.int64)
                          if self.dim else np.zeros((0, nvars), dtype=np.int64))
        codes = self.exp_array @ self._weights
        self._order = np.argsort(codes, kind="stable")
        self._sorted_codes = codes[self._order]
        self.index = {e: i for i, e in enumerate(self.exponents)}

    def encode_shift(self, exps) -> int:
        """Encoding of a fixed exponent shift, e.g. one term of a multiplier."""
        return int(np.dot(np.array(exps, dtype=np.int64), self._weights))

    def codes_of(self, exp_array: np.ndarray) -> np.ndarray:
        return exp_array @ self._weights

    def locate(self, codes: np.ndarray) -> np.ndarray:
        """Indices (in basis order) of monomials with the given codes."""
        pos = np.searchsorted(self._sorted_codes, codes)
        if pos.size and (pos.max(initial=0) >= self.dim
                         or not np.array_equal(self._sorted_codes[pos], codes)):
            raise ValueError("monomial code outside basis")
        return self._order[pos]

    def vector(self, poly: SparsePoly) -> np.ndarray:
        """Dense coefficient vector of a polynomial of this degree."""
        vec = np.zeros(self.dim, dtype=np.int64)
        for exps, cf in poly.terms.items():
            vec[self.index[exps]] = cf
        return vec
