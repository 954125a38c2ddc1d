"""Homogeneous matrices realizing a given degree pattern.

Two constructions: a banded monomial matrix whose maximal minors are
known to cut out a scheme of the right codimension whenever the degree
data is nonempty, and a dense matrix with pseudorandom coefficients for
independent cross-checks.  Entry (i, j) always has degree a_j - b_i.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field

from .degrees import DegreeData, is_nonempty
from .polys import SparsePoly, monomial_exponents

DEFAULT_PRIME = 32003


class EmptyError(ValueError):
    """Degree data admits no nonempty scheme of the right codimension."""


class VariableError(ValueError):
    """Not enough variables for the requested construction."""


def format_poly(poly: SparsePoly) -> str:
    if poly.is_zero():
        return "0"
    parts = []
    for exps, cf in poly.sorted_terms():
        bits = [str(cf)]
        bits.extend(f"x{i}^{e}" for i, e in enumerate(exps) if e)
        parts.append(" ".join(bits))
    return " + ".join(parts)


@dataclass
class PolyMatrix:
    degrees: DegreeData
    p: int
    nvars: int
    variant: str
    entries: dict[tuple[int, int], SparsePoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        d = self.degrees
        for (i, j), poly in self.entries.items():
            if not (0 <= i < d.t and 0 <= j < d.t + d.c - 1):
                raise IndexError(f"entry ({i}, {j}) outside matrix shape")
            if poly.is_zero():
                raise ValueError(f"entry ({i}, {j}) stored as explicit zero")
            if not poly.is_homogeneous() or poly.degree() != d.a[j] - d.b[i]:
                raise ValueError(
                    f"entry ({i}, {j}) must be homogeneous of degree "
                    f"{d.a[j] - d.b[i]}")

    @property
    def nrows(self) -> int:
        return self.degrees.t

    @property
    def ncols(self) -> int:
        return self.degrees.t + self.degrees.c - 1

    def entry(self, i: int, j: int) -> SparsePoly:
        zero = SparsePoly.zero(self.nvars, self.p)
        return self.entries.get((i, j), zero)

    def to_text(self) -> str:
        lines = [f"# rows {self.nrows} cols {self.ncols} "
                 f"vars {self.nvars} p {self.p} variant {self.variant}"]
        for (i, j) in sorted(self.entries):
            lines.append(f"{i} {j} : {format_poly(self.entries[(i, j)])}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        ents = []
        for (i, j) in sorted(self.entries):
            terms = [[list(e), cf] for e, cf in self.entries[(i, j)].sorted_terms()]
            ents.append({"row": i, "col": j, "poly": terms})
        return {"rows": self.nrows, "cols": self.ncols, "vars": self.nvars,
                "p": self.p, "variant": self.variant, "entries": ents}


def witness_matrix(d: DegreeData, variant: str = "standard",
                   p: int = DEFAULT_PRIME) -> PolyMatrix:
    """Banded monomial matrix with entry (i, j) = x_{i+c-1-j}^{a_j - b_i}.

    Row i occupies columns i .. i+c-1, so each band entry uses one of
    x_0 .. x_{c-1} and its exponent is positive exactly when the data is
    nonempty.  The "good" variant appends x_c^{a_{i+c} - b_i} just past
    the band on every row but the last, which keeps the column ideals
    large enough for the stricter saturation properties.
    """
    if variant not in ("standard", "good"):
        raise ValueError(f"unknown variant {variant!r}")
    if not is_nonempty(d):
        raise EmptyError("degree data fails a_i > b_i, no matrix realizes it")
    t, c = d.t, d.c
    nv = d.N + 1
    if variant == "good" and c > d.N:
        raise VariableError("good variant needs variable x_c")
    entries: dict[tuple[int, int], SparsePoly] = {}
    for i in range(t):
        for j in range(i, i + c):
            u = d.a[j] - d.b[i]
            exps = [0] * nv
            exps[i + c - 1 - j] = u
            entries[(i, j)] = SparsePoly.monomial(nv, p, exps)
        j = i + c
        if variant == "good" and j <= t + c - 2:
            u = d.a[j] - d.b[i]
            exps = [0] * nv
            exps[c] = u
            entries[(i, j)] = SparsePoly.monomial(nv, p, exps)
    return PolyMatrix(d, p, nv, variant, entries)


def generic_matrix(d: DegreeData, p: int = DEFAULT_PRIME, seed: int = 0,
                   minimal: bool = True) -> PolyMatrix:
    """Dense matrix of pseudorandom forms in all N+1 variables.

    Entries of negative degree are zero; degree-zero entries are zero
    too when minimal is set (the default), otherwise a random scalar.
    The coefficient stream is a fixed function of (b, a, n, p, seed), in
    row-major entry order with monomials in descending lex order.
    """
    key = json.dumps(["detloci-generic", list(d.b), list(d.a), d.n, p, seed])
    digest = hashlib.sha256(key.encode()).digest()
    rng = random.Random(int.from_bytes(digest[:8], "big"))
    t, c = d.t, d.c
    nv = d.N + 1
    entries: dict[tuple[int, int], SparsePoly] = {}
    for i in range(t):
        for j in range(t + c - 1):
            u = d.a[j] - d.b[i]
            if u < 0 or (u == 0 and minimal):
                continue
            terms = {}
            for exps in monomial_exponents(nv, u):
                cf = rng.randrange(p)
                if cf:
                    terms[exps] = cf
            poly = SparsePoly(nv, p, terms)
            if not poly.is_zero():
                entries[(i, j)] = poly
    return PolyMatrix(d, p, nv, "generic", entries)
