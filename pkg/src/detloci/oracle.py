"""Finite-field cross-checks, independent of the counting formulas.

Everything here works with an actual ideal of minors over GF(p):
Hilbert functions come from ranks of multiplication maps, syzygies from
kernels, and first-order deformations from a linear system over the
syzygy constraints.  The formula layer never feeds numbers in; only
degree data and matrices cross the boundary, which is what makes a
mismatch meaningful.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .degrees import DegreeData, is_nonempty
from .hilbert import hilbert_function
from .matrices import (DEFAULT_PRIME, EmptyError, PolyMatrix, generic_matrix,
                       witness_matrix)
from .modp import Echelon, kernel_basis
from .polys import MonomialBasis, SparsePoly
from .resolutions import eagon_northcott

GUARD = 20000


class GuardError(RuntimeError):
    """A graded piece or expansion is too large for direct linear algebra."""


def piece_dimension(nvars: int, deg: int) -> int:
    if deg < 0:
        return 0
    return math.comb(deg + nvars - 1, nvars - 1)


def _guard_piece(nvars: int, deg: int, guard: int = GUARD) -> int:
    dim = piece_dimension(nvars, deg)
    if dim > guard:
        raise GuardError(f"graded piece of dimension {dim} exceeds guard {guard}")
    return dim


@lru_cache(maxsize=None)
def graded_basis(nvars: int, deg: int) -> MonomialBasis:
    return MonomialBasis(nvars, deg)


def _det_permutations(t: int) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for perm in itertools.permutations(range(t)):
        inv = sum(1 for x in range(t) for y in range(x + 1, t)
                  if perm[x] > perm[y])
        out.append((perm, -1 if inv % 2 else 1))
    return out


def expand_minors(mat: PolyMatrix) -> list[SparsePoly]:
    """Maximal minors, one per column subset in lexicographic order."""
    t = mat.nrows
    if t > 4:
        raise GuardError("minor expansion is capped at 4 rows")
    perms = _det_permutations(t)
    minors = []
    for cols in itertools.combinations(range(mat.ncols), t):
        acc = SparsePoly.zero(mat.nvars, mat.p)
        for perm, sign in perms:
            factors = [mat.entries.get((i, cols[perm[i]])) for i in range(t)]
            if any(f is None for f in factors):
                continue
            prod = factors[0]
            for f in factors[1:]:
                prod = prod * f
            acc = acc + (prod if sign == 1 else prod.scale(-1))
        minors.append(acc)
    return minors


def multiplication_rows(g: SparsePoly, low: MonomialBasis,
                        high: MonomialBasis) -> np.ndarray:
    """Matrix of mu -> mu*g from one graded piece to another, rows = mu."""
    rows = np.zeros((low.dim, high.dim))
    if low.dim == 0:
        return rows
    base = high.codes_of(low.exp_array)
    ar = np.arange(low.dim)
    for exps, cf in g.terms.items():
        idx = high.locate(base + high.encode_shift(exps))
        rows[ar, idx] = cf
    return rows


class GradedIdeal:
    """Homogeneous ideal handled one graded piece at a time.

    Zero generators are dropped silently here; they contribute nothing
    to any graded piece.  Pieces are cached as echelon forms so callers
    can reuse both the rank and the reduction map.
    """

    def __init__(self, gens: list[SparsePoly], guard: int = GUARD):
        if not gens:
            raise ValueError("need at least one generator")
        self.nvars = gens[0].nvars
        self.p = gens[0].p
        self.guard = guard
        self.gens = [g for g in gens if not g.is_zero()]
        for g in self.gens:
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
            if g.nvars != self.nvars or g.p != self.p:
                raise ValueError("generators live in different rings")
        self._pieces: dict[int, Echelon] = {}

    def piece(self, v: int) -> Echelon:
        if v not in self._pieces:
            dim = _guard_piece(self.nvars, v, self.guard)
            high = graded_basis(self.nvars, v)
            ech = Echelon(dim, self.p)
            for g in self.gens:
                low_deg = v - g.degree()
                if low_deg < 0:
                    continue
                rows = multiplication_rows(g, graded_basis(self.nvars, low_deg),
                                           high)
                for s in range(0, rows.shape[0], 128):
                    ech.add_block(rows[s:s + 128])
            self._pieces[v] = ech
        return self._pieces[v]

    def hilbert(self, v: int) -> int:
        if v < 0:
            return 0
        return piece_dimension(self.nvars, v) - self.piece(v).rank


def ideal_hilbert_function(gens: list[SparsePoly], v: int,
                           guard: int = GUARD) -> int:
    return GradedIdeal(gens, guard).hilbert(v)


def syzygies_in_degree(gens: list[SparsePoly], e: int, guard: int = GUARD):
    """Kernel basis of (s_k) -> sum s_k g_k restricted to degree e.

    Returns the basis as int64 rows over the concatenated coefficient
    spaces, plus a layout list of (offset, width, low_degree) per
    generator; generators of degree above e get width zero.
    """
    nvars, p = gens[0].nvars, gens[0].p
    _guard_piece(nvars, e, guard)
    high = graded_basis(nvars, e)
    blocks = []
    layout = []
    off = 0
    for g in gens:
        low_deg = e - g.degree()
        if low_deg < 0:
            layout.append((off, 0, low_deg))
            continue
        low = graded_basis(nvars, low_deg)
        blocks.append(multiplication_rows(g, low, high))
        layout.append((off, low.dim, low_deg))
        off += low.dim
    if not blocks:
        return np.zeros((0, 0), dtype=np.int64), layout
    A = np.vstack(blocks).T
    return kernel_basis(A, p), layout


def tangent_dimension(d: DegreeData, gens: list[SparsePoly],
                      guard: int = GUARD) -> int:
    """Dimension of degree-zero Hom(I, R/I), the deformation tangent space.

    Unknowns are lifts h_k of the generator images, one full graded
    piece each; every syzygy in a generating degree imposes that
    sum s_k h_k falls back into the ideal.  The quotient by trivial
    lifts (h_k picked inside the ideal) happens at the end, which keeps
    the constraint matrix free of quotient bookkeeping.
    """
    if not gens:
        raise ValueError("need at least one generator")
    for g in gens:
        if g.is_zero():
            raise ValueError("zero generator: tangent space needs honest minors")
    nvars, p = gens[0].nvars, gens[0].p
    ideal = GradedIdeal(gens, guard)
    degs = [g.degree() for g in gens]
    unknown_layout = []
    total = 0
    for dg in degs:
        width = _guard_piece(nvars, dg, guard)
        unknown_layout.append((total, width))
        total += width
    cx = eagon_northcott(d)
    if len(cx.terms) > 2:
        syz_degrees = sorted({-tw for tw in cx.terms[2].twists})
    else:
        syz_degrees = []
    constraints = Echelon(total, p)
    for e in syz_degrees:
        high = graded_basis(nvars, e)
        piece_e = ideal.piece(e)
        nonpiv = piece_e.nonpivots()
        if nonpiv.size == 0:
            continue
        kern, layout = syzygies_in_degree(gens, e, guard)
        for srow in kern:
            ct = np.zeros((total, high.dim))
            for k, (off, width, low_deg) in enumerate(layout):
                if width == 0:
                    continue
                svec = srow[off:off + width]
                if not svec.any():
                    continue
                low = graded_basis(nvars, low_deg)
                s_poly = SparsePoly(nvars, p,
                                    {low.exponents[ix]: int(cv)
                                     for ix, cv in enumerate(svec) if cv})
                uo, uw = unknown_layout[k]
                ct[uo:uo + uw] = multiplication_rows(
                    s_poly, graded_basis(nvars, degs[k]), high)
            reduced = piece_e.reduce_rows(ct)
            rows = reduced[:, nonpiv].T
            for s in range(0, rows.shape[0], 128):
                constraints.add_block(rows[s:s + 128])
    trivial = sum(ideal.piece(dg).rank for dg in degs)
    return total - constraints.rank - trivial


@dataclass
class OracleReport:
    variant: str
    prime: int
    seed: int | None
    attempts: int
    vmax: int
    formula: list[int]
    observed: list[int]
    match: bool

    def to_json(self) -> dict:
        return {"variant": self.variant, "prime": self.prime,
                "seed": self.seed, "attempts": self.attempts,
                "vmax": self.vmax, "formula": list(self.formula),
                "oracle": list(self.observed), "match": self.match}


def generators_for(d: DegreeData, variant: str = "generic",
                   p: int = DEFAULT_PRIME, seed: int = 0,
                   minimal: bool = True) -> list[SparsePoly]:
    if variant == "generic":
        mat = generic_matrix(d, p, seed, minimal)
    else:
        mat = witness_matrix(d, variant, p)
    return expand_minors(mat)


def hilbert_check(d: DegreeData, variant: str = "generic",
                  p: int = DEFAULT_PRIME, seed: int = 0, vmax: int = 6,
                  max_reseeds: int = 3, minimal: bool = True,
                  guard: int = GUARD) -> OracleReport:
    """Compare the resolution-based Hilbert function against the ideal.

    Generic matrices get reseeded on a mismatch, up to max_reseeds
    times, since an unlucky coefficient draw can drop the codimension;
    witness matrices are deterministic so they get exactly one shot.
    """
    if not is_nonempty(d):
        raise EmptyError("oracle comparison needs nonempty degree data")
    formula = [hilbert_function(d, v) for v in range(vmax + 1)]
    tries = 0
    while True:
        use_seed = seed + tries if variant == "generic" else None
        if variant == "generic":
            mat = generic_matrix(d, p, use_seed, minimal)
        else:
            mat = witness_matrix(d, variant, p)
        ideal = GradedIdeal(expand_minors(mat), guard)
        observed = [ideal.hilbert(v) for v in range(vmax + 1)]
        tries += 1
        if observed == formula or variant != "generic" or tries > max_reseeds:
            return OracleReport(variant, p, use_seed, tries, vmax, formula,
                                observed, observed == formula)
