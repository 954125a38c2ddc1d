"""Degree data for a family of standard determinantal schemes.

A family is described by two weakly increasing integer sequences: row
degrees b_1 <= ... <= b_t and column degrees a_0 <= ... <= a_{t+c-2},
together with the dimension n of the schemes cut out.  Members of the
family are t x (t+c-1) homogeneous matrices whose entry in row i, column
j has degree a_j - b_i; the vanishing of the maximal minors defines a
closed subscheme of codimension c in projective N-space, N = n + c.

Everything downstream works in exact integer arithmetic.  The binomial
convention C(m, k) = 0 for m < k (including negative m) is what makes
graded dimension counts come out right and is centralized here.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass


class SizeError(ValueError):
    """Sequence lengths that cannot describe a t x (t+c-1) matrix with c >= 2."""


class SortError(ValueError):
    """Degree sequences that are not weakly increasing."""


class CharError(ValueError):
    """Field characteristic that is neither zero nor a prime."""


def binom(m: int, k: int) -> int:
    """C(m, k) with the zero extension: 0 whenever m < k.

    The extension is load bearing.  A twisted free module R(s) has
    graded piece of dimension C(v + s + N, N) in degree v, and that
    count must vanish for v + s < 0.
    """
    if k < 0:
        raise ValueError(f"binom lower index must be >= 0, got {k}")
    if m < k:
        return 0
    return math.comb(m, k)


def is_prime(p: int) -> bool:
    """Trial division, plenty for word-sized moduli."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class DegreeData:
    """Validated degree sequences (b; a), scheme dimension n, characteristic.

    Direct construction insists the sequences are already sorted; use
    :func:`validate` to sort raw input first.  charK only gates which
    certification routes apply, no arithmetic depends on it.
    """

    b: tuple[int, ...]
    a: tuple[int, ...]
    n: int
    charK: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "charK", int(self.charK))
        if len(self.b) < 1:
            raise SizeError("need at least one row degree")
        if len(self.a) < len(self.b) + 1:
            raise SizeError(
                f"need at least {len(self.b) + 1} column degrees for "
                f"{len(self.b)} row degrees (codimension >= 2), got {len(self.a)}"
            )
        if self.n < 0:
            raise SizeError(f"scheme dimension n must be >= 0, got {self.n}")
        if any(x > y for x, y in zip(self.b, self.b[1:])):
            raise SortError(f"row degrees not weakly increasing: {self.b}")
        if any(x > y for x, y in zip(self.a, self.a[1:])):
            raise SortError(f"column degrees not weakly increasing: {self.a}")
        if self.charK != 0 and not is_prime(self.charK):
            raise CharError(f"characteristic must be 0 or prime, got {self.charK}")

    @property
    def t(self) -> int:
        return len(self.b)

    @property
    def c(self) -> int:
        return len(self.a) - len(self.b) + 1

    @property
    def N(self) -> int:
        return self.n + self.c

    def to_json(self) -> dict:
        return {"b": list(self.b), "a": list(self.a), "n": self.n, "char": self.charK}

    @classmethod
    def from_json(cls, obj) -> "DegreeData":
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        if not isinstance(obj, dict):
            raise ValueError("degree data must be a JSON object")
        missing = [k for k in ("b", "a", "n") if k not in obj]
        if missing:
            raise ValueError(f"degree data missing keys: {missing}")
        return validate(obj["b"], obj["a"], obj["n"], obj.get("char", 0))


def validate(b, a, n: int, charK: int = 0) -> DegreeData:
    """Sort both sequences and build a checked :class:`DegreeData`."""
    return DegreeData(tuple(sorted(int(x) for x in b)),
                      tuple(sorted(int(x) for x in a)), n, charK)


@dataclass(frozen=True)
class DegreeMatrix:
    """Entry degrees u[j][i] = a_j - b_i, one row per column degree a_j."""

    u: tuple[tuple[int, ...], ...]


def degree_matrix(d: DegreeData) -> DegreeMatrix:
    return DegreeMatrix(tuple(tuple(aj - bi for bi in d.b) for aj in d.a))


def is_nonempty(d: DegreeData) -> bool:
    """Whether the family contains any matrix of the prescribed degrees.

    The test is a_{i-1} - b_i > 0 for i = 1..t: just above the main
    antidiagonal every entry degree must be strictly positive, otherwise
    an upper-left block of zeros forces every maximal minor to vanish.
    """
    return all(d.a[i] > d.b[i] for i in range(d.t))
