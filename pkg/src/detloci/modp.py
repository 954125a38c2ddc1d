"""Incremental row reduction over GF(p) on float64 storage.

Arithmetic stays exact because every intermediate value is an integer
below 2**53: entries live in [0, p), and a matmul with inner dimension m
produces values at most m*(p-1)**2.  With the default prime 32003 that
allows inner dimensions up to about 8.8e6, far beyond anything the
guards in this package permit.  float64 matmuls hit BLAS, which is the
whole point; a pure-int path would be an order of magnitude slower.
"""

from __future__ import annotations

import numpy as np

_EXACT_LIMIT = float(2**53)


def _check_exact(inner_dim: int, p: int) -> None:
    if inner_dim * float(p - 1) ** 2 >= _EXACT_LIMIT:
        raise OverflowError(
            f"matmul with inner dimension {inner_dim} mod {p} can exceed 2^53")


class Echelon:
    """Reduced row echelon form built up one block of rows at a time.

    Rows are kept fully reduced at all times: the submatrix on pivot
    columns is an identity (pivot order follows discovery order, not
    column order).  add_block returns the number of new pivots.
    """

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.pivots: list[int] = []
        self._rows = np.zeros((0, ncols))

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def rows(self) -> np.ndarray:
        return self._rows[:len(self.pivots)]

    def _ensure_capacity(self, extra: int) -> None:
        need = len(self.pivots) + extra
        cap = self._rows.shape[0]
        if need > cap:
            grown = np.zeros((max(need, 2 * cap, 16), self.ncols))
            grown[:len(self.pivots)] = self._rows[:len(self.pivots)]
            self._rows = grown

    def reduce_rows(self, vecs: np.ndarray) -> np.ndarray:
        """Reduce row vectors modulo the current row space."""
        p = self.p
        V = np.mod(np.asarray(vecs, dtype=np.float64), p)
        r = len(self.pivots)
        if r and V.size:
            _check_exact(r, p)
            piv = np.asarray(self.pivots, dtype=np.intp)
            coef = V[:, piv]
            if coef.any():
                V = V - coef @ self._rows[:r]
                np.mod(V, p, out=V)
        return V

    def add_block(self, block: np.ndarray) -> int:
        p = self.p
        B = self.reduce_rows(block)
        if B.size == 0 or not B.any():
            return 0
        m = B.shape[0]
        keep: list[int] = []
        new_pivs: list[int] = []
        for i in range(m):
            row = B[i]
            nz = np.nonzero(row)[0]
            if nz.size == 0:
                continue
            j = int(nz[0])
            inv = pow(int(row[j]), p - 2, p)
            np.mod(row * inv, p, out=row)
            if i + 1 < m:
                rest = B[i + 1:]
                col = rest[:, j]
                hit = col != 0
                if hit.any():
                    rest[hit] = np.mod(rest[hit] - np.outer(col[hit], row), p)
            keep.append(i)
            new_pivs.append(j)
        if not new_pivs:
            return 0
        R = B[keep]
        # back pass: rows were only cleared below their own pivot so far
        for k in range(len(new_pivs) - 1, 0, -1):
            col = R[:k, new_pivs[k]]
            hit = col != 0
            if hit.any():
                upper = R[:k]
                upper[hit] = np.mod(upper[hit] - np.outer(col[hit], R[k]), p)
        r = len(self.pivots)
        if r:
            _check_exact(len(new_pivs), p)
            E = self._rows[:r]
            coef = E[:, new_pivs]
            if coef.any():
                E -= coef @ R
                np.mod(E, p, out=E)
        self._ensure_capacity(len(new_pivs))
        self._rows[r:r + len(new_pivs)] = R
        self.pivots.extend(new_pivs)
        return len(new_pivs)

    def nonpivots(self) -> np.ndarray:
        mask = np.ones(self.ncols, dtype=bool)
        if self.pivots:
            mask[np.asarray(self.pivots, dtype=np.intp)] = False
        return np.nonzero(mask)[0]

    def kernel(self) -> np.ndarray:
        """Basis of the null space {x : R x = 0}, one vector per free column."""
        r = len(self.pivots)
        free = self.nonpivots()
        K = np.zeros((len(free), self.ncols), dtype=np.int64)
        if r:
            piv = np.asarray(self.pivots, dtype=np.intp)
            R = self._rows[:r]
            for idx, f in enumerate(free):
                K[idx, f] = 1
                K[idx, piv] = np.mod(-R[:, f], self.p).astype(np.int64)
        else:
            for idx, f in enumerate(free):
                K[idx, f] = 1
        return K


def rank_modp(M: np.ndarray, p: int, block: int = 64) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    ech = Echelon(M.shape[1], p)
    for s in range(0, M.shape[0], block):
        ech.add_block(M[s:s + block])
    return ech.rank


def kernel_basis(M: np.ndarray, p: int, block: int = 64) -> np.ndarray:
    """Basis of {x : M x = 0} over GF(p), as int64 rows."""
    M = np.asarray(M)
    ech = Echelon(M.shape[1], p)
    for s in range(0, M.shape[0], block):
        ech.add_block(M[s:s + block])
    return ech.kernel()
