"""Dense exact linear algebra over prime fields GF(p)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput


@dataclass(frozen=True, eq=False)
class MatrixGFp:
    p: int
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.int64)
        if a.ndim != 2:
            raise InvalidInput("matrix entries must be two-dimensional")
        a = a % self.p
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixGFp)
            and self.p == other.p
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __matmul__(self, other: MatrixGFp) -> MatrixGFp:
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"MatrixGFp(p={self.p}, {self.rows}x{self.cols})"

    @property
    def T(self) -> MatrixGFp:
        return MatrixGFp(self.p, self.entries.T)

    def apply(self, v) -> np.ndarray:
        return (self.entries @ np.asarray(v, dtype=np.int64)) % self.p

    def is_zero(self) -> bool:
        return not self.entries.any()


def identity(p: int, k: int) -> MatrixGFp:
    return MatrixGFp(p, np.eye(k, dtype=np.int64))


def zeros(p: int, rows: int, cols: int) -> MatrixGFp:
    return MatrixGFp(p, np.zeros((rows, cols), dtype=np.int64))


def _mulmod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if p < 2**26 and a.shape[1] < 2**10:
        return (a @ b) % p
    # avoid int64 overflow in the inner products
    return np.array((a.astype(object) @ b.astype(object)) % p, dtype=np.int64)


def mat_mul(A: MatrixGFp, B: MatrixGFp) -> MatrixGFp:
    if A.p != B.p:
        raise InvalidInput("matrices over different prime fields")
    if A.cols != B.rows:
        raise InvalidInput(f"shape mismatch {A.shape} @ {B.shape}")
    return MatrixGFp(A.p, _mulmod(A.entries, B.entries, A.p))


def mat_power(M: MatrixGFp, k: int) -> MatrixGFp:
    if M.rows != M.cols:
        raise InvalidInput("mat_power needs a square matrix")
    if k < 0:
        raise InvalidInput("negative matrix power")
    result, base = identity(M.p, M.rows), M
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def row_echelon(M: MatrixGFp) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivot choice: first nonzero entry of the column at or below the current row.
    """
    p = M.p
    a = M.entries.copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(M: MatrixGFp) -> int:
    return len(row_echelon(M)[1])


def kernel_dim(M: MatrixGFp) -> int:
    return M.cols - rank(M)


def kernel_basis(M: MatrixGFp) -> MatrixGFp:
    """Columns spanning the right kernel {v : M v = 0}."""
    red, pivots = row_echelon(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = np.zeros((M.cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = -red[i, f] % M.p
    return MatrixGFp(M.p, basis)
