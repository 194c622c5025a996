"""Brute-force ground truth for tiny group algebras.

Every element of FG is enumerated as a row of field-element codes; units are
found by a batched rank test on the regular representation (or by scanning for
inverses), and the abelian invariants of U(FG) are recovered by counting
solutions of u^(l^k) = 1. Nothing here touches the engines.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from sympy import factorint

from .algebra import AlgebraElement
from .decomposition import CyclicDecomposition
from .errors import CapacityError, InconsistencyError, InvalidInput
from .field import Field, field_tables
from .group import AbelianGroup

DEFAULT_CAP = 2**20
_CHUNK = 2**14


def enumeration_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("UNITLAB_CAP")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise InvalidInput(f"UNITLAB_CAP must be an integer, got {env!r}") from exc
    return DEFAULT_CAP


class BatchAlgebra:
    """Vectorized arithmetic on stacks of FG elements stored as code rows."""

    def __init__(self, F: Field, G: AbelianGroup):
        self.field, self.group = F, G
        self.add, self.mul, self.neg, self.inv = field_tables(F)
        self.dtype = self.add.dtype
        elems = G.elements()
        k = G.order
        # diff[h, g] = index of h - g
        self.diff = np.array(
            [[G.index(G.op(h, G.inverse(g))) for g in elems] for h in elems], dtype=np.intp
        ).reshape(k, k)
        self.identity = np.zeros(k, dtype=self.dtype)
        self.identity[0] = 1

    def product(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Row-wise convolution (XY)_h = sum_g X_g Y_{h-g}; Y may be a single row."""
        Y = np.broadcast_to(Y, X.shape)
        Z = np.zeros(X.shape, dtype=self.dtype)
        for g in range(X.shape[1]):
            Z = self.add[Z, self.mul[X[:, g:g + 1], Y[:, self.diff[:, g]]]]
        return Z

    def power(self, X: np.ndarray, e: int) -> np.ndarray:
        result = np.broadcast_to(self.identity, X.shape).copy()
        base = X
        while e:
            if e & 1:
                result = self.product(result, base)
            e >>= 1
            if e:
                base = self.product(base, base)
        return result

    def is_identity(self, X: np.ndarray) -> np.ndarray:
        return (X == self.identity).all(axis=1)

    def nonsingular(self, X: np.ndarray) -> np.ndarray:
        """Whether each row's regular-representation matrix has full rank over F."""
        k = X.shape[1]
        M = X[:, self.diff]  # M[b, h, g] = x_{h-g}: the matrix of y -> x*y
        ok = np.ones(len(X), dtype=bool)
        rows = np.arange(len(X))
        for c in range(k):
            col = M[:, c:, c] != 0
            has = col.any(axis=1)
            ok &= has
            piv = c + col.argmax(axis=1)
            top = M[rows, c].copy()
            M[rows, c] = M[rows, piv]
            M[rows, piv] = top
            R = self.mul[self.inv[M[:, c, c]][:, None], M[:, c, :]]
            f = M[:, c + 1:, c]
            M[:, c + 1:, :] = self.add[M[:, c + 1:, :], self.neg[self.mul[f[:, :, None], R[:, None, :]]]]
        return ok

    def encode(self, X: np.ndarray) -> np.ndarray:
        q = self.field.q
        weights = q ** np.arange(X.shape[1], dtype=np.int64)
        return X.astype(np.int64) @ weights

    def decode(self, codes: np.ndarray) -> np.ndarray:
        q = self.field.q
        k = self.group.order
        return ((codes[:, None] // q ** np.arange(k, dtype=np.int64)) % q).astype(self.dtype)


@dataclass(frozen=True, eq=False)
class UnitTable:
    field: Field
    group: AbelianGroup
    codes: np.ndarray  # (order, |G|) field-element codes, rows sorted by encoding

    @property
    def order(self) -> int:
        return len(self.codes)

    def __len__(self) -> int:
        return self.order

    def elements(self) -> Iterator[AlgebraElement]:
        F, G = self.field, self.group
        for row in self.codes:
            yield AlgebraElement(F, G, tuple(F.from_int(int(c)) for c in row))

    def contains(self, X: np.ndarray) -> np.ndarray:
        alg = BatchAlgebra(self.field, self.group)
        return np.isin(alg.encode(X), alg.encode(self.codes))

    def verify(self) -> None:
        """Identity, closure under products, and Lagrange u^|U| = 1."""
        alg = BatchAlgebra(self.field, self.group)
        U = self.codes
        if not self.contains(alg.identity[None, :])[0]:
            raise InconsistencyError("unit table lacks the identity")
        shifts = range(len(U)) if len(U) <= 256 else (1, 7, len(U) // 2)
        for s in shifts:
            if not self.contains(alg.product(U, np.roll(U, s, axis=0))).all():
                raise InconsistencyError("unit table is not closed under multiplication")
        if not alg.is_identity(alg.power(U, len(U))).all():
            raise InconsistencyError("some unit fails u^|U| = 1")


def _all_elements(alg: BatchAlgebra, start: int, stop: int) -> np.ndarray:
    return alg.decode(np.arange(start, stop, dtype=np.int64))


def _units_by_rank(alg: BatchAlgebra, total: int) -> np.ndarray:
    found = []
    for start in range(0, total, _CHUNK):
        X = _all_elements(alg, start, min(total, start + _CHUNK))
        found.append(X[alg.nonsingular(X)])
    return np.concatenate(found)


def _units_by_scan(alg: BatchAlgebra, total: int) -> np.ndarray:
    X = _all_elements(alg, 0, total)
    has_inverse = np.zeros(total, dtype=bool)
    for y in X:
        has_inverse |= alg.is_identity(alg.product(X, y))
    return X[has_inverse]


def enumerate_units(F: Field, G: AbelianGroup, cap: int | None = None, method: str = "rank") -> UnitTable:
    """All units of FG.

    method is "rank" (regular-representation rank test), "scan" (search for an
    inverse among all elements) or "both" (run both and insist they agree).
    """
    cap = enumeration_cap(cap)
    total = F.q ** G.order
    if total > cap:
        raise CapacityError(f"|FG| = {F.q}^{G.order} exceeds the enumeration cap {cap}")
    alg = BatchAlgebra(F, G)
    if method == "rank":
        units = _units_by_rank(alg, total)
    elif method == "scan":
        units = _units_by_scan(alg, total)
    elif method == "both":
        units = _units_by_rank(alg, total)
        if not np.array_equal(units, _units_by_scan(alg, total)):
            raise InconsistencyError(f"rank and scan unit tests disagree for {F!r}{G}")
    else:
        raise InvalidInput(f"unknown enumeration method {method!r}")
    units.setflags(write=False)
    return UnitTable(F, G, units)


def torsion_counts(U: UnitTable, ell: int) -> list[int]:
    """N_k = #{u : u^(ell^k) = 1} for k = 1.. until the full ell-part is reached."""
    alg = BatchAlgebra(U.field, U.group)
    full = ell ** factorint(U.order).get(ell, 0)
    counts = []
    P = U.codes
    while not counts or counts[-1] < full:
        P = alg.power(P, ell)
        counts.append(int(alg.is_identity(P).sum()))
        if len(counts) > 64:
            raise InconsistencyError(f"{ell}-torsion counts never reach {full}")
    return counts


def abelian_invariants_from_units(U: UnitTable) -> CyclicDecomposition:
    """CRT-normalized invariants of U by counting ell^k-torsion."""
    out: dict[int, int] = {}
    for ell in sorted(factorint(U.order)):
        ell = int(ell)
        logs = []
        for N in torsion_counts(U, ell):
            e = 0
            while N % ell == 0:
                N //= ell
                e += 1
            if N != 1:
                raise InconsistencyError(f"{ell}-torsion count is not a power of {ell}")
            logs.append(e)
        a = [0] + logs + [logs[-1]]
        for s in range(1, len(logs) + 1):
            mult = 2 * a[s] - a[s - 1] - a[s + 1]
            if mult < 0:
                raise InconsistencyError(f"torsion counts {logs} for {ell} are not concave")
            if mult:
                out[ell**s] = mult
    return CyclicDecomposition.build(cyclic=out, q=U.field.q, normalized=True)
