"""Group algebras FG of finite abelian groups over finite fields."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import InvalidInput
from .field import Field, FieldElement
from .group import AbelianGroup, GroupElement
from .linalg import MatrixGFp


@dataclass(frozen=True)
class AlgebraElement:
    """Dense element of FG; coeffs[i] is the coefficient of G.elements()[i]."""

    field: Field
    group: AbelianGroup
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise InvalidInput(f"expected {self.group.order} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_dict(cls, F: Field, G: AbelianGroup, terms: Mapping[GroupElement, object]) -> AlgebraElement:
        coeffs = [F.zero] * G.order
        for g, c in terms.items():
            G._check_element(g)
            i = G.index(g)
            coeffs[i] = coeffs[i] + F(c)
        return cls(F, G, tuple(coeffs))

    @classmethod
    def scalar(cls, F: Field, G: AbelianGroup, c=1) -> AlgebraElement:
        return cls.from_dict(F, G, {G.identity: c})

    @classmethod
    def group_element(cls, F: Field, G: AbelianGroup, g: GroupElement) -> AlgebraElement:
        return cls.from_dict(F, G, {g: 1})

    @classmethod
    def random(cls, F: Field, G: AbelianGroup, rng: random.Random) -> AlgebraElement:
        return cls(F, G, tuple(F.from_int(rng.randrange(F.q)) for _ in range(G.order)))

    def __repr__(self) -> str:
        terms = []
        for g, c in zip(self.group.elements(), self.coeffs):
            if c:
                terms.append(f"({c!r})*{g}")
        return " + ".join(terms) or "0"

    def __getitem__(self, g: GroupElement) -> FieldElement:
        return self.coeffs[self.group.index(g)]

    def _check(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement) or other.field != self.field or other.group != self.group:
            raise InvalidInput("operands belong to different group algebras")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.field, self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.field, self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.field, self.group, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        c = self.field(other)
        return AlgebraElement(self.field, self.group, tuple(c * a for a in self.coeffs))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int) -> AlgebraElement:
        return element_power(self, k)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[GroupElement]:
        return [g for g, c in zip(self.group.elements(), self.coeffs) if c]


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    G, F = x.group, x.field
    elems = G.elements()
    out = [F.zero] * G.order
    ynz = [(h, c) for h, c in zip(elems, y.coeffs) if c]
    for g, a in zip(elems, x.coeffs):
        if not a:
            continue
        for h, b in ynz:
            k = G.index(G.op(g, h))
            out[k] = out[k] + a * b
    return AlgebraElement(F, G, tuple(out))


def augmentation(x: AlgebraElement) -> FieldElement:
    total = x.field.zero
    for c in x.coeffs:
        total = total + c
    return total


def element_power(x: AlgebraElement, k: int) -> AlgebraElement:
    """x^k by repeated squaring."""
    if k < 0:
        raise InvalidInput("negative powers are not supported")
    result = AlgebraElement.scalar(x.field, x.group)
    base = x
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def frobenius_power(x: AlgebraElement, j: int) -> AlgebraElement:
    """x^(p^j) via sum c_g^(p^j) g^(p^j), valid in characteristic p for abelian G."""
    F, G = x.field, x.group
    e = F.p**j
    terms: dict[GroupElement, FieldElement] = {}
    for g, c in zip(G.elements(), x.coeffs):
        if c:
            h = G.power(g, e)
            terms[h] = terms.get(h, F.zero) + F.frobenius(c, j)
    return AlgebraElement.from_dict(F, G, terms)


# -- coordinates on the augmentation ideal -----------------------------------
#
# Basis of omega(G) over GF(p): x^u * (g - 1) for g != 1 in enumeration order,
# u = 0..n-1; the basis vector (g, u) sits at index (G.index(g) - 1) * n + u.

def omega_coordinates(x: AlgebraElement) -> np.ndarray:
    if augmentation(x):
        raise InvalidInput("element is not in the augmentation ideal")
    n = x.field.n
    vec = np.zeros(n * (x.group.order - 1), dtype=np.int64)
    for i, c in enumerate(x.coeffs[1:]):
        vec[i * n:(i + 1) * n] = c.coeffs
    return vec


def from_omega_coordinates(F: Field, G: AbelianGroup, vec) -> AlgebraElement:
    n = F.n
    vec = [int(v) % F.p for v in vec]
    if len(vec) != n * (G.order - 1):
        raise InvalidInput("coordinate vector has the wrong length")
    rest = [F(vec[i * n:(i + 1) * n]) for i in range(G.order - 1)]
    head = F.zero
    for c in rest:
        head = head - c
    return AlgebraElement(F, G, (head, *rest))


@dataclass(frozen=True)
class FrobeniusOperator:
    """GF(p)-matrix of alpha -> alpha^p on omega(G)."""

    field: Field
    group: AbelianGroup
    matrix: MatrixGFp

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        return from_omega_coordinates(self.field, self.group, self.matrix.apply(omega_coordinates(x)))


def frobenius_operator(F: Field, G: AbelianGroup) -> FrobeniusOperator:
    if G.order == 1 or not G.is_p_group(F.p):
        raise InvalidInput(f"{G} is not a nontrivial {F.p}-group")
    n, p = F.n, F.p
    elems = G.elements()
    dim = n * (G.order - 1)
    # column images of the field basis under a -> a^p
    frob_basis = [F.frobenius(b, 1).coeffs for b in F.basis()]
    mat = np.zeros((dim, dim), dtype=np.int64)
    for i, g in enumerate(elems[1:]):
        target = G.index(G.power(g, p))
        if target == 0:
            # (c(g - 1))^p = c^p (g^p - 1) = 0 when g^p = 1
            continue
        row0 = (target - 1) * n
        for u in range(n):
            mat[row0:row0 + n, i * n + u] = frob_basis[u]
    return FrobeniusOperator(F, G, MatrixGFp(p, mat))
