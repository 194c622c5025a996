"""Finite fields GF(p^n) as GF(p)[x] modulo a fixed irreducible polynomial.

Polynomials over GF(p) are tuples of coefficients, lowest degree first.
Elements are encoded as integers ``sum(c_i * p**i)`` where a compact form
is needed (lookup tables, the brute-force oracle).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np
from sympy import factorint, isprime

from .errors import CapacityError, InvalidInput

ARITHMETIC_CAP = 2**62
ENUMERATION_CAP = 2**20
TABLE_CAP = 2**10

# Trial division at construction is only run while the number of candidate
# divisors stays below this bound; Rabin's test decides beyond it.
_TRIAL_DIVISION_LIMIT = 2**12


# -- polynomial helpers over GF(p) -------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv_lead % p
        quot[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return _trim(quot), a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return _poly_divmod(a, b, p)[1]


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = _poly_mod(_poly_mul(base, base, p), mod, p)
    return result


def _monic_polys(p: int, d: int) -> Iterator[tuple[int, ...]]:
    """Monic degree-d polynomials, lexicographic on (c_{d-1}, ..., c_0)."""
    for high_first in itertools.product(range(p), repeat=d):
        yield tuple(reversed(high_first)) + (1,)


def is_irreducible_rabin(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over GF(p)."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, p**n, f, p), x, p):
        return False
    for r in factorint(n):
        h = _poly_sub(_poly_powmod(x, p ** (n // r), f, p), x, p)
        if len(_poly_gcd(f, h, p)) != 1:
            return False
    return True


def is_irreducible_trial(f: Sequence[int], p: int) -> bool:
    """Irreducibility by trial division with every monic of degree <= n/2."""
    n = len(f) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(f, g, p):
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    for f in _monic_polys(p, n):
        if is_irreducible_rabin(f, p):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {n} over GF({p})")


# -- fields --------------------------------------------------------------------

@dataclass(frozen=True)
class Field:
    p: int
    n: int
    modulus: tuple[int, ...]
    q: int = dc_field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.n)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.n)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    @property
    def gen(self) -> FieldElement:
        """The class of x (equal to 0 when n = 1 and the modulus is x)."""
        if self.n == 1:
            return self(-self.modulus[0])
        return FieldElement(self, (0, 1) + (0,) * (self.n - 2))

    def __call__(self, value) -> FieldElement:
        """Coerce an int (into the prime field) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise InvalidInput(f"{value!r} does not belong to {self!r}")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, (int(value) % self.p,) + (0,) * (self.n - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.n:
            raise InvalidInput(f"too many coefficients for {self!r}")
        return FieldElement(self, tuple(coeffs) + (0,) * (self.n - len(coeffs)))

    def from_int(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise InvalidInput(f"element code {code} out of range for {self!r}")
        coeffs = []
        for _ in range(self.n):
            code, c = divmod(code, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        if self.q > ENUMERATION_CAP:
            raise CapacityError(f"{self!r} has more than {ENUMERATION_CAP} elements")
        return (self.from_int(i) for i in range(self.q))

    def basis(self) -> list[FieldElement]:
        """GF(p)-basis 1, x, ..., x^(n-1)."""
        return [FieldElement(self, tuple(int(i == j) for j in range(self.n))) for i in range(self.n)]

    # arithmetic on coefficient tuples

    def _reduce(self, prod: list[int]) -> tuple[int, ...]:
        rem = _poly_mod(prod, self.modulus, self.p)
        return tuple(rem) + (0,) * (self.n - len(rem))

    def _check(self, *elems: FieldElement) -> None:
        for e in elems:
            if not isinstance(e, FieldElement) or e.field != self:
                raise InvalidInput(f"{e!r} is not an element of {self!r}")

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a, b)
        p = self.p
        return FieldElement(self, tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a, b)
        p = self.p
        return FieldElement(self, tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FieldElement) -> FieldElement:
        self._check(a)
        return FieldElement(self, tuple(-x % self.p for x in a.coeffs))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a, b)
        if self.n == 1:
            return FieldElement(self, (a.coeffs[0] * b.coeffs[0] % self.p,))
        return FieldElement(self, self._reduce(_poly_mul(a.coeffs, b.coeffs, self.p)))

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        self._check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, a: FieldElement) -> FieldElement:
        self._check(a)
        if not any(a.coeffs):
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.n == 1:
            return FieldElement(self, (pow(a.coeffs[0], -1, self.p),))
        return self.pow(a, self.q - 2)

    def frobenius(self, a: FieldElement, k: int = 1) -> FieldElement:
        """a^(p^k)."""
        self._check(a)
        k %= self.n
        return self.pow(a, self.p**k) if k else a


@dataclass(frozen=True)
class FieldElement:
    field: Field
    coeffs: tuple[int, ...]

    def __repr__(self) -> str:
        if self.field.n == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}" if i == 0 else f"{c}*{mono}")
        return "+".join(reversed(terms)) or "0"

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def to_int(self) -> int:
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.field.p + c
        return code

    def _coerce(self, other) -> FieldElement:
        return self.field(other)

    def __add__(self, other):
        return self.field.add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field.sub(self, self._coerce(other))

    def __rsub__(self, other):
        return self.field.sub(self._coerce(other), self)

    def __neg__(self):
        return self.field.neg(self)

    def __mul__(self, other):
        return self.field.mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.field.mul(self, self.field.inv(self._coerce(other)))

    def __pow__(self, e: int):
        return self.field.pow(self, e)

    def inverse(self) -> FieldElement:
        return self.field.inv(self)


def prime_power_parts(q: int) -> tuple[int, int]:
    """Return (p, n) with q = p^n, or raise InvalidInput."""
    if q < 2:
        raise InvalidInput(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise InvalidInput(f"{q} is not a prime power")
    ((p, n),) = f.items()
    return int(p), int(n)


@lru_cache(maxsize=None)
def construct_field(p: int, n: int = 1) -> Field:
    """GF(p^n) with the lexicographically smallest monic irreducible modulus."""
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise InvalidInput(f"{p} is not prime")
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidInput(f"extension degree must be >= 1, got {n}")
    p, n = int(p), int(n)
    if p**n > ARITHMETIC_CAP:
        raise CapacityError(f"GF({p}^{n}) exceeds the arithmetic cap 2^62")
    modulus = smallest_irreducible(p, n)
    if sum(p**d for d in range(1, n // 2 + 1)) <= _TRIAL_DIVISION_LIMIT:
        assert is_irreducible_trial(modulus, p), modulus
    return Field(p, n, modulus)


@lru_cache(maxsize=None)
def field_tables(F: Field) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(add, mul, neg, inv) lookup tables on integer codes; inv[0] is 0."""
    if F.q > TABLE_CAP:
        raise CapacityError(f"lookup tables for {F!r} exceed the table cap {TABLE_CAP}")
    elems = [F.from_int(i) for i in range(F.q)]
    dtype = np.uint8 if F.q <= 256 else np.uint16
    add = np.array([[(a + b).to_int() for b in elems] for a in elems], dtype=dtype)
    mul = np.array([[(a * b).to_int() for b in elems] for a in elems], dtype=dtype)
    neg = np.array([(-a).to_int() for a in elems], dtype=dtype)
    inv = np.array([a.inverse().to_int() if a else 0 for a in elems], dtype=dtype)
    for t in (add, mul, neg, inv):
        t.setflags(write=False)
    return add, mul, neg, inv
