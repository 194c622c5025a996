"""Finite abelian groups in elementary-divisor form.

Group elements are plain tuples of exponents, one residue per elementary
divisor. Elements are enumerated in lexicographic order of these tuples;
that order fixes every index-based layout used elsewhere.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from sympy import factorint, isprime

from .errors import CapacityError, InvalidInput

GROUP_ENUMERATION_CAP = 2**16

GroupElement = tuple


def _prime_of(d: int) -> int:
    return int(next(iter(factorint(d))))


@dataclass(frozen=True)
class AbelianGroup:
    divisors: tuple[int, ...]

    def __post_init__(self):
        key = tuple(sorted(self.divisors, key=lambda d: (_prime_of(d), d)))
        if key != self.divisors:
            raise InvalidInput("divisors must be canonically sorted; use construct_group")
        for d in self.divisors:
            if d < 2 or len(factorint(d)) != 1:
                raise InvalidInput(f"{d} is not a prime power >= 2")

    def __repr__(self) -> str:
        return self.name

    @property
    def name(self) -> str:
        if not self.divisors:
            return "C_1"
        parts = []
        for d, grp in itertools.groupby(sorted(self.divisors, reverse=True)):
            k = len(list(grp))
            parts.append(f"C_{d}" + (f"^{k}" if k > 1 else ""))
        return " x ".join(parts)

    @cached_property
    def order(self) -> int:
        return math.prod(self.divisors)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.divisors) if self.divisors else 1

    @property
    def rank(self) -> int:
        return len(self.divisors)

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self.divisors)

    def is_p_group(self, p: int) -> bool:
        return all(d % p == 0 for d in self.divisors)

    def invariant_factors(self) -> tuple[int, ...]:
        """Invariant factors n_1 | n_2 | ... for display."""
        by_prime: dict[int, list[int]] = {}
        for d in self.divisors:
            by_prime.setdefault(_prime_of(d), []).append(d)
        length = max((len(v) for v in by_prime.values()), default=0)
        factors = [1] * length
        for ds in by_prime.values():
            for i, d in enumerate(sorted(ds, reverse=True)):
                factors[length - 1 - i] *= d
        return tuple(factors)

    # element arithmetic

    def elements(self) -> list[GroupElement]:
        if self.order > GROUP_ENUMERATION_CAP:
            raise CapacityError(f"|G| = {self.order} exceeds the enumeration cap")
        return self._elements

    @cached_property
    def _elements(self) -> list[GroupElement]:
        return list(itertools.product(*(range(d) for d in self.divisors)))

    def index(self, g: GroupElement) -> int:
        i = 0
        for x, d in zip(g, self.divisors):
            i = i * d + x
        return i

    def op(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((x + y) % d for x, y, d in zip(g, h, self.divisors))

    def inverse(self, g: GroupElement) -> GroupElement:
        return tuple(-x % d for x, d in zip(g, self.divisors))

    def power(self, g: GroupElement, t: int) -> GroupElement:
        return tuple(x * t % d for x, d in zip(g, self.divisors))

    def element_order(self, g: GroupElement) -> int:
        self._check_element(g)
        return math.lcm(1, *(d // math.gcd(d, x) for x, d in zip(g, self.divisors)))

    def _check_element(self, g: GroupElement) -> None:
        if len(g) != len(self.divisors) or any(not 0 <= x < d for x, d in zip(g, self.divisors)):
            raise InvalidInput(f"{g} is not an element of {self}")

    def power_image(self, k: int) -> AbelianGroup:
        """The subgroup G^k = {g^k} as an abstract group."""
        return construct_group([d // math.gcd(d, k) for d in self.divisors])

    def product(self, other: AbelianGroup) -> AbelianGroup:
        return construct_group(self.divisors + other.divisors)


def construct_group(orders: Iterable[int]) -> AbelianGroup:
    """Canonical elementary-divisor form of C_{o_1} x ... x C_{o_k}.

    >>> construct_group([12]) == construct_group([4, 3])
    True
    """
    divisors = []
    for o in orders:
        if not isinstance(o, int) or o < 1:
            raise InvalidInput(f"cyclic factor orders must be integers >= 2, got {o!r}")
        if o == 1:
            # C_1 contributes nothing; allowed so that the trivial group is representable
            continue
        for prime, e in factorint(o).items():
            divisors.append(int(prime) ** e)
    divisors.sort(key=lambda d: (_prime_of(d), d))
    return AbelianGroup(tuple(divisors))


def trivial_group() -> AbelianGroup:
    return AbelianGroup(())


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_group_spec(spec: str) -> AbelianGroup:
    """Parse "8x2x2", "16,2" or "2^5" (five copies of C_2).

    A lone "1" gives the trivial group.
    """
    orders = []
    for token in re.split(r"[x,]", spec.strip().lower()):
        m = _TOKEN.match(token)
        if not m:
            raise InvalidInput(f"cannot parse group spec {spec!r}")
        base, reps = int(m.group(1)), int(m.group(2) or 1)
        if base < 1 or reps < 1:
            raise InvalidInput(f"cannot parse group spec {spec!r}")
        orders.extend([base] * reps)
    if any(o < 2 for o in orders) and len(orders) > 1:
        raise InvalidInput(f"factor 1 only allowed alone (trivial group), got {spec!r}")
    return construct_group(orders)


def power_map_orbits(G: AbelianGroup, t: int) -> list[tuple[GroupElement, ...]]:
    """Orbits of g -> g^t on G.

    Each orbit is listed in traversal order starting from its smallest member;
    orbits are sorted by that member.
    """
    if math.gcd(t, G.exponent) != 1:
        raise InvalidInput(f"g -> g^{t} is not a bijection on {G} (exponent {G.exponent})")
    t %= G.exponent
    seen: set[GroupElement] = set()
    orbits = []
    for g in G.elements():
        if g in seen:
            continue
        orbit = [g]
        seen.add(g)
        h = G.power(g, t)
        while h != g:
            orbit.append(h)
            seen.add(h)
            h = G.power(h, t)
        orbits.append(tuple(orbit))
    return orbits


def primary_split(G: AbelianGroup, p: int) -> tuple[AbelianGroup, AbelianGroup]:
    """(p-primary part, complement)."""
    if not isprime(p):
        raise InvalidInput(f"{p} is not prime")
    P = tuple(d for d in G.divisors if d % p == 0)
    H = tuple(d for d in G.divisors if d % p != 0)
    return AbelianGroup(P), AbelianGroup(H)


def groups_of_order(order: int) -> list[AbelianGroup]:
    """All abelian groups of the given order up to isomorphism."""
    per_prime = []
    for prime, e in factorint(order).items():
        per_prime.append([[int(prime) ** k for k in part] for part in _partitions(e)])
    return sorted(
        (construct_group([d for part in combo for d in part]) for combo in itertools.product(*per_prime)),
        key=lambda g: g.divisors,
    )


def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest
