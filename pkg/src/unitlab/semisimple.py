"""Unit groups of semisimple abelian group algebras (char F does not divide |G|).

Only the field size q matters, and only through q mod exp(G), so every entry
point takes q as a plain integer: a prime power or any residue coprime to |G|.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .decomposition import CyclicDecomposition
from .errors import InvalidInput
from .group import AbelianGroup, GroupElement, power_map_orbits


@dataclass(frozen=True)
class FConjugacyContext:
    group: AbelianGroup
    m: int
    residue: int
    T_set: tuple[int, ...]


@dataclass(frozen=True)
class WedderburnShape:
    """FG is the direct sum of F_{q^d}, mult(d) times."""

    degrees: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts) -> WedderburnShape:
        return cls(tuple(sorted(((d, k) for d, k in dict(counts).items() if k), reverse=True)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.degrees)

    @property
    def dimension(self) -> int:
        return sum(d * k for d, k in self.degrees)

    @property
    def components(self) -> int:
        return sum(k for _, k in self.degrees)

    def __str__(self) -> str:
        parts = [("F" if d == 1 else f"F_{d}") + (f"^{k}" if k > 1 else "") for d, k in self.degrees]
        return " + ".join(parts)


def _check_coprime(G: AbelianGroup, q: int) -> None:
    if math.gcd(q, G.order) != 1:
        raise InvalidInput(f"q = {q} is not coprime to |G| = {G.order}; FG is not semisimple")


def f_conjugacy_classes(G: AbelianGroup, q: int) -> tuple[FConjugacyContext, list[tuple[GroupElement, ...]]]:
    _check_coprime(G, q)
    m = G.exponent
    r = q % m
    T = {1 % m}
    t = r
    while t not in T:
        T.add(t)
        t = t * r % m
    ctx = FConjugacyContext(G, m, r, tuple(sorted(T)))
    return ctx, power_map_orbits(G, r if m > 1 else 1)


def wedderburn_degrees(G: AbelianGroup, q: int) -> WedderburnShape:
    _, orbits = f_conjugacy_classes(G, q)
    return WedderburnShape.from_counts(Counter(len(o) for o in orbits))


def splitting_lcm(shape: WedderburnShape) -> int:
    return math.lcm(1, *(d for d, _ in shape.degrees))


def unit_group_semisimple(G: AbelianGroup, q: int) -> CyclicDecomposition:
    """One factor C_{q^d - 1} per simple component F_{q^d}; no q attached."""
    return CyclicDecomposition.build(q_pow=wedderburn_degrees(G, q).as_dict())
