"""Published unit-group structures for the seven abelian groups of order 32.

Each record stores the characteristic-2 answer as multiplicities per unit of
n (q = 2^n), and the odd-characteristic answer per residue class of q, with
residues written exactly as in the source statements (signed).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import primerange

from .decomposition import CyclicDecomposition
from .group import AbelianGroup, construct_group


@dataclass(frozen=True)
class ResidueCase:
    modulus: int
    residues: tuple[int, ...]
    expected: dict[int, int]  # d -> multiplicity of C_{q^d-1}

    def label(self) -> str:
        return ", ".join(str(r) for r in self.residues) + f" mod {self.modulus}"

    def expected_decomposition(self) -> CyclicDecomposition:
        return CyclicDecomposition.build(q_pow=self.expected)


@dataclass(frozen=True)
class PublishedTheorem:
    label: str
    orders: tuple[int, ...]
    char2: dict[int, int]  # 2^s -> multiplicity / n in V(FG)
    cases: tuple[ResidueCase, ...]
    # residues the case list leaves out, mapped to the listed residue whose shape they share
    unlisted: tuple[tuple[int, int], ...] = ()

    @property
    def group(self) -> AbelianGroup:
        return construct_group(self.orders)

    def char2_expected(self, n: int) -> CyclicDecomposition:
        return CyclicDecomposition.build(
            q_pow={1: 1}, cyclic={o: k * n for o, k in self.char2.items()}, q=2**n
        )

    def case_for(self, residue: int) -> ResidueCase:
        for case in self.cases:
            if any((r - residue) % case.modulus == 0 for r in case.residues):
                return case
        raise KeyError(residue)


def _cases(m: int, *rows) -> tuple[ResidueCase, ...]:
    return tuple(ResidueCase(m, tuple(res), dict(exp)) for res, exp in rows)


THEOREMS: tuple[PublishedTheorem, ...] = (
    PublishedTheorem(
        "C32",
        (32,),
        {32: 1, 16: 1, 8: 2, 4: 4, 2: 8},
        _cases(
            32,
            ((1,), {1: 32}),
            ((-1,), {1: 2, 2: 15}),
            ((3, -5, 11, -13), {8: 2, 4: 2, 2: 3, 1: 2}),
            ((-3, 5, -11, 13), {8: 2, 4: 2, 2: 2, 1: 4}),
            ((7,), {1: 2, 4: 4, 2: 7}),
            ((-7,), {1: 8, 2: 4, 4: 4}),
            ((15,), {1: 2, 2: 15}),
            ((-15,), {1: 16, 2: 8}),
        ),
        unlisted=((9, -7), (23, 7)),
    ),
    PublishedTheorem(
        "C16xC2",
        (16, 2),
        {16: 1, 8: 1, 4: 2, 2: 20},
        _cases(
            16,
            ((1,), {1: 32}),
            ((-1,), {1: 4, 2: 14}),
            ((3, -5), {1: 4, 2: 6, 4: 4}),
            ((-3, 5), {1: 8, 2: 4, 4: 4}),
            ((7,), {1: 4, 2: 14}),
            ((-7,), {1: 16, 2: 8}),
        ),
    ),
    PublishedTheorem(
        "C8xC4",
        (8, 4),
        {8: 1, 4: 5, 2: 18},
        _cases(
            8,
            ((1,), {1: 32}),
            ((-1,), {1: 4, 2: 14}),
            ((3,), {1: 4, 2: 14}),
            ((-3,), {1: 16, 2: 8}),
        ),
    ),
    PublishedTheorem(
        "C8xC2xC2",
        (8, 2, 2),
        {8: 1, 4: 1, 2: 26},
        _cases(
            8,
            ((1,), {1: 32}),
            ((-1,), {1: 8, 2: 12}),
            ((3,), {1: 8, 2: 12}),
            ((-3,), {1: 16, 2: 8}),
        ),
    ),
    PublishedTheorem(
        "C4xC4xC2",
        (4, 4, 2),
        {4: 3, 2: 25},
        _cases(4, ((1,), {1: 32}), ((-1,), {1: 8, 2: 12})),
    ),
    PublishedTheorem(
        "C4xC2^3",
        (4, 2, 2, 2),
        {4: 1, 2: 29},
        _cases(4, ((1,), {1: 32}), ((-1,), {1: 16, 2: 8})),
    ),
    PublishedTheorem(
        "C2^5",
        (2, 2, 2, 2, 2),
        {2: 31},
        _cases(2, ((1,), {1: 32})),
    ),
)

WITNESS_BOUND = 2**16


@lru_cache(maxsize=None)
def _odd_prime_powers(bound: int) -> tuple[tuple[int, int], ...]:
    """(q, p) for odd prime powers q < bound, ascending in q."""
    out = []
    for p in primerange(3, bound):
        q = p
        while q < bound:
            out.append((q, p))
            q *= p
    return tuple(sorted(out))


def witnesses(modulus: int, residue: int, group_order: int, count: int = 2, bound: int = WITNESS_BOUND) -> list[int]:
    """Smallest prime powers q = p^n < bound, p odd and coprime to |G|, q = residue mod modulus."""
    found = []
    for q, p in _odd_prime_powers(bound):
        if group_order % p == 0:
            continue
        if (q - residue) % modulus == 0:
            found.append(q)
            if len(found) == count:
                break
    return found
