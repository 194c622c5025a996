"""Verification suites: published-table reproduction, oracle grid, invariants.

Every suite returns a list of ``Check`` rows so callers (CLI, tests) decide
how to report them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .decomposition import CyclicDecomposition
from .field import Field, construct_field, prime_power_parts
from .group import AbelianGroup, construct_group, groups_of_order
from .mixed import unit_group
from .modular import (
    closed_form_cyclic,
    closed_form_elementary_abelian,
    frobenius_kernel_sequence,
    ulm_invariants,
    unit_group_modular,
)
from .oracle import abelian_invariants_from_units, enumerate_units
from .reference import THEOREMS, PublishedTheorem, witnesses
from .semisimple import f_conjugacy_classes, unit_group_semisimple, wedderburn_degrees

GRID_FIELDS = (2, 3, 4, 5, 7, 8, 9)
DEFAULT_GRID_CAP = 2**16


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  {self.detail}" if self.detail else "")


def all_passed(checks: Iterable[Check]) -> bool:
    return all(c.passed for c in checks)


# -- published tables -------------------------------------------------------------

def char2_checks(theorems: Iterable[PublishedTheorem] = THEOREMS, ns=(1, 2, 3)) -> list[Check]:
    out = []
    for th in theorems:
        for n in ns:
            got = unit_group_modular(construct_field(2, n), th.group)
            want = th.char2_expected(n)
            out.append(Check(f"{th.label} over GF(2^{n})", got == want, f"got {got}" if got != want else str(got)))
    return out


def residue_checks(theorems: Iterable[PublishedTheorem] = THEOREMS, witness_count: int = 2) -> list[Check]:
    out = []
    for th in theorems:
        G = th.group
        for case in th.cases:
            want = case.expected_decomposition()
            shapes = set()
            for r in case.residues:
                shape = unit_group_semisimple(G, r % case.modulus)
                shapes.add(shape)
                qs = witnesses(case.modulus, r, G.order, witness_count)
                if not qs:
                    out.append(Check(f"{th.label} q={r} mod {case.modulus}", False, "no witness prime power"))
                for q in qs:
                    got = unit_group_semisimple(G, q)
                    out.append(
                        Check(f"{th.label} q={r} mod {case.modulus} witness q={q}", got == want, str(got))
                    )
            out.append(
                Check(
                    f"{th.label} residues {case.label()} share one shape",
                    len(shapes) == 1 and shapes == {want},
                    str(want),
                )
            )
        for r, like in th.unlisted:
            modulus = th.cases[0].modulus
            target = th.case_for(like).expected_decomposition()
            for q in witnesses(modulus, r, G.order, witness_count):
                got = unit_group_semisimple(G, q)
                out.append(
                    Check(
                        f"{th.label} unlisted q={r} mod {modulus} witness q={q} (same as {like})",
                        got == target,
                        str(got),
                    )
                )
    return out


# -- oracle grid ------------------------------------------------------------------

def grid_instances(cap: int = DEFAULT_GRID_CAP, field_sizes=GRID_FIELDS) -> list[tuple[Field, AbelianGroup]]:
    """Every (GF(q), G) with q in field_sizes, G abelian and q^|G| <= cap."""
    out = []
    for q in field_sizes:
        p, n = prime_power_parts(q)
        F = construct_field(p, n)
        order = 1
        while q**order <= cap:
            out.extend((F, G) for G in groups_of_order(order))
            order += 1
    return out


def oracle_check(F: Field, G: AbelianGroup, cap: int | None = None, inject_fault: bool = False) -> Check:
    engine = unit_group(F, G)
    if inject_fault:
        engine = engine * CyclicDecomposition.build(cyclic={2: 1})
    units = enumerate_units(F, G, cap)
    brute = abelian_invariants_from_units(units)
    same = engine.evaluate().factors == brute.factors and units.order == engine.total_order()
    detail = f"|U|={units.order} {brute}" if same else f"engine {engine.evaluate()} vs oracle {brute}"
    return Check(f"oracle {F!r} {G}", same, detail)


def oracle_grid(cap: int = DEFAULT_GRID_CAP, field_sizes=GRID_FIELDS, inject_fault: bool = False) -> list[Check]:
    out = []
    for i, (F, G) in enumerate(grid_instances(cap, field_sizes)):
        out.append(oracle_check(F, G, max(cap, F.q**G.order), inject_fault and i == 0))
    return out


# -- invariant suites ----------------------------------------------------------------

def _multiplicative_order(r: int, m: int) -> int:
    if m == 1:
        return 1
    k, t = 1, r % m
    while t != 1:
        t = t * r % m
        k += 1
    return k


def semisimple_invariant_check(G: AbelianGroup, q: int) -> Check:
    ctx, orbits = f_conjugacy_classes(G, q)
    shape = wedderburn_degrees(G, q)
    problems = []
    if shape.components != len(orbits):
        problems.append("component count != class count")
    if shape.dimension != G.order:
        problems.append("sum d*mult != |G|")
    order = _multiplicative_order(q, G.exponent)
    if any(order % len(o) for o in orbits):
        problems.append("orbit size does not divide ord(q)")
    if any(len({G.element_order(g) for g in o}) != 1 for o in orbits):
        problems.append("orbit mixes element orders")
    for o in orbits:
        if {G.power(g, q) for g in o} != set(o):
            problems.append("orbit not closed")
            break
    if unit_group_semisimple(G, q) != unit_group_semisimple(G, q % G.exponent + G.exponent):
        problems.append("shape depends on more than q mod exp(G)")
    return Check(f"semisimple invariants {G} q={q}", not problems, "; ".join(problems) or str(shape))


def modular_invariant_check(p: int, n: int, G: AbelianGroup) -> Check:
    F = construct_field(p, n)
    problems = []
    seq = frobenius_kernel_sequence(F, G)  # validates monotonicity and concavity
    ulm = ulm_invariants(seq).as_dict()
    if sum(s * k for s, k in ulm.items()) != n * (G.order - 1):
        problems.append("sum s*m_s != n(|G|-1)")
    if p ** max(ulm) != G.exponent:
        problems.append("exponent of V != exponent of G")
    if n > 1:
        base = ulm_invariants(frobenius_kernel_sequence(construct_field(p, 1), G)).as_dict()
        if {s: n * k for s, k in base.items()} != ulm:
            problems.append("m_s over GF(p^n) != n * m_s over GF(p)")
    U = unit_group_modular(F, G)
    if U.total_order() != F.q ** (G.order - 1) * (F.q - 1):
        problems.append("|U| != q^(|G|-1)(q-1)")
    return Check(f"modular invariants {G} over {F!r}", not problems, "; ".join(problems) or str(U))


def p_groups(p: int, max_order: int) -> list[AbelianGroup]:
    out = []
    order = p
    while order <= max_order:
        out.extend(groups_of_order(order))
        order *= p
    return out


def invariant_suites(max_order: int = 64, max_n: int = 3) -> list[Check]:
    out = []
    for order in range(1, max_order + 1):
        for G in groups_of_order(order):
            for r in range(1, 2 * G.exponent + 1):
                if math.gcd(r, G.order) == 1:
                    out.append(semisimple_invariant_check(G, r))
    for p in (2, 3, 5):
        for G in p_groups(p, max_order):
            for n in range(1, max_n + 1):
                out.append(modular_invariant_check(p, n, G))
    return out


def closed_form_checks(max_group_order: int = 64, primes=(2, 3, 5), max_n: int = 3) -> list[Check]:
    out = []
    for p in primes:
        k = 1
        while p**k <= max_group_order:
            for n in range(1, max_n + 1):
                F = construct_field(p, n)
                got = unit_group_modular(F, construct_group([p**k]))
                want = closed_form_cyclic(p, n, k)
                out.append(Check(f"cyclic C_{p**k} over {F!r}", got == want, str(got)))
                got = unit_group_modular(F, construct_group([p] * k))
                want = closed_form_elementary_abelian(p, n, k)
                out.append(Check(f"elementary C_{p}^{k} over {F!r}", got == want, str(got)))
            k += 1
    return out
