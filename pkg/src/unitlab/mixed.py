"""Unit group of FG for any finite abelian G over any finite field."""
from __future__ import annotations

import math

from .decomposition import CyclicDecomposition
from .field import Field, construct_field
from .group import AbelianGroup, primary_split
from .modular import unit_group_modular
from .semisimple import unit_group_semisimple, wedderburn_degrees


def unit_group(F: Field, G: AbelianGroup) -> CyclicDecomposition:
    """Dispatch on how char F meets |G|.

    For G = P x H with P the p-part, FG = (FH)P and FH splits as a sum of
    fields GF(q^d), so FG is a sum of modular algebras GF(q^d)P.
    """
    if math.gcd(F.p, G.order) == 1:
        return unit_group_semisimple(G, F.q).with_q(F.q)
    P, H = primary_split(G, F.p)
    if H.order == 1:
        return unit_group_modular(F, P)
    result = CyclicDecomposition(q=F.q)
    for d, mult in wedderburn_degrees(H, F.q).degrees:
        ext = construct_field(F.p, F.n * d)
        part = unit_group_modular(ext, P).over_extension(d, F.q)
        result = result * part.repeat(mult)
    return result


def evaluate(dec: CyclicDecomposition, q: int | None = None) -> CyclicDecomposition:
    return dec.evaluate(q)


def total_order(dec: CyclicDecomposition, q: int | None = None) -> int:
    return dec.total_order(q)
