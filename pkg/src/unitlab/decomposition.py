"""Symbolic direct products of cyclic groups.

A factor is either ``("q_pow", d)`` meaning C_{q^d - 1} for the field size q,
or ``("cyclic", m)`` meaning C_m. This is the answer type of every engine.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from sympy import factorint

from .errors import InvalidInput

Q_POW = "q_pow"
CYCLIC = "cyclic"
FACTOR_CAP = 2**64


def _canonical(items: Iterable[tuple[str, int, int]]) -> tuple[tuple[str, int, int], ...]:
    merged: Counter = Counter()
    for kind, param, mult in items:
        if kind not in (Q_POW, CYCLIC):
            raise InvalidInput(f"unknown factor kind {kind!r}")
        if param < 1 or mult < 0:
            raise InvalidInput(f"bad factor ({kind}, {param}, {mult})")
        merged[kind, param] += mult
    order = sorted((k for k, m in merged.items() if m), key=lambda k: (k[0] != Q_POW, -k[1]))
    return tuple((kind, param, merged[kind, param]) for kind, param in order)


def prime_power_split(m: int) -> Counter | None:
    """CRT split of C_m into prime-power orders; None if m is beyond the factoring cap."""
    if m > FACTOR_CAP:
        return None
    return Counter({int(pr) ** e: 1 for pr, e in factorint(m).items()})


@dataclass(frozen=True)
class CyclicDecomposition:
    factors: tuple[tuple[str, int, int], ...] = ()
    q: int | None = None
    normalized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "factors", _canonical(self.factors))

    @classmethod
    def build(
        cls,
        q_pow: Mapping[int, int] | None = None,
        cyclic: Mapping[int, int] | None = None,
        q: int | None = None,
        normalized: bool = False,
    ) -> CyclicDecomposition:
        items = [(Q_POW, d, k) for d, k in (q_pow or {}).items()]
        items += [(CYCLIC, m, k) for m, k in (cyclic or {}).items()]
        return cls(tuple(items), q, normalized)

    @property
    def q_pow(self) -> dict[int, int]:
        return {d: k for kind, d, k in self.factors if kind == Q_POW}

    @property
    def cyclic(self) -> dict[int, int]:
        return {m: k for kind, m, k in self.factors if kind == CYCLIC}

    @property
    def is_symbolic(self) -> bool:
        return any(kind == Q_POW for kind, _, _ in self.factors)

    def with_q(self, q: int | None) -> CyclicDecomposition:
        return CyclicDecomposition(self.factors, q, self.normalized)

    def __mul__(self, other: CyclicDecomposition) -> CyclicDecomposition:
        if self.q is not None and other.q is not None and self.q != other.q:
            raise InvalidInput(f"cannot multiply decompositions for q={self.q} and q={other.q}")
        q = self.q if self.q is not None else other.q
        return CyclicDecomposition(self.factors + other.factors, q)

    def repeat(self, k: int) -> CyclicDecomposition:
        """Direct power: every multiplicity times k."""
        return CyclicDecomposition(tuple((kind, x, m * k) for kind, x, m in self.factors), self.q)

    def over_extension(self, d: int, q: int | None = None) -> CyclicDecomposition:
        """Reinterpret a decomposition computed over GF(q^d) relative to base size q."""
        items = tuple((kind, x * d if kind == Q_POW else x, m) for kind, x, m in self.factors)
        return CyclicDecomposition(items, q)

    def _resolve_q(self, q: int | None) -> int | None:
        if q is None:
            q = self.q
        elif self.q is not None and q != self.q:
            raise InvalidInput(f"decomposition is attached to q={self.q}, got q={q}")
        if q is None and self.is_symbolic:
            raise InvalidInput("symbolic factors C_{q^d-1} need a value for q")
        return q

    def substitute(self, q: int | None = None) -> CyclicDecomposition:
        """Replace C_{q^d-1} by the concrete C_m without splitting."""
        q = self._resolve_q(q)
        items = [(CYCLIC, q**x - 1 if kind == Q_POW else x, m) for kind, x, m in self.factors]
        return CyclicDecomposition(tuple(items), q)

    def evaluate(self, q: int | None = None) -> CyclicDecomposition:
        """All-concrete CRT normal form: prime-power orders only, trivial factors dropped."""
        conc = self.substitute(q)
        out: Counter = Counter()
        complete = True
        for _, m, k in conc.factors:
            split = prime_power_split(m)
            if split is None:
                complete = False
                out[m] += k
                continue
            for pp in split:
                if pp > 1:
                    out[pp] += k
        return CyclicDecomposition(tuple((CYCLIC, m, k) for m, k in out.items()), conc.q, complete)

    def total_order(self, q: int | None = None) -> int:
        total = 1
        for _, m, k in self.substitute(q).factors:
            total *= m**k
        return total

    def prime_power_multiset(self, q: int | None = None) -> dict[int, int]:
        return self.evaluate(q).cyclic

    def is_isomorphic(self, other: CyclicDecomposition, q: int | None = None) -> bool:
        return self.evaluate(q).factors == other.evaluate(q).factors

    # -- rendering -------------------------------------------------------------

    def symbolic(self) -> str:
        parts = []
        for kind, x, k in self.factors:
            if kind == Q_POW:
                base = "C_{q-1}" if x == 1 else f"C_{{q^{x}-1}}"
            else:
                base = f"C_{x}"
            parts.append(base + (f"^{k}" if k > 1 else ""))
        return " x ".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.symbolic()

    def to_json(self, group: Iterable[int] | None = None, p: int | None = None, n: int | None = None) -> dict:
        return {
            "group": list(group) if group is not None else None,
            "p": p,
            "n": n,
            "q": self.q,
            "factors": [{"kind": kind, "param": x, "mult": k} for kind, x, k in self.factors],
            "normalized": self.normalized,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> CyclicDecomposition:
        try:
            items = tuple((f["kind"], int(f["param"]), int(f["mult"])) for f in data["factors"])
            return cls(items, data.get("q"), bool(data.get("normalized", False)))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed decomposition JSON: {exc}") from exc
