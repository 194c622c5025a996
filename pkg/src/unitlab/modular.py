"""Unit groups of modular group algebras FG, G an abelian p-group, char F = p.

V(FG) = 1 + omega(G) and the p-power map on V is carried by the additive
Frobenius operator T on omega(G): |V[p^k]| = p^dim ker T^k. The cyclic factor
multiplicities are second differences of that kernel sequence.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import frobenius_operator
from .decomposition import CyclicDecomposition
from .errors import InconsistencyError, InvalidInput
from .field import Field
from .group import AbelianGroup
from .linalg import kernel_dim, mat_mul


@dataclass(frozen=True)
class KernelSequence:
    """a[k-1] = dim_GF(p) ker T^k for k = 1..e, where p^e = exp(G)."""

    a: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.a)

    def __getitem__(self, k: int) -> int:
        """a_k with the conventions a_0 = 0 and a_k = a_e for k > e."""
        if k <= 0:
            return 0
        return self.a[min(k, len(self.a)) - 1]

    def validate(self) -> None:
        a = (0,) + self.a
        if not self.a or a[1] <= 0:
            raise InconsistencyError(f"kernel sequence {self.a} must start positive")
        steps = [a[i + 1] - a[i] for i in range(len(self.a))]
        if any(s < 0 for s in steps):
            raise InconsistencyError(f"kernel sequence {self.a} is not monotone")
        if any(steps[i + 1] > steps[i] for i in range(len(steps) - 1)):
            raise InconsistencyError(f"kernel sequence {self.a} is not concave")


@dataclass(frozen=True)
class UlmInvariants:
    """m[s] = multiplicity of C_{p^s}."""

    m: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.m)

    @property
    def log_order(self) -> int:
        return sum(s * k for s, k in self.m)

    @property
    def top(self) -> int:
        return max((s for s, k in self.m if k), default=0)


def frobenius_kernel_sequence(F: Field, G: AbelianGroup) -> KernelSequence:
    if not G.is_p_group(F.p) or G.order == 1:
        raise InvalidInput(f"{G} is not a nontrivial {F.p}-group over {F!r}")
    T = frobenius_operator(F, G).matrix
    e = 0
    while F.p**e < G.exponent:
        e += 1
    a = []
    power = T
    for k in range(1, e + 1):
        if k > 1:
            power = mat_mul(power, T)
        a.append(kernel_dim(power))
    if not power.is_zero():
        raise InconsistencyError(f"T^{e} is not zero on omega({G})")
    seq = KernelSequence(tuple(a))
    seq.validate()
    return seq


def ulm_invariants(seq: KernelSequence) -> UlmInvariants:
    seq.validate()
    e = len(seq)
    m = []
    for s in range(1, e + 1):
        ms = 2 * seq[s] - seq[s - 1] - seq[s + 1]
        if ms < 0:
            raise InconsistencyError(f"negative multiplicity for s={s} from {seq.a}")
        if ms:
            m.append((s, ms))
    return UlmInvariants(tuple(sorted(m, reverse=True)))


def normalized_units(F: Field, G: AbelianGroup) -> CyclicDecomposition:
    """V(FG) as a concrete decomposition."""
    if G.order == 1:
        return CyclicDecomposition(q=F.q)
    ulm = ulm_invariants(frobenius_kernel_sequence(F, G))
    return CyclicDecomposition.build(cyclic={F.p**s: k for s, k in ulm.m}, q=F.q)


def unit_group_modular(F: Field, G: AbelianGroup) -> CyclicDecomposition:
    """U(FG) = V(FG) x C_{q-1}."""
    if G.order > 1 and not G.is_p_group(F.p):
        raise InvalidInput(f"{G} is not a {F.p}-group")
    return normalized_units(F, G) * CyclicDecomposition.build(q_pow={1: 1}, q=F.q)


def w_set_dimension(seq: KernelSequence, j: int) -> int:
    """dim of im(T^j) & ker(T) = a_{j+1} - a_j."""
    if not 1 <= j < len(seq):
        raise InvalidInput(f"j must lie in [1, {len(seq) - 1}], got {j}")
    return seq[j + 1] - seq[j]


# -- closed forms ---------------------------------------------------------------

def closed_form_elementary_abelian(p: int, n: int, k: int) -> CyclicDecomposition:
    """U(F C_p^k) = C_p^{n(p^k - 1)} x C_{p^n - 1}."""
    return CyclicDecomposition.build(q_pow={1: 1}, cyclic={p: n * (p**k - 1)}, q=p**n)


def closed_form_cyclic(p: int, n: int, k: int) -> CyclicDecomposition:
    """U(F C_{p^k}) with h_k = n(p-1) and h_s = n p^(k-s-1) (p-1)^2 for s < k."""
    if k == 1:
        return closed_form_elementary_abelian(p, n, 1)
    h = {p**k: n * (p - 1)}
    for s in range(1, k):
        h[p**s] = n * p ** (k - s - 1) * (p - 1) ** 2
    return CyclicDecomposition.build(q_pow={1: 1}, cyclic=h, q=p**n)
