import pytest
from hypothesis import given, settings, strategies as st

from unitlab.decomposition import CyclicDecomposition
from unitlab.errors import InconsistencyError, InvalidInput
from unitlab.field import construct_field
from unitlab.group import construct_group, groups_of_order, trivial_group
from unitlab.modular import (
    KernelSequence,
    closed_form_cyclic,
    closed_form_elementary_abelian,
    frobenius_kernel_sequence,
    ulm_invariants,
    unit_group_modular,
    w_set_dimension,
)
from unitlab.oracle import abelian_invariants_from_units, enumerate_units


def power_image_size(G, k):
    return len({G.power(g, k) for g in G.elements()})


def kernel_sequence_by_collapse(p, n, G):
    """Oracle: alpha^(p^k) = 0 iff the coefficients summed over each fibre of
    g -> g^(p^k) vanish, so dim ker T^k = n (|G| - |G^(p^k)|)."""
    a, k = [], 1
    while p ** (k - 1) < G.exponent:
        a.append(n * (G.order - power_image_size(G, p**k)))
        k += 1
    return tuple(a)


def ulm_by_power_subgroups(p, n, G):
    """Oracle: m_s = n (|G^(p^(s-1))| - 2 |G^(p^s)| + |G^(p^(s+1))|)."""
    out = {}
    s = 1
    while p ** (s - 1) < G.exponent:
        m = n * (
            power_image_size(G, p ** (s - 1)) - 2 * power_image_size(G, p**s) + power_image_size(G, p ** (s + 1))
        )
        if m:
            out[s] = m
        s += 1
    return out


@pytest.mark.parametrize(
    "orders,expected",
    [([32], (16, 24, 28, 30, 31)), ([2], (1,)), ([16, 2], (24, 28, 30, 31))],
)
def test_kernel_sequence_examples(orders, expected):
    G = construct_group(orders)
    assert kernel_sequence_by_collapse(2, 1, G) == expected
    assert frobenius_kernel_sequence(construct_field(2), G).a == expected


def test_ulm_examples():
    assert ulm_invariants(KernelSequence((16, 24, 28, 30, 31))).as_dict() == {5: 1, 4: 1, 3: 2, 2: 4, 1: 8}
    assert ulm_invariants(KernelSequence((1,))).as_dict() == {1: 1}
    assert ulm_invariants(KernelSequence((24, 30, 31))).as_dict() == {3: 1, 2: 5, 1: 18}


@pytest.mark.parametrize("bad", [(), (0, 3), (3, 2), (1, 3, 6), (2, 5, 9)])
def test_malformed_sequences(bad):
    with pytest.raises(InconsistencyError):
        ulm_invariants(KernelSequence(bad))


def test_unit_group_examples():
    for n in (1, 2, 3):
        got = unit_group_modular(construct_field(2, n), construct_group([32]))
        want = CyclicDecomposition.build(q_pow={1: 1}, cyclic={32: n, 16: n, 8: 2 * n, 4: 4 * n, 2: 8 * n}, q=2**n)
        assert got == want
    got = unit_group_modular(construct_field(2), construct_group([4, 2, 2, 2]))
    assert got.substitute().cyclic == {4: 1, 2: 29, 1: 1}
    got = unit_group_modular(construct_field(3), construct_group([3]))
    assert got.evaluate().cyclic == {3: 2, 2: 1}
    brute = abelian_invariants_from_units(enumerate_units(construct_field(3), construct_group([3])))
    assert brute.cyclic == {3: 2, 2: 1}


def test_trivial_and_wrong_characteristic():
    F = construct_field(5)
    assert unit_group_modular(F, trivial_group()) == CyclicDecomposition.build(q_pow={1: 1}, q=5)
    with pytest.raises(InvalidInput):
        unit_group_modular(F, construct_group([4]))
    with pytest.raises(InvalidInput):
        frobenius_kernel_sequence(F, construct_group([10]))


def test_closed_form_examples():
    for n in (1, 2, 3):
        assert closed_form_elementary_abelian(2, n, 5) == CyclicDecomposition.build(
            q_pow={1: 1}, cyclic={2: 31 * n}, q=2**n
        )
        assert closed_form_cyclic(2, n, 5) == CyclicDecomposition.build(
            q_pow={1: 1}, cyclic={32: n, 16: n, 8: 2 * n, 4: 4 * n, 2: 8 * n}, q=2**n
        )
    assert closed_form_elementary_abelian(3, 1, 1).evaluate().cyclic == {3: 2, 2: 1}
    assert closed_form_elementary_abelian(2, 2, 2).evaluate().cyclic == {2: 6, 3: 1}
    assert closed_form_cyclic(2, 1, 2).substitute().cyclic == {4: 1, 2: 1, 1: 1}
    assert closed_form_cyclic(2, 1, 1).substitute().cyclic == {2: 1, 1: 1}
    brute = abelian_invariants_from_units(enumerate_units(construct_field(2), construct_group([4])))
    assert brute == closed_form_cyclic(2, 1, 2).evaluate()


def test_w_set_dimension():
    for n in (1, 2, 3):
        seq = frobenius_kernel_sequence(construct_field(2, n), construct_group([16, 2]))
        assert w_set_dimension(seq, 3) == n
        assert w_set_dimension(seq, 2) == 2 * n
    seq = frobenius_kernel_sequence(construct_field(2), construct_group([8, 4]))
    assert w_set_dimension(seq, len(seq) - 1) == ulm_invariants(seq).as_dict()[len(seq)]
    with pytest.raises(InvalidInput):
        w_set_dimension(seq, 3)
    with pytest.raises(InvalidInput):
        w_set_dimension(seq, 0)


P_GROUPS = [G for order in (2, 4, 8, 16, 32, 64) for G in groups_of_order(order)]
P_GROUPS += [G for order in (3, 9, 27, 81) for G in groups_of_order(order)]
P_GROUPS += [G for order in (5, 25) for G in groups_of_order(order)] + [construct_group([7, 7])]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(P_GROUPS), st.integers(1, 3))
def test_modular_invariants(G, n):
    p = next(iter({d for d in (2, 3, 5, 7) if G.order % d == 0}))
    F = construct_field(p, n)
    seq = frobenius_kernel_sequence(F, G)
    assert seq.a == kernel_sequence_by_collapse(p, n, G)
    steps = [b - a for a, b in zip((0,) + seq.a, seq.a)]
    assert all(s1 >= s2 for s1, s2 in zip(steps, steps[1:]))
    ulm = ulm_invariants(seq).as_dict()
    assert ulm == ulm_by_power_subgroups(p, n, G)
    assert sum(s * m for s, m in ulm.items()) == n * (G.order - 1)
    assert p ** max(ulm) == G.exponent
    base = ulm_invariants(frobenius_kernel_sequence(construct_field(p), G)).as_dict()
    assert ulm == {s: n * m for s, m in base.items()}
    U = unit_group_modular(F, G)
    assert U.total_order() == F.q ** (G.order - 1) * (F.q - 1)
