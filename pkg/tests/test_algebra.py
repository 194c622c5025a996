import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from unitlab.algebra import (
    AlgebraElement,
    augmentation,
    element_power,
    frobenius_operator,
    frobenius_power,
    from_omega_coordinates,
    multiply,
    omega_coordinates,
)
from unitlab.errors import InvalidInput
from unitlab.field import construct_field
from unitlab.group import construct_group
from unitlab.linalg import kernel_dim, mat_power


def elt(F, G, terms):
    return AlgebraElement.from_dict(F, G, terms)


def test_spec_multiplication_examples():
    F2, F3 = construct_field(2), construct_field(3)
    C2 = construct_group([2])
    one = AlgebraElement.scalar(F2, C2)
    y = elt(F2, C2, {(1,): 1})
    assert multiply(one, y) == y
    u = elt(F2, C2, {(0,): 1, (1,): 1})
    assert multiply(u, u).is_zero()
    assert multiply(elt(F3, C2, {(0,): 1, (1,): 1}), elt(F3, C2, {(0,): 1, (1,): -1})).is_zero()


def test_augmentation_examples():
    F2, F3 = construct_field(2), construct_field(3)
    assert augmentation(elt(F2, construct_group([2]), {(0,): 1, (1,): 1})) == F2.zero
    assert augmentation(AlgebraElement.scalar(F3, construct_group([4]))) == F3.one
    assert augmentation(elt(F3, construct_group([4]), {(0,): 2, (1,): 1})) == F3.zero


def test_power_examples():
    F2 = construct_field(2)
    C4 = construct_group([4])
    u = elt(F2, C4, {(0,): 1, (1,): 1})
    assert element_power(u, 0) == AlgebraElement.scalar(F2, C4)
    assert element_power(u, 2) == elt(F2, C4, {(0,): 1, (2,): 1})
    assert element_power(u, 4).is_zero()


def test_mismatched_operands():
    F2 = construct_field(2)
    with pytest.raises(InvalidInput):
        multiply(AlgebraElement.scalar(F2, construct_group([2])), AlgebraElement.scalar(F2, construct_group([4])))


def test_operator_examples():
    T = frobenius_operator(construct_field(2), construct_group([2]))
    assert T.dim == 1 and T.matrix.is_zero()
    T = frobenius_operator(construct_field(2), construct_group([32]))
    assert T.dim == 31 and kernel_dim(T.matrix) == 16
    assert frobenius_operator(construct_field(2, 2), construct_group([4])).dim == 6
    with pytest.raises(InvalidInput):
        frobenius_operator(construct_field(3), construct_group([4]))


def test_c32_kernel_is_pair_agreement():
    # alpha^2 = 0 iff c_i = c_{i+16} for all i (pairs collapse under squaring)
    F, G = construct_field(2), construct_group([32])
    T = frobenius_operator(F, G)
    rng = random.Random(5)
    for _ in range(40):
        half = [rng.randrange(2) for _ in range(16)]
        x = elt(F, G, {(i,): half[i % 16] for i in range(32)})
        assert T.apply(x).is_zero()
        assert element_power(x, 2).is_zero()


@pytest.mark.parametrize(
    "p,n,orders",
    [(2, 1, [4]), (2, 1, [2, 2]), (2, 2, [2]), (2, 1, [2, 2, 2]), (3, 1, [3]), (2, 2, [4]), (2, 1, [8])],
)
def test_kernel_dims_match_enumeration(p, n, orders):
    """Oracle: count alpha in omega with alpha^(p^k) = 0 by enumerating all of omega."""
    F, G = construct_field(p, n), construct_group(orders)
    T = frobenius_operator(F, G)
    omega = [
        from_omega_coordinates(F, G, v) for v in itertools.product(range(p), repeat=T.dim)
    ]
    k = 1
    while p ** (k - 1) < G.exponent:
        count = sum(1 for a in omega if frobenius_power(a, k).is_zero())
        assert p ** kernel_dim(mat_power(T.matrix, k)) == count
        k += 1


cases = st.sampled_from([(2, 1, [8]), (2, 3, [4, 2]), (3, 2, [3, 3]), (3, 1, [9]), (5, 1, [5]), (2, 2, [2, 2, 2])])


@settings(max_examples=40, deadline=None)
@given(cases, st.integers(0, 2**32))
def test_operator_matches_power_map(case, seed):
    p, n, orders = case
    F, G = construct_field(p, n), construct_group(orders)
    T = frobenius_operator(F, G)
    rng = random.Random(seed)
    x = AlgebraElement.random(F, G, rng)
    x = x - AlgebraElement.scalar(F, G, augmentation(x))
    assert augmentation(x) == F.zero
    xp = element_power(x, p)
    assert T.apply(x) == xp
    assert frobenius_power(x, 1) == xp
    # T is additive and semilinear over F
    y = AlgebraElement.random(F, G, rng)
    y = y - AlgebraElement.scalar(F, G, augmentation(y))
    c = F.from_int(rng.randrange(F.q))
    assert T.apply(x + y) == T.apply(x) + T.apply(y)
    assert T.apply(x * c) == T.apply(x) * F.frobenius(c, 1)
    # two routes to alpha^(p^j)
    j = rng.randrange(1, 4)
    via_matrix = from_omega_coordinates(F, G, mat_power(T.matrix, j).apply(omega_coordinates(x)))
    assert via_matrix == element_power(x, p**j) == frobenius_power(x, j)


@settings(max_examples=30, deadline=None)
@given(cases, st.integers(0, 2**32))
def test_augmentation_is_multiplicative_and_t_nilpotent(case, seed):
    p, n, orders = case
    F, G = construct_field(p, n), construct_group(orders)
    rng = random.Random(seed)
    x, y = AlgebraElement.random(F, G, rng), AlgebraElement.random(F, G, rng)
    assert augmentation(multiply(x, y)) == augmentation(x) * augmentation(y)
    assert multiply(x, y) == multiply(y, x)
    T = frobenius_operator(F, G)
    e = 0
    while p**e < G.exponent:
        e += 1
    assert mat_power(T.matrix, e).is_zero()
    assert not mat_power(T.matrix, e - 1).is_zero()


def test_omega_coordinates_roundtrip():
    F, G = construct_field(3, 2), construct_group([3])
    rng = np.random.default_rng(0)
    for _ in range(20):
        v = rng.integers(0, 3, size=2 * 2)
        assert (omega_coordinates(from_omega_coordinates(F, G, v)) == v).all()
    with pytest.raises(InvalidInput):
        omega_coordinates(AlgebraElement.scalar(F, G))
