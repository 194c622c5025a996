import itertools

import pytest
from hypothesis import given, settings, strategies as st

from unitlab.errors import CapacityError, InvalidInput
from unitlab.field import (
    construct_field,
    field_tables,
    is_irreducible_rabin,
    is_irreducible_trial,
    smallest_irreducible,
)


def _poly_mul_mod(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def _monics(p, d):
    for low in itertools.product(range(p), repeat=d):
        yield tuple(low) + (1,)


def smallest_irreducible_by_products(p, n):
    """Oracle: a monic of degree n is reducible iff it is a product of two monics of degree >= 1."""
    reducible = set()
    for d in range(1, n // 2 + 1):
        for f in _monics(p, d):
            for g in _monics(p, n - d):
                reducible.add(_poly_mul_mod(f, g, p))
    # lexicographic order on (c_{n-1}, ..., c_0)
    for high_first in itertools.product(range(p), repeat=n):
        f = tuple(reversed(high_first)) + (1,)
        if f not in reducible:
            return f


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)])
def test_modulus_matches_product_enumeration(p, n):
    assert construct_field(p, n).modulus == smallest_irreducible_by_products(p, n)


def test_spec_moduli():
    assert construct_field(2, 1).modulus == (0, 1)  # x
    assert construct_field(2, 2).modulus == (1, 1, 1)  # x^2+x+1
    assert construct_field(3, 2).modulus == (1, 0, 1)  # x^2+1


def test_construction_is_deterministic():
    smallest_irreducible.cache_clear()
    first = smallest_irreducible(3, 5)
    smallest_irreducible.cache_clear()
    assert smallest_irreducible(3, 5) == first
    assert construct_field(3, 5) == construct_field(3, 5)


@pytest.mark.parametrize("p,n", [(2, 4), (2, 6), (3, 3), (5, 2)])
def test_rabin_agrees_with_trial_division(p, n):
    for f in _monics(p, n):
        assert is_irreducible_rabin(f, p) == is_irreducible_trial(f, p), f


def test_construct_errors():
    with pytest.raises(InvalidInput):
        construct_field(4, 1)
    with pytest.raises(InvalidInput):
        construct_field(2, 0)
    with pytest.raises(CapacityError):
        construct_field(2, 63)
    # pure arithmetic is fine up to 2^62, enumeration is not
    F = construct_field(2, 62)
    assert F.q == 2**62
    with pytest.raises(CapacityError):
        next(F.elements())


def test_spec_arithmetic_examples():
    F4 = construct_field(2, 2)
    x = F4([0, 1])
    assert x * x == F4([1, 1])
    assert F4.frobenius(x, 1) == F4([1, 1])
    F3 = construct_field(3)
    assert F3(2) * F3(2) == F3(1)
    for a in F4.elements():
        assert a * F4.one == a


def test_inverse_of_zero_and_mixed_fields():
    F = construct_field(3, 2)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()
    with pytest.raises(InvalidInput):
        F.one + construct_field(3).one


@pytest.mark.parametrize("p,n", [(2, 1), (2, 3), (2, 6), (3, 2), (5, 2), (7, 1), (2, 10), (3, 5)])
def test_multiplicative_group_order(p, n):
    F = construct_field(p, n)
    nonzero = [a for a in F.elements() if a]
    assert len(nonzero) == F.q - 1
    for a in nonzero[:64]:
        assert a ** (F.q - 1) == F.one


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (2, 6), (7, 2)])
def test_inverse_is_multiplicative_exhaustive(p, n):
    F = construct_field(p, n)
    nonzero = [a for a in F.elements() if a]
    for a in nonzero:
        assert a * a.inverse() == F.one
    for a, b in itertools.product(nonzero, repeat=2):
        assert (a * b).inverse() == a.inverse() * b.inverse()


def test_frobenius_fixes_prime_field_and_has_order_n():
    F = construct_field(3, 3)
    for c in range(3):
        assert F.frobenius(F(c), 1) == F(c)
    for a in F.elements():
        assert F.frobenius(a, F.n) == a


fields = st.sampled_from([(2, 1), (2, 3), (2, 5), (3, 2), (3, 4), (5, 3), (7, 2), (13, 1)])


@settings(max_examples=60, deadline=None)
@given(fields, st.data())
def test_field_axioms_and_frobenius_additivity(pn, data):
    F = construct_field(*pn)
    code = st.integers(0, F.q - 1)
    a, b, c = (F.from_int(data.draw(code)) for _ in range(3))
    k = data.draw(st.integers(0, 6))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == F.zero
    assert F.frobenius(a + b, k) == F.frobenius(a, k) + F.frobenius(b, k)
    assert F.frobenius(a * b, k) == F.frobenius(a, k) * F.frobenius(b, k)
    assert F.from_int(a.to_int()) == a


def test_tables_match_scalar_arithmetic():
    F = construct_field(3, 2)
    add, mul, neg, inv = field_tables(F)
    for a in F.elements():
        assert neg[a.to_int()] == (-a).to_int()
        if a:
            assert inv[a.to_int()] == a.inverse().to_int()
        for b in F.elements():
            assert add[a.to_int(), b.to_int()] == (a + b).to_int()
            assert mul[a.to_int(), b.to_int()] == (a * b).to_int()
