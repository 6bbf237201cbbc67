from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hqcks import gf

SMALL_Q = [q for q in range(2, 170) if len(gf.prime_factors(q)) == 1]


def _brute_primitive(p: int, modulus: list[int]) -> bool:
    """Order of x modulo the polynomial by repeated multiplication.

    A reducible modulus has fewer than p^r - 1 units, so order p^r - 1
    also certifies irreducibility.
    """
    r = len(modulus) - 1
    cur = [0] * r
    cur[0] = 1
    for e in range(1, p**r):
        # multiply by x and reduce with the monic modulus
        top = cur[-1]
        cur = [0] + cur[:-1]
        cur = [(c - top * m) % p for c, m in zip(cur, modulus[:-1])]
        if cur == [1] + [0] * (r - 1):
            return e == p**r - 1
    return False


def test_default_gf4_modulus():
    f = gf.field_new(2, 2)
    assert f.modulus == (1, 1, 1)


def test_prime_field_gf3():
    f = gf.field_new(3, 1)
    assert f.q == 3
    assert [gf.index_of(f, e) for e in f.elements] == [0, 1, 2]


@pytest.mark.parametrize("modulus", [[2, 4, 1], [2, 1, 1], [3, 1, 1], [2, 3, 1], [1, 0, 1]])
def test_gf25_modulus_acceptance_matches_brute_force(modulus):
    ok = _brute_primitive(5, modulus)
    if ok:
        assert gf.field_new(5, 2, modulus).q == 25
    else:
        with pytest.raises(gf.FieldError):
            gf.field_new(5, 2, modulus)


def test_x2_4x_2_is_primitive_over_gf5():
    assert _brute_primitive(5, [2, 4, 1])
    gf.field_new(5, 2, [2, 4, 1])


def test_rejects_bad_inputs():
    with pytest.raises(gf.FieldError):
        gf.field_new(4, 1)
    with pytest.raises(gf.FieldError):
        gf.field_new(2, 2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2
    with pytest.raises(gf.FieldError):
        gf.field_new(3, 2, [1, 0, 1])  # irreducible but x has order 4


def test_element_from_index_examples():
    f4 = gf.field_of_order(4)
    assert gf.element_from_index(f4, 2) == gf.primitive_element(f4)
    assert gf.element_from_index(f4, 0).coeffs == (0, 0)
    f27 = gf.field_of_order(27)
    assert gf.element_from_index(f27, 14).coeffs == (2, 1, 1)
    assert gf.format_element(f27, 14, "symbolic") == "a^2+a+2"
    with pytest.raises(gf.FieldError):
        gf.element_from_index(f4, 4)


def test_arithmetic_examples():
    f4 = gf.field_of_order(4)
    a, a1 = f4.element(2), f4.element(3)
    assert gf.add(f4, a, a1) == f4.element(1)
    assert gf.mul(f4, a, a) == a1
    f5 = gf.field_of_order(5)
    assert gf.inv(f5, f5.element(2)) == f5.element(3)
    with pytest.raises(ZeroDivisionError):
        gf.inv(f5, f5.element(0))


def _brute_least_primitive_root(p: int) -> int:
    for g in range(2, p):
        if len({pow(g, e, p) for e in range(1, p)}) == p - 1:
            return g
    return 1


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_primitive_element_prime_fields(p):
    f = gf.field_of_order(p)
    assert gf.index_of(f, gf.primitive_element(f)) == _brute_least_primitive_root(p)


def test_primitive_element_examples():
    assert gf.index_of(gf.field_of_order(4), gf.primitive_element(gf.field_of_order(4))) == 2
    assert gf.primitive_element(gf.field_of_order(5)).coeffs == (2,)
    assert gf.primitive_element(gf.field_of_order(7)).coeffs == (3,)


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    f = gf.field_of_order(q)
    A, M = f.add_table, f.mul_table
    i = np.arange(q)
    assert (A[A[i][:, :, None], i[None, None, :]] == A[i[:, None, None], A[i][None, :, :]]).all()
    assert (M[M[i][:, :, None], i[None, None, :]] == M[i[:, None, None], M[i][None, :, :]]).all()
    # a (b + c) = ab + ac
    lhs = M[i[:, None, None], A[None, :, :]]
    rhs = A[M[:, :, None], M[:, None, :]]
    assert (lhs == rhs).all()
    assert (A == A.T).all() and (M == M.T).all()
    assert (A[i, f.neg_table] == 0).all()
    assert (M[i[1:], f.inv_table[1:]] == 1).all()
    assert gf.order(f, gf.primitive_element(f)) == q - 1


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 49, 121, 125, 169])
def test_power_order_is_a_permutation(q):
    f = gf.field_of_order(q)
    assert sorted(f.power_order) == list(range(q))
    assert f.power_order[:2] == (0, 1)


@given(st.sampled_from([4, 8, 9, 25, 27, 49, 169]), st.data())
def test_index_round_trip(q, data):
    f = gf.field_of_order(q)
    i = data.draw(st.integers(0, q - 1))
    assert gf.index_of(f, gf.element_from_index(f, i)) == i
    for notation in ("index", "symbolic"):
        assert gf.index_of(f, gf.parse_element(f, gf.format_element(f, i, notation))) == i


@given(st.sampled_from([9, 25, 27, 125]), st.data())
def test_lexicographic_neighbours_share_high_digits(q, data):
    f = gf.field_of_order(q)
    i = data.draw(st.integers(0, q - 2))
    a, b = f.element(i), f.element(i + 1)
    if i % f.p != f.p - 1:
        assert a.coeffs[1:] == b.coeffs[1:]
        assert gf.sub(f, b, a) == gf.one(f)


def test_parse_reduces_high_powers():
    f = gf.field_of_order(4)
    assert gf.index_of(f, gf.parse_element(f, "a^2")) == 3
    assert gf.index_of(f, gf.parse_element(f, "a+1")) == 3
