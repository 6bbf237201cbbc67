from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hqcks import codes, gf

G1 = [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 0, 2]]
G2 = [[1, 0, 0, 2, 2], [0, 1, 0, 2, 2], [0, 0, 1, 2, 2]]
G3 = [[1, 0, 0, 1, 1], [0, 1, 0, 2, 0], [0, 0, 1, 0, 2]]

F3, F4 = gf.field_of_order(3), gf.field_of_order(4)


def test_rs_small_example_size_and_zero_word():
    c = codes.rs_code(F4, [0, 1, "a"], 2)
    assert c.size == 16
    assert c.codeword(0).tolist() == [0, 0, 0]


def test_rs_codeword_order_constant_fastest():
    c = codes.rs_code(F4, [0, 1, "a"], 2)
    M = codes.enumerate_codewords(c).entries
    assert M.shape == (3, 16)
    # 0, 1, a, a+1 constants, then x, x+1, ...
    assert [M[:, i].tolist() for i in range(4)] == [[v] * 3 for v in range(4)]
    assert M[:, 4].tolist() == [0, 1, 2]
    assert M[:, 5].tolist() == [1, 0, 3]


def test_rs_identity_evaluation_gf3():
    c = codes.rs_code(F3, [0, 1, 2], 2)
    assert c.encode([0, 1]).tolist() == [0, 1, 2]


def test_rs_errors():
    with pytest.raises(codes.CodeError):
        codes.rs_code(F4, [0, 1, 1], 2)
    with pytest.raises(codes.CodeError):
        codes.rs_code(F4, [0, 1], 3)


def _count_monomials(q, m, rho):
    return sum(1 for e in itertools.product(range(q), repeat=m) if sum(e) <= rho)


@pytest.mark.parametrize("q,m,rho", [(4, 2, 2), (3, 2, 3), (2, 3, 2), (5, 2, 4), (3, 3, 1)])
def test_rm_dimension_counts_monomials(q, m, rho):
    c = codes.rm_code(gf.field_of_order(q), m, rho)
    assert (c.n, c.k) == (q**m, _count_monomials(q, m, rho))


def test_rm_4_2_2_parameters():
    c = codes.rm_code(F4, 2, 2)
    assert (c.n, c.k, codes.min_distance_qary(c)) == (16, 6, 8)
    assert codes.enumerate_codewords(c).entries.shape == (16, 4096)


def test_rm_full_space_and_constants():
    for q in (2, 3, 4, 5):
        c = codes.rm_code(gf.field_of_order(q), 1, q - 1)
        assert (c.n, c.k) == (q, q)
    c = codes.rm_code(F3, 2, 0)
    assert c.size == 3 and c.n == 9
    assert {tuple(w) for w in codes.codeword_array(c)} == {(v,) * 9 for v in range(3)}


def test_rm_monomial_order_is_graded():
    mons = codes.rm_monomials(4, 2, 2)
    assert mons[0] == (0, 0)
    assert [sum(e) for e in mons] == sorted(sum(e) for e in mons)
    with pytest.raises(codes.CodeError):
        codes.rm_code(F4, 2, 7)


def test_rm_points_last_coordinate_slowest():
    pts = codes.rm_points(3, 2)
    assert pts[:4] == [(0, 0), (1, 0), (2, 0), (0, 1)]


def test_generic_codes():
    c = codes.generic_code(F3, G1)
    assert (c.n, c.k, codes.min_distance_qary(c)) == (5, 3, 2)
    eye = codes.generic_code(F3, np.eye(3, dtype=int).tolist())
    assert {tuple(w) for w in codes.codeword_array(eye)} == set(itertools.product(range(3), repeat=3))
    rep = codes.generic_code(F3, [[1, 1]])
    assert [tuple(w) for w in codes.codeword_array(rep)] == [(0, 0), (1, 1), (2, 2)]
    with pytest.raises(codes.CodeError):
        codes.generic_code(F3, [[1, 1], [2, 2]])


def test_full_space_two_by_nine():
    c = codes.generic_code(F3, [[1, 0], [0, 1]])
    M = codes.enumerate_codewords(c).entries
    assert M.shape == (2, 9)
    assert {tuple(w) for w in M.T} == set(itertools.product(range(3), repeat=2))


def test_field_partition_property():
    assert codes.has_field_partition_property(codes.rs_code(F4, [0, 1, 2], 2))
    assert codes.has_field_partition_property(codes.rm_code(F4, 2, 2))
    assert not codes.has_field_partition_property(codes.generic_code(F3, [[0, 1]]))
    assert not codes.codeword_set_has_fpp(F3, [(0, 0), (0, 1), (0, 2)])
    assert codes.codeword_set_has_fpp(F3, [(0, 1), (1, 2), (2, 0)])


def test_min_distance_examples():
    assert codes.min_distance_qary(codes.rs_code(F4, [0, 1, 2], 2)) == 2
    assert codes.min_distance_qary(codes.generic_code(F3, G1)) == 2
    assert codes.min_distance_qary(codes.generic_code(F3, G2)) == 2


def _brute_enumerator(f, G):
    k, n = len(G), len(G[0])
    hist = [0] * (n + 1)
    for msg in itertools.product(range(f.q), repeat=k):
        w = [sum(msg[t] * G[t][j] for t in range(k)) % f.p for j in range(n)]
        hist[sum(1 for x in w if x)] += 1
    return hist


@pytest.mark.parametrize("G,expected", [
    (G1, [1, 0, 2, 14, 6, 4]), (G2, [1, 0, 6, 8, 6, 6]), (G3, [1, 0, 4, 8, 12, 2])])
def test_weight_enumerators(G, expected):
    c = codes.generic_code(F3, G)
    assert codes.qary_weight_enumerator(c) == expected
    assert _brute_enumerator(F3, G) == expected


def test_budget_exceeded():
    c = codes.rs_code(gf.field_of_order(13), range(12), 6)
    with pytest.raises(codes.BudgetExceeded):
        codes.enumerate_codewords(c)


def test_generator_round_trip(tmp_path):
    c = codes.generic_code(F3, G3)
    text = codes.write_generator(c, tmp_path / "g.txt")
    assert text.splitlines()[0] == "3 5 3"
    back = codes.read_generator(tmp_path / "g.txt")
    assert (back.G == c.G).all()


rs_params = st.sampled_from([3, 4, 5, 7, 8, 9]).flatmap(
    lambda q: st.tuples(st.just(q), st.integers(1, q), st.integers(1, 3)).filter(
        lambda t: t[2] <= t[1] and q ** t[2] <= 2**12))


@settings(max_examples=40, deadline=None)
@given(rs_params, st.randoms(use_true_random=False))
def test_rs_is_mds_and_linear(params, rnd):
    q, n, k = params
    f = gf.field_of_order(q)
    pts = rnd.sample(range(q), n)
    c = codes.rs_code(f, pts, k)
    assert codes.min_distance_qary(c) == n - k + 1
    hist = codes.qary_weight_enumerator(c)
    assert sum(hist) == q**k and hist[0] == 1
    assert all(h == 0 for h in hist[1:n - k + 1])
    W = codes.codeword_array(c).T
    idx = {tuple(w): i for i, w in enumerate(W.T)}
    for _ in range(20):
        a, b = rnd.randrange(c.size), rnd.randrange(c.size)
        s = f.add_table[W[:, a], W[:, b]]
        assert tuple(s) in idx


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8, 9]), st.data())
def test_constant_shift_blocks(q, data):
    f = gf.field_of_order(q)
    n = data.draw(st.integers(2, q))
    c = codes.rs_code(f, range(n), 2)
    W = codes.codeword_array(c).T
    i = data.draw(st.integers(0, q - 1))
    base = W[:, i * q]
    assert codes.contains(c, base)
    for j in range(q):
        diff = f.add_table[W[:, i * q + j], f.neg_table[base]]
        assert len(set(diff.tolist())) == 1 and diff[0] == j
