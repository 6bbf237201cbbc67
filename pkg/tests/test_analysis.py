from __future__ import annotations

import itertools
import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hqcks import analysis, codes, construct, gf
from hqcks.binmat import BinaryMatrix

STRATEGIES = ("oracle", "column-search", "information-set")


def _rs_hc(q, n, k=2, points=None):
    f = gf.field_of_order(q)
    pts = points if points is not None else (range(q) if n == q else f.power_order[1:n + 1])
    c = codes.rs_code(f, pts, k)
    return c, construct.build_hc(c)


def _rank_oracle(dense: np.ndarray) -> int:
    """Plain row reduction over GF(2) on Python lists."""
    rows = [int("".join(map(str, r)), 2) for r in dense.astype(int)]
    rank = 0
    while rows:
        piv = max(rows)
        rows.remove(piv)
        if piv == 0:
            continue
        rank += 1
        top = piv.bit_length() - 1
        rows = [r ^ piv if (r >> top) & 1 else r for r in rows]
    return rank


def _min_weight_by_columns(H: BinaryMatrix, w_max: int) -> float:
    """Smallest set of columns summing to zero, by direct enumeration."""
    cols = H.col_ints()
    for w in range(1, w_max + 1):
        for combo in itertools.combinations(range(len(cols)), w):
            acc = 0
            for j in combo:
                acc ^= cols[j]
            if acc == 0:
                return w
    return math.inf


def _tanner_girth(H: BinaryMatrix) -> float:
    g = nx.Graph()
    rows, cols = np.nonzero(H.to_dense())
    g.add_edges_from((("r", int(i)), ("c", int(j))) for i, j in zip(rows, cols))
    return nx.girth(g)


dense_st = st.integers(2, 10).flatmap(lambda m: st.integers(3, 14).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=80, deadline=None)
@given(dense_st)
def test_rank_and_nullspace(rows):
    A = np.array(rows, dtype=np.uint8)
    H = BinaryMatrix.from_dense(A)
    r = analysis.rank_gf2(H)
    assert r == _rank_oracle(A)
    assert r <= min(A.shape)
    N = analysis.nullspace_gf2(H)
    assert N.shape == (A.shape[1] - r, A.shape[1])
    assert not ((A.astype(int) @ N.T.astype(int)) % 2).any()
    assert _rank_oracle(N) == N.shape[0]


@settings(max_examples=60, deadline=None)
@given(dense_st)
def test_strategies_agree_on_random_matrices(rows):
    H = BinaryMatrix.from_dense(np.array(rows, dtype=np.uint8))
    expected = _min_weight_by_columns(H, H.cols)
    for m in STRATEGIES:
        res = analysis.min_distance_gf2(H, m)
        assert res.certified and res.d == expected, m
        if res.d != math.inf:
            x = np.zeros(H.cols, dtype=np.int64)
            x[list(res.support)] = 1
            assert len(res.support) == res.d and not H.mul_vec(x).any()


@settings(max_examples=30, deadline=None)
@given(dense_st, st.integers(2, 4))
def test_worker_count_does_not_change_results(rows, workers):
    H = BinaryMatrix.from_dense(np.array(rows, dtype=np.uint8))
    for m in STRATEGIES:
        a = analysis.min_distance_gf2(H, m, workers=1)
        b = analysis.min_distance_gf2(H, m, workers=workers)
        assert (a.d_lo, a.d_hi, a.support) == (b.d_lo, b.d_hi, b.support)


@pytest.mark.parametrize("q,n", [(3, 3), (3, 2), (4, 4), (4, 3), (5, 3), (5, 2), (7, 2)])
def test_table_distances_against_column_enumeration(q, n):
    _, H = _rs_hc(q, n)
    p = analysis.code_params(H)
    assert p.certified
    assert _min_weight_by_columns(H, int(p.d_tilde)) == p.d_tilde


@pytest.mark.parametrize("mode", ["mitm", "systematic", "auto"])
def test_column_search_modes(mode):
    _, H = _rs_hc(5, 4)
    res = analysis.min_distance_column_search(H, mode=mode)
    assert res.certified and res.d == 8


def test_weight_enumerator_against_brute_force():
    _, H = _rs_hc(4, 3)
    hist = analysis.weight_enumerator_gf2(H)
    dense = H.to_dense().astype(int)
    brute = [0] * (H.cols + 1)
    N = analysis.nullspace_gf2(H).astype(int)
    for bits in itertools.product((0, 1), repeat=N.shape[0]):
        w = (np.array(bits) @ N) % 2
        assert not ((dense @ w) % 2).any()
        brute[int(w.sum())] += 1
    assert hist == brute
    assert hist[:4] == [1, 0, 0, 0] and hist[4] > 0


def test_infoset_small_budget_gives_sound_interval():
    _, H = _rs_hc(8, 8)
    res = analysis.min_distance_gf2(H, "information-set", budget=1)
    assert res.d_lo <= 10 <= res.d_hi
    p = analysis.code_params(H, budget=1, method="information-set")
    assert p.d_tilde is None or p.certified


@pytest.mark.parametrize("q,n", [(3, 3), (4, 4), (4, 3), (5, 5), (5, 3), (7, 5), (8, 7), (9, 6)])
def test_girth_against_networkx(q, n):
    _, H = _rs_hc(q, n)
    assert analysis.girth(H) == _tanner_girth(H) == 6


def test_girth_four_for_dimension_three():
    _, H = _rs_hc(4, 4, k=3)
    assert analysis.girth(H) == _tanner_girth(H) == 4


def test_girth_of_forest_is_infinite():
    H = BinaryMatrix.from_dense(np.eye(3, dtype=np.uint8))
    assert analysis.girth(H) == math.inf


def test_regularity_and_density():
    _, H = _rs_hc(5, 4)
    assert analysis.regularity(H) == ({4}, {5})
    assert analysis.density(H) == pytest.approx(1 / 5)


def _bounds(q, n, k=2, points=None):
    c, H = _rs_hc(q, n, k, points)
    p = analysis.code_params(H)
    return {b.name: b for b in analysis.check_bounds(c, p, H)}, p


def test_bounds_hold_for_sound_checks():
    for q, n in [(3, 3), (4, 3), (5, 4), (7, 6), (9, 8)]:
        b, _ = _bounds(q, n)
        for name in ("dimension", "disjunct", "block-permutation"):
            if name in b:
                assert b[name].holds, (q, n, name)


def test_literal_even_gamma_bound_fails_on_small_rows():
    # gamma = p^(r-1) n = 8 for [4,2]_4, yet the distance is 6
    b, p = _bounds(4, 4)
    assert p.d_tilde == 6
    assert b["cor-literal"].predicted == 10 and not b["cor-literal"].holds


@pytest.mark.parametrize("q", [4, 8, 16])
def test_even_char_weight_q_word(q):
    f = gf.field_of_order(q)
    c = codes.rs_code(f, f.power_order[1:q], 2)
    H = construct.build_hc(c)
    cols = analysis.even_char_codeword(c, H)
    assert len(cols) == q
    x = np.zeros(H.cols, dtype=np.int64)
    x[cols] = 1
    assert not H.mul_vec(x).any()


@pytest.mark.parametrize("q", [4, 8])
def test_even_char_exact_distance(q):
    b, p = _bounds(q, q - 1)
    assert p.d_tilde == q
    assert b["even-char-exact"].holds and b["even-char-dimension"].holds


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_trivial_rows(q):
    b, p = _bounds(q, 2)
    assert p.triple() == (q * q, q * q - 2 * q + 1, 4)
    assert b["trivial-dimension"].holds and b["trivial-distance"].holds


@pytest.mark.parametrize("q", [3, 4, 5])
def test_length_two_dimension_one_gives_zero_code(q):
    c = codes.rs_code(gf.field_of_order(q), range(2), 1)
    p = analysis.code_params(construct.build_hc(c))
    assert p.k_tilde == 0 and p.d_tilde == math.inf


def test_rm_dimension_and_small_distance_witness():
    c = codes.rm_code(gf.field_of_order(4), 2, 2)
    H = construct.build_hc(c)
    p = analysis.code_params(H, distance=False)
    assert H.shape == (64, 4096)
    assert p.k_tilde == 4096 - 29
    # 0, X1^2 + X1, X2^2 + X2 and their sum
    cols = [0, 1040, 68, 1108]
    x = np.zeros(H.cols, dtype=np.int64)
    x[cols] = 1
    assert not H.mul_vec(x).any()
    # every column has one 1 per q-row block, so dependent sets have even size
    assert set(H.col_weights().tolist()) == {16}


def test_reports_serialize():
    c, H = _rs_hc(4, 3)
    p = analysis.code_params(H)
    rep = analysis.report_dict(p, analysis.check_bounds(c, p, H))
    assert (rep["n"], rep["k"], rep["d"], rep["certified"]) == (16, 8, 4, True)
    assert analysis.report_text(p).startswith("params [16, 8, 4]")
    assert '"d": 4' in analysis.report_json(p)
    z = analysis.code_params(construct.build_hc(codes.rs_code(gf.field_of_order(3), range(2), 1)))
    assert analysis.report_dict(z)["d"] == "inf"
