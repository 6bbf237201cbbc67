from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hqcks import binmat
from hqcks.binmat import BinaryMatrix

dense_st = st.integers(1, 12).flatmap(lambda m: st.integers(1, 70).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=60, deadline=None)
@given(dense_st)
def test_text_formats_round_trip(rows):
    A = np.array(rows, dtype=np.uint8)
    H = BinaryMatrix.from_dense(A)
    assert (H.to_dense() == A).all()
    assert binmat.read_dense(binmat.write_dense(H)) == H
    assert binmat.read_alist(binmat.write_alist(H)) == H
    assert binmat.write_alist(binmat.read_alist(binmat.write_alist(H))) == binmat.write_alist(H)
    assert H.transpose().transpose() == H
    assert (H.transpose().to_dense() == A.T).all()


@settings(max_examples=40, deadline=None)
@given(dense_st, st.data())
def test_weights_and_products(rows, data):
    A = np.array(rows, dtype=np.uint8)
    H = BinaryMatrix.from_dense(A)
    assert H.row_weights().tolist() == A.sum(axis=1).tolist()
    assert H.col_weights().tolist() == A.sum(axis=0).tolist()
    assert H.count_ones() == int(A.sum())
    x = np.array(data.draw(st.lists(st.integers(0, 1), min_size=A.shape[1], max_size=A.shape[1])))
    assert (H.mul_vec(x) == (A.astype(int) @ x) % 2).all()
    for j, c in enumerate(H.col_ints()):
        assert c == sum(int(A[i, j]) << i for i in range(A.shape[0]))


def test_identity_alist():
    text = binmat.write_alist(BinaryMatrix.from_dense(np.eye(4, dtype=np.uint8)))
    assert text.splitlines() == ["4 4", "1 1", "1 1 1 1", "1 1 1 1",
                                 "1", "2", "3", "4", "1", "2", "3", "4"]


def test_alist_zero_padding():
    A = np.array([[1, 1, 0], [0, 1, 0]], dtype=np.uint8)
    lines = binmat.write_alist(BinaryMatrix.from_dense(A)).splitlines()
    assert lines[:4] == ["3 2", "2 2", "1 2 0", "2 1"]
    assert lines[4:7] == ["1 0", "1 2", "0 0"]
    assert lines[7:] == ["1 2", "2 0"]


def test_malformed_inputs():
    with pytest.raises(ValueError):
        binmat.read_dense("2 3\n101\n10\n")
    bad = "2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n"
    with pytest.raises(ValueError):
        binmat.read_alist(bad)
