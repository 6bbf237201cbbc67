"""Binary matrices built from q-ary codes.

expand_ks replaces each symbol by a weight-one column of length q; with
codewords as columns this gives H_C. Internally unit positions are
0-based: the symbol with index i lights row i of its q-row block.
construction2_build is the (q-1)-fold matrix dispersion of a class
representative matrix of a two-dimensional MDS code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import codes
from .binmat import BinaryMatrix
from .codes import EvalCode, QaryMatrix


class ConstructionError(ValueError):
    pass


def expand_ks(M: QaryMatrix, symbol_order: Sequence[int] | None = None) -> BinaryMatrix:
    """nq x N binary matrix; symbol s becomes e_{pos(s)} within its block.

    pos is the identity unless symbol_order (a list of element indices in
    the desired row order) is given.
    """
    q = M.field.q
    n, N = M.entries.shape
    pos = np.arange(q)
    if symbol_order is not None:
        if sorted(symbol_order) != list(range(q)):
            raise ConstructionError("symbol_order must list every element once")
        pos = np.empty(q, dtype=np.int64)
        pos[np.asarray(symbol_order)] = np.arange(q)
    dense = np.zeros((n * q, N), dtype=np.uint8)
    rows = (np.arange(n)[:, None] * q + pos[M.entries]).ravel()
    cols = np.tile(np.arange(N), n)
    dense[rows, cols] = 1
    return BinaryMatrix.from_dense(dense)


def build_hc(c: EvalCode, budget: int = codes.DEFAULT_BUDGET) -> BinaryMatrix:
    return expand_ks(codes.enumerate_codewords(c, budget))


def disjunct_value(n: int, d: int) -> int:
    """floor((n-1)/(n-d)) for an [n, k, d] code."""
    if d >= n:
        raise ConstructionError("disjunct value is unbounded when d >= n")
    return (n - 1) // (n - d)


@dataclass
class DisjunctReport:
    D: int
    verified_to: int
    budget_exhausted: bool = False
    # (designated column, covering columns) when a violation was found
    witness: tuple[int, tuple[int, ...]] | None = None
    checked: int = 0

    @property
    def verified(self) -> bool:
        return self.verified_to >= self.D and not self.budget_exhausted


def verify_disjunct(M: BinaryMatrix, D: int, budget: int = 10**7) -> DisjunctReport:
    """Exhaustively confirm M is D-disjunct.

    A violation is a designated column whose support is covered by the union
    of at most D other columns. Covers are searched by size 1, 2, ..., D, so
    verified_to is the largest size with no cover found. Columns are reduced
    to their distinct intersection patterns with the designated column, which
    does not change whether a cover of a given size exists.
    """
    if D < 1:
        raise ConstructionError("D must be >= 1")
    cols = M.col_ints()
    N = len(cols)
    report = DisjunctReport(D=D, verified_to=0)
    patterns = []
    for j, c in enumerate(cols):
        pats = {}
        for i, o in enumerate(cols):
            if i != j and o & c and (o & c) not in pats:
                pats[o & c] = i
        patterns.append(sorted(pats.items(), key=lambda kv: kv[1]))
    for size in range(1, min(D, N - 1) + 1):
        for j, c in enumerate(cols):
            for combo in itertools.combinations(patterns[j], size):
                report.checked += 1
                if report.checked > budget:
                    report.budget_exhausted = True
                    return report
                cover = 0
                for pat, _ in combo:
                    cover |= pat
                if cover == c:
                    report.witness = (j, tuple(i for _, i in combo))
                    return report
        report.verified_to = size
    report.verified_to = D
    return report


# -- Construction 2 ------------------------------------------------------------

@dataclass
class Construction2:
    """Class representatives and the dispersed matrices of Construction 2."""

    code: EvalCode
    rep_messages: list[tuple[int, int]]
    W: np.ndarray  # (q+1) x n representative codewords
    H_disp: BinaryMatrix
    H_II: BinaryMatrix
    classes: list[list[int]] = field(default_factory=list)


def _class_messages(c: EvalCode) -> list[tuple[int, int]]:
    """Representative messages, scaled so the last nonzero symbol is 1.

    For a Reed-Solomon code, message (-g, 1) is the polynomial x - g and
    (1, 0) is the constant 1.
    """
    f = c.field
    neg = f.neg_table
    W_zero: dict[int, tuple[int, int]] = {}
    rest = []
    for g in f.power_order:
        msg = (int(neg[g]), 1)
        word = c.encode(msg)
        zeros = np.flatnonzero(word == 0)
        if len(zeros):
            W_zero[int(zeros[0])] = msg
        else:
            rest.append(msg)
    const = (1, 0)
    zeros = np.flatnonzero(c.encode(const) == 0)
    if len(zeros):
        W_zero[int(zeros[0])] = const
    else:
        rest.append(const)
    return [W_zero[i] for i in range(c.n)] + rest


def _check_c2_input(c: EvalCode) -> None:
    if c.k != 2:
        raise ConstructionError("Construction 2 needs a dimension-2 code")
    if c.n > c.q:
        raise ConstructionError("n = q + 1 (extended MDS) is not supported")
    if codes.min_distance_qary(c) != c.n - 1:
        raise ConstructionError("input code is not MDS")


def construction2(c: EvalCode) -> Construction2:
    _check_c2_input(c)
    f, q, n = c.field, c.q, c.n
    msgs = _class_messages(c)
    if len(msgs) != q + 1:
        raise ConstructionError("scalar classes do not number q + 1")
    W = np.array([c.encode(m) for m in msgs], dtype=np.int64)
    log = f.log_table
    t = q - 1
    disp = np.zeros(((q + 1) * t, n * t), dtype=np.uint8)
    shift = np.arange(t)
    for i in range(q + 1):
        for j in range(n):
            v = W[i, j]
            if v == 0:
                continue
            e = log[v]
            disp[i * t + shift, j * t + (e + shift) % t] = 1
    classes = []
    alpha_pows = f.power_order[1:]
    for m in msgs:
        word_idx = []
        for lam in alpha_pows:
            scaled = [int(f.mul_table[lam, s]) for s in m]
            word_idx.append(c.codeword_index(scaled))
        classes.append(word_idx)
    H_disp = BinaryMatrix.from_dense(disp)
    return Construction2(c, msgs, W, H_disp, H_disp.transpose(), classes)


def construction2_build(c: EvalCode) -> BinaryMatrix:
    """H_II, an n(q-1) x (q^2-1) matrix."""
    return construction2(c).H_II
