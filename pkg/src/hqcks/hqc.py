"""Hierarchical quasi-cyclic (HQC) polynomial matrices.

A polynomial entry is a set of exponent tuples (s_0, ..., s_{K-1}) with
binary coefficient 1. Level i carries lift t_i and is printed x<i>. A term
expands to I_{t_{K-1}, s_{K-1}} (x) ... (x) I_{t_0, s_0}, the highest level
outermost, where I_{t,s} is the t x t identity shifted s places left:
entry (row, col) is 1 iff row = col + s mod t.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import codes, gf
from .binmat import BinaryMatrix
from .codes import EvalCode

Term = tuple[int, ...]


class HqcError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HqcPolyMatrix:
    lifts: tuple[int, ...]
    entries: tuple[tuple[frozenset, ...], ...]

    def __post_init__(self) -> None:
        K = len(self.lifts)
        if K == 0 or any(t < 1 for t in self.lifts):
            raise HqcError("need at least one level with positive lift")
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise HqcError("ragged polynomial matrix")
        for row in self.entries:
            for poly in row:
                for term in poly:
                    if len(term) != K:
                        raise HqcError(f"term {term} does not have {K} exponents")
                    for s, t in zip(term, self.lifts):
                        if not 0 <= s < t:
                            raise HqcError(f"exponent {s} out of range for lift {t}")

    @classmethod
    def from_lists(cls, lifts: Sequence[int], entries) -> HqcPolyMatrix:
        """Entries given as iterables of exponent tuples; repeated terms cancel."""
        rows = []
        for row in entries:
            out = []
            for poly in row:
                acc: set = set()
                for term in poly:
                    acc ^= {tuple(int(s) for s in term)}
                out.append(frozenset(acc))
            rows.append(tuple(out))
        return cls(tuple(int(t) for t in lifts), tuple(rows))

    @property
    def K(self) -> int:
        return len(self.lifts)

    @property
    def J(self) -> int:
        return len(self.entries)

    @property
    def L(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def block_size(self) -> int:
        return int(np.prod(self.lifts))

    def level_dims(self) -> list[tuple[int, int]]:
        """(J_i, L_i) for i = 1..K: matrix size after compressing i levels."""
        T = self.block_size
        out = []
        inner = 1
        for t in self.lifts:
            inner *= t
            out.append((self.J * T // inner, self.L * T // inner))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, HqcPolyMatrix):
            return NotImplemented
        return self.lifts == other.lifts and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.lifts, self.entries))


def shifted_identity(t: int, s: int) -> np.ndarray:
    """I_{t,s}: entry (row, col) = 1 iff row = col + s (mod t)."""
    return np.roll(np.eye(t, dtype=np.uint8), s, axis=0)


def kron_block(lifts: Sequence[int], term: Term) -> np.ndarray:
    out = np.ones((1, 1), dtype=np.uint8)
    for t, s in zip(reversed(lifts), reversed(term)):
        out = np.kron(out, shifted_identity(t, s))
    return out


@lru_cache(maxsize=64)
def _block_table(lifts: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    """All single-term blocks, indexed by the row hit in column 0.

    The column-0 row of a term is sum s_i * prod_{l<i} t_l, so the index
    is a mixed-radix number with level 0 least significant.
    """
    T = int(np.prod(lifts))
    terms = np.zeros((T, len(lifts)), dtype=np.int64)
    table = np.zeros((T, T, T), dtype=np.uint8)
    for idx in range(T):
        rem, term = idx, []
        for t in lifts:
            term.append(rem % t)
            rem //= t
        terms[idx] = term
        table[idx] = kron_block(lifts, tuple(term))
    return table, terms


def factor_block(P, p: int, r: int) -> Term:
    """Exponents (a_0..a_{r-1}) with P = I_{p,a_{r-1}} (x) ... (x) I_{p,a_0}."""
    P = P.to_dense() if isinstance(P, BinaryMatrix) else np.asarray(P, dtype=np.uint8)
    q = p**r
    if P.shape != (q, q):
        raise HqcError(f"block must be {q}x{q}, got {P.shape}")
    if not ((P.sum(axis=0) == 1).all() and (P.sum(axis=1) == 1).all()):
        raise HqcError("block is not a permutation matrix")
    table, terms = _block_table((p,) * r)
    idx = int(np.argmax(P[:, 0]))
    if not np.array_equal(P, table[idx]):
        raise HqcError("permutation is not a Kronecker product of shifted identities")
    return tuple(int(x) for x in terms[idx])


def _factor_all(blocks: np.ndarray, lifts: tuple[int, ...]) -> np.ndarray:
    """blocks (B, T, T) -> (B,) mixed-radix term index, -1 for zero blocks.

    Raises if a nonzero block is not a single-term block.
    """
    table, _ = _block_table(lifts)
    idx = np.argmax(blocks[:, :, 0], axis=1)
    zero = ~blocks.any(axis=(1, 2))
    ok = zero | (blocks == table[idx]).all(axis=(1, 2))
    if not ok.all():
        bad = int(np.flatnonzero(~ok)[0])
        raise HqcError(f"block {bad} is not a single Kronecker-shift term")
    return np.where(zero, -1, idx)


def _blocks(dense: np.ndarray, T: int) -> np.ndarray:
    R, C = dense.shape
    if R % T or C % T:
        raise HqcError(f"block size {T} does not divide {R}x{C}")
    J, L = R // T, C // T
    return dense.reshape(J, T, L, T).transpose(0, 2, 1, 3)


def factor_matrix(H: BinaryMatrix, lifts: Sequence[int]) -> HqcPolyMatrix:
    """Weight-one HQC reading of H: every block zero or a single term."""
    lifts = tuple(int(t) for t in lifts)
    T = int(np.prod(lifts))
    b = _blocks(H.to_dense(), T)
    J, L = b.shape[:2]
    idx = _factor_all(b.reshape(J * L, T, T), lifts).reshape(J, L)
    _, terms = _block_table(lifts)
    rows = []
    for j in range(J):
        rows.append(tuple(
            frozenset() if idx[j, l] < 0 else frozenset({tuple(int(s) for s in terms[idx[j, l]])})
            for l in range(L)))
    return HqcPolyMatrix(lifts, tuple(rows))


def extract_poly_matrix(H: BinaryMatrix, c: EvalCode) -> HqcPolyMatrix:
    """HQC form of H = build_hc(c): K = r, all lifts p, J = n, L = q^(k-1).

    Entry (j, l) is the monomial whose exponents are the p-ary digits of the
    value at position j of the l-th zero-constant representative, i.e.
    codeword l*q. Every block is also factored from H and must agree.
    """
    f = c.field
    p, r, q = f.p, f.r, f.q
    if not codes.has_field_partition_property(c):
        raise HqcError("code lacks the field partition property")
    if H.shape != (c.n * q, c.size):
        raise HqcError("matrix shape does not match the code")
    if c.G[0].tolist() != [1] * c.n:
        raise HqcError("first generator row must be all ones so blocks are constant shifts")
    L = c.size // q
    reps = np.stack([c.codeword(l * q) for l in range(L)], axis=1)  # n x L
    dense = H.to_dense()
    lifts = (p,) * r
    b = _blocks(dense, q)
    idx = _factor_all(b.reshape(c.n * L, q, q), lifts).reshape(c.n, L)
    if (idx != reps).any():
        raise HqcError("factored blocks disagree with the codeword values")
    _, terms = _block_table(lifts)
    rows = tuple(
        tuple(frozenset({tuple(int(s) for s in terms[v])}) for v in reps[j])
        for j in range(c.n))
    Hp = HqcPolyMatrix(lifts, rows)
    for i, (Ji, Li) in enumerate(Hp.level_dims(), start=1):
        if (Ji, Li) != (c.n * p ** (r - i), p ** (r * c.k - i)):
            raise HqcError(f"level {i} dimensions {(Ji, Li)} are off")
        # every p^i block of H must itself be a weight-one i-level term
        _factor_all(_blocks(dense, p**i).reshape(-1, p**i, p**i), (p,) * i)
    return Hp


def expand_poly_matrix(Hp: HqcPolyMatrix) -> BinaryMatrix:
    T = Hp.block_size
    out = np.zeros((Hp.J * T, Hp.L * T), dtype=np.uint8)
    for j, row in enumerate(Hp.entries):
        for l, poly in enumerate(row):
            blk = out[j * T:(j + 1) * T, l * T:(l + 1) * T]
            for term in poly:
                blk ^= kron_block(Hp.lifts, term)
    return BinaryMatrix.from_dense(out)


def weight_matrix(Hp: HqcPolyMatrix) -> tuple[np.ndarray, int]:
    """Term counts per entry and the type T (largest count)."""
    W = np.array([[len(p) for p in row] for row in Hp.entries], dtype=np.int64)
    return W, int(W.max()) if W.size else 0


def is_block_circulant(H: BinaryMatrix, t: int) -> bool:
    """True iff every t x t block is circulant (row i+1 = row i shifted right)."""
    b = _blocks(H.to_dense(), t)  # J, L, t, t
    first = b[:, :, 0, :]
    for i in range(1, t):
        if not np.array_equal(b[:, :, i, :], np.roll(first, i, axis=-1)):
            return False
    return True


# -- text format ----------------------------------------------------------------

_FACTOR = re.compile(r"x(\d*)(?:\^(\d+))?")


def format_poly(poly: Iterable[Term], var_base: int = 0) -> str:
    terms = sorted(poly, key=lambda e: tuple(reversed(e)))
    if not terms:
        return "0"
    out = []
    for term in terms:
        parts = []
        for i in reversed(range(len(term))):
            s = term[i]
            if s:
                parts.append(f"x{i + var_base}" + (f"^{s}" if s > 1 else ""))
        out.append("".join(parts) or "1")
    return "+".join(out)


def parse_poly(text: str, K: int, var_base: int = 0) -> frozenset:
    text = text.replace(" ", "").replace("*", "")
    if text in ("", "0"):
        return frozenset()
    acc: set = set()
    for tok in text.split("+"):
        exps = [0] * K
        if tok != "1":
            pos = 0
            while pos < len(tok):
                m = _FACTOR.match(tok, pos)
                if not m or m.end() == pos:
                    raise HqcError(f"cannot parse term {tok!r}")
                lvl = (int(m.group(1)) if m.group(1) else var_base) - var_base
                if not 0 <= lvl < K:
                    raise HqcError(f"variable in {tok!r} is outside the {K} levels")
                exps[lvl] += int(m.group(2) or 1)
                pos = m.end()
        acc ^= {tuple(exps)}
    return frozenset(acc)


def format_poly_matrix(Hp: HqcPolyMatrix, var_base: int = 0) -> str:
    head = " ".join(str(x) for x in (Hp.K, *Hp.lifts, Hp.J, Hp.L))
    lines = [head] + [",".join(format_poly(p, var_base) for p in row) for row in Hp.entries]
    return "\n".join(lines) + "\n"


def parse_poly_matrix(text: str, var_base: int = 0) -> HqcPolyMatrix:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = [int(x) for x in lines[0].split()]
    K = head[0]
    if len(head) != K + 3:
        raise HqcError("header must be 'K t1..tK J L'")
    lifts, J, L = tuple(head[1:1 + K]), head[1 + K], head[2 + K]
    body = lines[1:]
    if len(body) != J:
        raise HqcError(f"expected {J} rows, found {len(body)}")
    rows = []
    for ln in body:
        cells = ln.split(",")
        if len(cells) != L:
            raise HqcError(f"expected {L} entries in row {ln!r}")
        rows.append(tuple(parse_poly(cell, K, var_base) for cell in cells))
    return HqcPolyMatrix(lifts, tuple(rows))


def write_poly_matrix(Hp: HqcPolyMatrix, path: str | Path, var_base: int = 0) -> None:
    Path(path).write_text(format_poly_matrix(Hp, var_base))


def read_poly_matrix(path: str | Path, var_base: int = 0) -> HqcPolyMatrix:
    return parse_poly_matrix(Path(path).read_text(), var_base)


def monomial_of(f: gf.FieldSpec, value: int) -> Term:
    """p-ary digits of an element index, lowest level first."""
    return tuple((value // f.p**i) % f.p for i in range(f.r))
