"""Monomial transforms of q-ary codes and their effect on H_C, plus the
column substitution that carries Construction 2's H_II onto H_C."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import analysis, codes, construct, gf, hqc
from .binmat import BinaryMatrix
from .codes import EvalCode, QaryMatrix


ENUM_MAX_K = 20  # binary weight enumerators are compared up to this dimension


class EquivalenceError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialTransform:
    """c -> c' with c'[perm[i]] = diag[i] * c[i]; diag holds element indices."""

    perm: tuple[int, ...]
    diag: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(len(self.perm))):
            raise EquivalenceError("perm is not a permutation of range(n)")
        if len(self.diag) != len(self.perm):
            raise EquivalenceError("perm and diag lengths differ")
        if any(d == 0 for d in self.diag):
            raise EquivalenceError("diagonal entries must be nonzero")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def is_permutation(self) -> bool:
        return all(d == 1 for d in self.diag)

    @classmethod
    def identity(cls, n: int) -> MonomialTransform:
        return cls(tuple(range(n)), (1,) * n)


def random_monomial(f: gf.FieldSpec, n: int, rng: np.random.Generator,
                    permutation_only: bool = False) -> MonomialTransform:
    perm = tuple(int(x) for x in rng.permutation(n))
    diag = (1,) * n if permutation_only else tuple(int(x) for x in rng.integers(1, f.q, size=n))
    return MonomialTransform(perm, diag)


def apply_monomial(c: EvalCode, m: MonomialTransform) -> EvalCode:
    """Generic code generated by G D P."""
    if m.n != c.n:
        raise EquivalenceError(f"transform has length {m.n}, code has length {c.n}")
    f = c.field
    G = np.zeros_like(np.asarray(c.G))
    for i in range(c.n):
        G[:, m.perm[i]] = f.mul_table[m.diag[i], c.G[:, i]]
    return codes.generic_code(f, G.tolist())


def transformed_hc(H: BinaryMatrix, m: MonomialTransform, f: gf.FieldSpec) -> BinaryMatrix:
    """Rows of H_C moved as the transform dictates.

    Block i goes to block perm[i] and row v inside it to row diag[i] * v;
    columns keep their message order, so this equals build_hc of the
    transformed code.
    """
    q = f.q
    dense = H.to_dense()
    out = np.zeros_like(dense)
    for i in range(m.n):
        rows = f.mul_table[m.diag[i], np.arange(q)]
        out[m.perm[i] * q + rows] = dense[i * q:(i + 1) * q]
    return BinaryMatrix.from_dense(out)


@dataclass
class EquivalenceReport:
    params1: analysis.CodeParams
    params2: analysis.CodeParams
    enum1: list[int] | None
    enum2: list[int] | None
    nullspaces_equal: bool

    @property
    def params_equal(self) -> bool:
        return self.params1.triple() == self.params2.triple()

    @property
    def enumerators_equal(self) -> bool | None:
        if self.enum1 is None or self.enum2 is None:
            return None
        return self.enum1 == self.enum2


def _rowspace(H: BinaryMatrix) -> np.ndarray:
    return analysis.rref_gf2(H.to_dense())[0]


def binary_params_under_equivalence(c1: EvalCode, c2: EvalCode, expect: str | None = None,
                                    budget: int | None = None, workers: int = 1) -> EquivalenceReport:
    """Compare the binary codes of two q-ary codes of equal [n, k]_q.

    expect="monomial" requires equal parameters and (when enumerable) equal
    binary weight enumerators; expect="permutation" also requires identical
    nullspaces. Violations raise EquivalenceError.
    """
    if (c1.n, c1.k, c1.q) != (c2.n, c2.k, c2.q):
        raise EquivalenceError("codes do not share [n, k]_q")
    H1, H2 = construct.build_hc(c1), construct.build_hc(c2)
    p1 = analysis.code_params(H1, budget, workers=workers)
    p2 = analysis.code_params(H2, budget, workers=workers)
    e1 = e2 = None
    if max(p1.k_tilde, p2.k_tilde) <= ENUM_MAX_K:
        e1 = analysis.weight_enumerator_gf2(H1, workers)
        e2 = analysis.weight_enumerator_gf2(H2, workers)
    same_space = H1.shape == H2.shape and np.array_equal(_rowspace(H1), _rowspace(H2))
    rep = EquivalenceReport(p1, p2, e1, e2, same_space)
    if expect in ("monomial", "permutation"):
        if not rep.params_equal:
            raise EquivalenceError(f"parameters differ: {p1.triple()} vs {p2.triple()}")
        if rep.enumerators_equal is False:
            raise EquivalenceError("binary weight enumerators differ")
    if expect == "permutation" and not same_space:
        raise EquivalenceError("nullspaces differ")
    return rep


# -- Construction 2 correspondence ----------------------------------------------

@dataclass
class CorrespondenceReport:
    H_II: BinaryMatrix
    transformed: BinaryMatrix
    reference: BinaryMatrix
    bit_exact: bool
    params_transformed: analysis.CodeParams
    params_hc: analysis.CodeParams
    hii_circulant_q_minus_1: bool
    hii_circulant_p: bool
    hc_circulant_p: bool

    @property
    def params_equal(self) -> bool:
        return self.params_transformed.triple() == self.params_hc.triple()


def substitute_columns(H_II: BinaryMatrix, n: int, q: int) -> BinaryMatrix:
    """Per (q-1)-row block: zero -> e_1, e_i -> e_{i+1}; then a column of
    stacked e_1 for the zero polynomial. Result is nq x q^2."""
    t = q - 1
    dense = H_II.to_dense()
    N = dense.shape[1]
    out = np.zeros((n * q, N + 1), dtype=np.uint8)
    for j in range(n):
        seg = dense[j * t:(j + 1) * t]
        zero = ~seg.any(axis=0)
        out[j * q, :N] = zero
        out[j * q + 1:(j + 1) * q, :N] = seg
        out[j * q, N] = 1
    return BinaryMatrix.from_dense(out)


def proof_order_hc(c2: construct.Construction2) -> BinaryMatrix:
    """H_C with rows in power ordering and columns as lambda * w_i, then 0."""
    c = c2.code
    f = c.field
    order = [idx for cls in c2.classes for idx in cls] + [0]
    words = np.stack([c.codeword(i) for i in order], axis=1)
    return construct.expand_ks(QaryMatrix(f, words), symbol_order=list(f.power_order))


def _circulant(H: BinaryMatrix, t: int) -> bool:
    try:
        return hqc.is_block_circulant(H, t)
    except hqc.HqcError:
        return False


def correspondence_hii_to_hc(c: EvalCode, budget: int | None = None,
                             distance: bool = True) -> CorrespondenceReport:
    if c.k != 2 or c.n > c.q:
        raise EquivalenceError("needs a dimension-2 code with n <= q")
    c2 = construct.construction2(c)
    f = c.field
    T = substitute_columns(c2.H_II, c.n, f.q)
    ref = proof_order_hc(c2)
    Hc = construct.build_hc(c)
    pt = analysis.code_params(T, budget, distance=distance)
    ph = analysis.code_params(Hc, budget, distance=distance)
    return CorrespondenceReport(
        c2.H_II, T, ref, T == ref, pt, ph,
        _circulant(c2.H_II, f.q - 1), _circulant(c2.H_II, f.p), _circulant(Hc, f.p))


# -- transform text format -------------------------------------------------------------

def format_transform(m: MonomialTransform) -> str:
    return " ".join(map(str, m.perm)) + "\n" + " ".join(map(str, m.diag)) + "\n"


def parse_transform(text: str) -> MonomialTransform:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 2:
        raise EquivalenceError("transform text needs exactly two lines")
    return MonomialTransform(tuple(int(x) for x in lines[0].split()),
                             tuple(int(x) for x in lines[1].split()))


def write_transform(m: MonomialTransform, path: str | Path) -> None:
    Path(path).write_text(format_transform(m))


def read_transform(path: str | Path) -> MonomialTransform:
    return parse_transform(Path(path).read_text())
