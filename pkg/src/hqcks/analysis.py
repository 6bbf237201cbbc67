"""GF(2) linear algebra, minimum distance, Tanner graph metrics and bounds.

Three minimum-distance strategies share one result type:

* ``oracle``: every codeword of the nullspace, split into two halves whose
  subset-sum tables are XORed together.
* ``column-search``: smallest set of dependent columns of H, found by
  meet-in-the-middle on column-subset syndromes for increasing weight.
* ``information-set``: Brouwer-Zimmermann enumeration over disjoint
  information sets with running lower and upper bounds.

Within a strategy the certificate is the lexicographically smallest support
of weight d among those examined, so worker count never changes results.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb

import numpy as np

from . import codes, construct, gf
from .binmat import BinaryMatrix
from .codes import BudgetExceeded, EvalCode

ORACLE_MAX_K = 26
COLUMN_SEARCH_BUDGET = 10**9
MITM_MAX_TABLE = 1 << 25  # subset keys held at once
INFOSET_BUDGET = 10**10
_CHUNK_ELEMS = 1 << 22  # uint64 words per vectorized block

INF = math.inf


# -- packing and elimination ------------------------------------------------------

def pack_words(dense: np.ndarray) -> np.ndarray:
    """(m, n) 0/1 -> (m, ceil(n/64)) uint64, bit j of the row in word j//64."""
    dense = np.asarray(dense, dtype=np.uint8)
    m, n = dense.shape
    W = max(1, (n + 63) // 64)
    padded = np.zeros((m, W * 64), dtype=np.uint8)
    padded[:, :n] = dense
    return np.packbits(padded, axis=1, bitorder="little").view("<u8").reshape(m, W)


def unpack_words(words: np.ndarray, n: int) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype="<u8")
    as_bytes = words.view(np.uint8).reshape(words.shape[0], -1)
    return np.unpackbits(as_bytes, axis=1, count=n, bitorder="little")


def _popcount(words: np.ndarray) -> np.ndarray:
    return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)


def rank_gf2(H: BinaryMatrix) -> int:
    """Row rank by XOR elimination on rows held as Python integers."""
    basis: dict[int, int] = {}
    for row in H.row_ints():
        while row:
            top = row.bit_length() - 1
            if top not in basis:
                basis[top] = row
                break
            row ^= basis[top]
    return len(basis)


def rref_gf2(A, col_order=None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2); pivots taken in col_order."""
    A = np.array(A, dtype=np.uint8) & 1
    m, n = A.shape
    order = range(n) if col_order is None else col_order
    pivots: list[int] = []
    r = 0
    for c in order:
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if not len(nz):
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        hit = np.flatnonzero(A[:, c])
        hit = hit[hit != r]
        A[hit] ^= A[r]
        pivots.append(int(c))
        r += 1
    return A[:r], pivots


def nullspace_gf2(H: BinaryMatrix) -> np.ndarray:
    """Generator matrix (k x n, uint8) of the code with parity-check H."""
    n = H.cols
    R, piv = rref_gf2(H.to_dense())
    free = [c for c in range(n) if c not in set(piv)]
    G = np.zeros((len(free), n), dtype=np.uint8)
    for i, f in enumerate(free):
        G[i, f] = 1
        G[i, piv] = R[:, f]
    return G


# -- results ------------------------------------------------------------------------

@dataclass
class DistanceResult:
    d_lo: float
    d_hi: float
    method: str
    certified: bool
    support: tuple[int, ...] = ()
    work: int = 0

    @property
    def d(self) -> float | None:
        return self.d_lo if self.certified else None


@dataclass
class CodeParams:
    n_tilde: int
    k_tilde: int
    d_lo: float
    d_hi: float
    d_method: str
    certified: bool
    support: tuple[int, ...] = ()

    @property
    def d_tilde(self) -> float | None:
        return self.d_lo if self.certified else None

    def triple(self) -> tuple:
        return (self.n_tilde, self.k_tilde, self.d_tilde)


def _lexmin_support(words: np.ndarray, n: int) -> tuple[int, ...]:
    """Smallest sorted support among equal-weight codewords (rows of words)."""
    bits = unpack_words(words, n).astype(bool)
    keep = np.ones(len(bits), dtype=bool)
    for j in range(n):
        col = bits[:, j] & keep
        if col.any():
            keep = col
        if keep.sum() == 1:
            break
    row = bits[np.flatnonzero(keep)[0]]
    return tuple(int(x) for x in np.flatnonzero(row))


class _Best:
    """Running minimum weight with its lexicographically smallest support."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.w = INF
        self.support: tuple[int, ...] = ()

    def offer(self, w: int, words: np.ndarray) -> None:
        if not len(words) or w > self.w:
            return
        sup = _lexmin_support(words, self.n)
        if w < self.w or sup < self.support:
            self.w, self.support = w, sup


def _scan(block_words: np.ndarray, best: _Best) -> None:
    """Offer the lightest nonzero words in a (m, W) block."""
    wts = _popcount(block_words)
    wts[wts == 0] = np.iinfo(np.int64).max
    if not len(wts):
        return
    m = int(wts.min())
    if m <= best.w and m != np.iinfo(np.int64).max:
        best.offer(m, block_words[wts == m])


def _run(tasks, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [t() for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(lambda t: t(), tasks))


# -- strategy (a): full enumeration -------------------------------------------------

def _subset_table(rows: np.ndarray) -> np.ndarray:
    """XOR of every subset of rows; subset index bit i selects row i."""
    table = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for r in rows:
        table = np.concatenate([table, table ^ r])
    return table


def _enumerate_all(G: np.ndarray, workers: int, want_hist: bool):
    k, n = G.shape
    words = pack_words(G)
    h = k // 2
    A = _subset_table(words[:h])
    B = _subset_table(words[h:])
    W = words.shape[1]
    step = max(1, _CHUNK_ELEMS // (len(A) * W))
    starts = list(range(0, len(B), step))

    def task(s):
        def run():
            best = _Best(n)
            blk = B[s:s + step, None, :] ^ A[None, :, :]
            blk = blk.reshape(-1, W)
            hist = np.bincount(_popcount(blk), minlength=n + 1) if want_hist else None
            _scan(blk, best)
            return best, hist
        return run

    out = _run([task(s) for s in starts], workers)
    best = _Best(n)
    hist = np.zeros(n + 1, dtype=np.int64)
    for b, h_ in out:
        if b.w < INF:
            # re-offer through support comparison
            if b.w < best.w or (b.w == best.w and b.support < best.support):
                best.w, best.support = b.w, b.support
        if want_hist:
            hist += h_
    return best, hist


def min_distance_oracle(G: np.ndarray, workers: int = 1, max_k: int = ORACLE_MAX_K) -> DistanceResult:
    k = G.shape[0]
    if k == 0:
        return DistanceResult(INF, INF, "oracle", True)
    if k > max_k:
        raise BudgetExceeded(f"dimension {k} is above the enumeration cutoff {max_k}")
    best, _ = _enumerate_all(G, workers, want_hist=False)
    return DistanceResult(best.w, best.w, "oracle", True, best.support, 2**k)


def weight_enumerator_gf2(H: BinaryMatrix, workers: int = 1, max_k: int = ORACLE_MAX_K) -> list[int]:
    G = nullspace_gf2(H)
    k, n = G.shape
    if k > max_k:
        raise BudgetExceeded(f"dimension {k} is above the enumeration cutoff {max_k}")
    if k == 0:
        return [1] + [0] * n
    _, hist = _enumerate_all(G, workers, want_hist=True)
    return hist.tolist()


# -- strategy (b): column dependency search ----------------------------------------

def _subset_keys(keys: np.ndarray, s: int) -> np.ndarray:
    """XOR keys of all s-subsets of range(len(keys)) in colex order.

    In colex order the t-subsets of range(m) form a prefix of length
    C(m, t), so each size is built from the previous one by top element.
    """
    n = len(keys)
    level = np.zeros(1, dtype=np.uint64)
    for t in range(1, s + 1):
        parts = [level[:comb(top, t - 1)] ^ keys[top] for top in range(t - 1, n)]
        level = np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint64)
    return level


def _unrank_colex(rank: int, s: int) -> tuple[int, ...]:
    out = []
    for t in range(s, 0, -1):
        c = t - 1
        while comb(c + 1, t) <= rank:
            c += 1
        out.append(c)
        rank -= comb(c, t)
    return tuple(sorted(out))


def _column_syndromes(H: BinaryMatrix) -> tuple[np.ndarray, np.ndarray]:
    R, _ = rref_gf2(H.to_dense())
    syn = pack_words(R.T) if len(R) else np.zeros((H.cols, 1), dtype=np.uint64)
    # a fixed XOR-linear 64-bit projection; collisions are rechecked exactly
    rng = np.random.default_rng(0x5EED)
    proj = rng.integers(0, 2**63, size=(syn.shape[1] * 64,), dtype=np.uint64)
    bits = unpack_words(syn, syn.shape[1] * 64).astype(bool)
    keys = np.zeros(H.cols, dtype=np.uint64)
    for b in np.flatnonzero(bits.any(axis=0)):
        keys[bits[:, b]] ^= proj[b]
    if syn.shape[1] == 1:
        keys = syn[:, 0].copy()
    return syn, keys


def min_distance_column_search(H: BinaryMatrix, budget: int = COLUMN_SEARCH_BUDGET,
                               workers: int = 1, w_max: int | None = None,
                               max_table: int = MITM_MAX_TABLE, mode: str = "auto") -> DistanceResult:
    """Smallest dependent column set of H.

    Weights w = 1, 2, ... are tested by syndrome collisions between disjoint
    column subsets of sizes ceil(w/2) and floor(w/2). When the next subset
    table would break the budget or the memory cap, or would cost more than
    2^k~, the search switches to the systematic form: every dependent set is
    a choice of non-pivot columns plus the pivots its syndrome selects.
    mode "mitm" or "systematic" pins one of the two.
    """
    n = H.cols
    k = n - rank_gf2(H)
    if k == 0:
        return DistanceResult(INF, INF, "column-search", True)
    if mode == "systematic":
        if 2**k > budget:
            return DistanceResult(1, INF, "column-search", False)
        return _systematic_search(H, workers)
    syn, keys = _column_syndromes(H)
    w_max = n if w_max is None else w_max
    work = 0
    tables: dict[int, np.ndarray] = {0: np.zeros(1, dtype=np.uint64)}
    for w in range(1, w_max + 1):
        a, b = (w + 1) // 2, w // 2
        sizes = [s for s in {a, b} if s not in tables]
        need = sum(comb(n, s) for s in sizes)
        too_big = work + need > budget or any(comb(n, s) > max_table for s in sizes)
        if too_big or (mode == "auto" and need > 2**k):
            if mode == "auto" and work + 2**k <= budget:
                res = _systematic_search(H, workers)
                res.work += work
                return res
            return DistanceResult(w, INF, "column-search", False, (), work)
        for s in sizes:
            tables[s] = _subset_keys(keys, s)
            work += len(tables[s])
        supports = _collisions(tables[a], a, tables[b], b, syn, workers)
        if supports:
            return DistanceResult(w, w, "column-search", True, min(supports), work)
        tables = {s: t for s, t in tables.items() if s >= b}
    return DistanceResult(w_max + 1, INF, "column-search", False, (), work)


def _systematic_search(H: BinaryMatrix, workers: int) -> DistanceResult:
    n = H.cols
    R, piv = rref_gf2(H.to_dense())
    piv_set = set(piv)
    free = np.array([c for c in range(n) if c not in piv_set], dtype=np.int64)
    k = len(free)
    cols = pack_words(R[:, free].T) if len(piv) else np.zeros((k, 1), dtype=np.uint64)
    W = cols.shape[1]
    h = k // 2
    A, B = _subset_table(cols[:h]), _subset_table(cols[h:])
    size_a = np.bitwise_count(np.arange(len(A), dtype=np.uint64)).astype(np.int64)
    size_b = np.bitwise_count(np.arange(len(B), dtype=np.uint64)).astype(np.int64)
    step = max(1, _CHUNK_ELEMS // (len(A) * W))

    def task(s):
        def run():
            blk = B[s:s + step, None, :] ^ A[None, :, :]
            wts = _popcount(blk) + size_b[s:s + step, None] + size_a[None, :]
            wts[wts == 0] = np.iinfo(np.int64).max
            m = int(wts.min())
            ib, ia = np.nonzero(wts == m)
            return m, [(int(ia[i]) | (int(s + ib[i]) << h), blk[ib[i], ia[i]]) for i in range(len(ia))]
        return run

    results = _run([task(s) for s in range(0, len(B), step)], workers)
    d = min(m for m, _ in results)
    best: tuple[int, ...] | None = None
    piv_arr = np.array(piv, dtype=np.int64)
    for m, cands in results:
        if m != d:
            continue
        for mask, word in cands:
            chosen = [int(free[i]) for i in range(k) if mask >> i & 1]
            hit = np.flatnonzero(unpack_words(word[None, :], len(piv))[0])
            sup = tuple(sorted(chosen + piv_arr[hit].tolist()))
            if best is None or sup < best:
                best = sup
    return DistanceResult(d, d, "column-search", True, best, 2**k)


def _collisions(ka, a, kb, b, syn, workers) -> list[tuple[int, ...]]:
    """Disjoint subsets A (size a), B (size b) with equal exact syndromes."""
    parts = max(1, workers)

    def task(part):
        def run():
            found = set()
            sel_a = np.flatnonzero(ka % np.uint64(parts) == part)
            sel_b = np.flatnonzero(kb % np.uint64(parts) == part)
            if not len(sel_a) or not len(sel_b):
                return found
            order = np.argsort(kb[sel_b], kind="stable")
            sb = kb[sel_b][order]
            lo = np.searchsorted(sb, ka[sel_a], side="left")
            hi = np.searchsorted(sb, ka[sel_a], side="right")
            # equal sizes: every subset meets itself, so ask for a second hit
            need = 2 if a == b else 1
            for ia in np.flatnonzero(hi - lo >= need):
                A = _unrank_colex(int(sel_a[ia]), a)
                for jb in range(lo[ia], hi[ia]):
                    B = _unrank_colex(int(sel_b[order[jb]]), b)
                    if set(A) & set(B):
                        continue
                    s = np.zeros(syn.shape[1], dtype=np.uint64)
                    for c in A + B:
                        s ^= syn[c]
                    if not s.any():
                        found.add(tuple(sorted(A + B)))
            return found
        return run

    out: set = set()
    for f in _run([task(p) for p in range(parts)], workers):
        out |= f
    return sorted(out)


# -- strategy (c): Brouwer-Zimmermann ----------------------------------------------

def _information_sets(G: np.ndarray) -> list[tuple[np.ndarray, int]]:
    """Greedy disjoint information sets: systematic generators and ranks."""
    k, n = G.shape
    left = list(range(n))
    out = []
    while left:
        rest = [c for c in range(n) if c not in set(left)]
        R, piv = rref_gf2(G, col_order=left + rest)
        r = sum(1 for c in piv if c in set(left))
        if r == 0:
            break
        out.append((R, r))
        used = set(piv[:r])
        left = [c for c in left if c not in used]
    return out


def _size_tables(rows: np.ndarray, max_s: int) -> list[np.ndarray]:
    """tables[s] = XOR of every s-subset of rows."""
    W = rows.shape[1]
    tables = [np.zeros((1, W), dtype=np.uint64)] + [np.zeros((0, W), dtype=np.uint64)] * max_s
    for r in rows:
        for s in range(max_s, 0, -1):
            if len(tables[s - 1]):
                tables[s] = np.concatenate([tables[s], tables[s - 1] ^ r])
    return tables


def min_distance_infoset(G: np.ndarray, budget: int = INFOSET_BUDGET, workers: int = 1) -> DistanceResult:
    k, n = G.shape
    if k == 0:
        return DistanceResult(INF, INF, "information-set", True)
    mats = _information_sets(G)
    best = _Best(n)
    for R, _ in mats:
        _scan(pack_words(R), best)
    prepared = []
    for R, r in mats:
        words = pack_words(R)
        h = k // 2
        prepared.append((words[:h], words[h:], r))
    caches: dict[int, tuple[list, list]] = {}
    work = 0
    done_level = [0] * len(mats)

    def lower() -> int:
        return sum(max(0, w + 1 - (k - r)) for w, (_, r) in zip(done_level, mats))

    for w in range(1, k + 1):
        for j, (top, bot, r) in enumerate(prepared):
            if lower() >= best.w:
                return DistanceResult(best.w, best.w, "information-set", True, best.support, work)
            if w + 1 - (k - r) <= 0:
                continue
            # a matrix joining late must first cover every smaller size
            sizes = range(done_level[j] + 1, w + 1)
            cost = sum(comb(k, s) for s in sizes)
            if work + cost > budget:
                return DistanceResult(lower(), best.w, "information-set", False, best.support, work)
            if j not in caches or len(caches[j][0]) <= w:
                caches[j] = (_size_tables(top, w), _size_tables(bot, w))
            ta, tb = caches[j]
            for s in sizes:
                _combos(ta, tb, s, best, workers)
            work += cost
            done_level[j] = w
        if lower() >= best.w:
            break
    certified = lower() >= best.w
    return DistanceResult(best.w if certified else lower(), best.w, "information-set",
                          certified, best.support, work)


def _combos(ta, tb, w, best: _Best, workers: int) -> None:
    """All XORs of exactly w rows, as (i from top) x (w-i from bottom)."""
    tasks = []
    for i in range(w + 1):
        A = ta[i] if i < len(ta) else np.zeros((0, 1), dtype=np.uint64)
        B = tb[w - i] if w - i < len(tb) else np.zeros((0, 1), dtype=np.uint64)
        if not len(A) or not len(B):
            continue
        W = A.shape[1]
        step = max(1, _CHUNK_ELEMS // (len(A) * W))
        for s in range(0, len(B), step):
            def run(A=A, Bs=B[s:s + step], W=W):
                local = _Best(best.n)
                _scan((Bs[:, None, :] ^ A[None, :, :]).reshape(-1, W), local)
                return local
            tasks.append(run)
    for local in _run(tasks, workers):
        if local.w < best.w or (local.w == best.w and local.w < INF and local.support < best.support):
            best.w, best.support = local.w, local.support


# -- dispatch -----------------------------------------------------------------------

def min_distance_gf2(H: BinaryMatrix, method: str = "auto", budget: int | None = None,
                     workers: int = 1) -> DistanceResult:
    G = nullspace_gf2(H)
    k = G.shape[0]
    if method == "auto":
        method = "oracle" if k <= ORACLE_MAX_K else "information-set"
    if method == "oracle":
        return min_distance_oracle(G, workers)
    if method == "column-search":
        return min_distance_column_search(H, budget or COLUMN_SEARCH_BUDGET, workers)
    if method == "information-set":
        return min_distance_infoset(G, budget or INFOSET_BUDGET, workers)
    raise ValueError(f"unknown method {method!r}")


def code_params(H: BinaryMatrix, budget: int | None = None, method: str = "auto",
                workers: int = 1, distance: bool = True) -> CodeParams:
    n = H.cols
    k = n - rank_gf2(H)
    if not distance:
        return CodeParams(n, k, 1 if k else INF, n if k else INF, "none", k == 0)
    res = min_distance_gf2(H, method, budget, workers)
    return CodeParams(n, k, res.d_lo, res.d_hi, res.method, res.certified, res.support)


# -- Tanner graph ---------------------------------------------------------------------

def girth(H: BinaryMatrix) -> float:
    """Shortest cycle of the check/variable graph, inf for a forest."""
    dense = H.to_dense()
    m, n = dense.shape
    adj: list[list[int]] = [[] for _ in range(m + n)]
    for i, j in zip(*np.nonzero(dense)):
        adj[i].append(m + j)
        adj[m + j].append(i)
    best = INF
    for s in range(m + n):
        dist = {s: 0}
        parent = {s: -1}
        dq = deque([s])
        while dq:
            u = dq.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in adj[u]:
                if v == parent[u]:
                    continue
                if v in dist:
                    best = min(best, dist[u] + dist[v] + 1)
                else:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    dq.append(v)
        if best == 4:
            break
    return best


def regularity(H: BinaryMatrix) -> tuple[set[int], set[int]]:
    """(column degrees, row degrees) as sets."""
    return set(H.col_weights().tolist()), set(H.row_weights().tolist())


def density(H: BinaryMatrix) -> float:
    return H.count_ones() / (H.rows * H.cols)


# -- bounds -----------------------------------------------------------------------------

@dataclass
class Bound:
    name: str
    relation: str  # ">=", "<=", "=="
    predicted: float
    observed: float | None
    holds: bool
    note: str = ""


def _cmp(rel, obs, pred) -> bool:
    if obs is None:
        return False
    return {">=": obs >= pred, "<=": obs <= pred, "==": obs == pred}[rel]


def _bound(name, rel, pred, obs, note="") -> Bound:
    return Bound(name, rel, pred, obs, _cmp(rel, obs, pred), note)


def _dist_bound(name, rel, pred, params: CodeParams, note="") -> Bound:
    """Bound on d~ decided from [d_lo, d_hi]; observed is None while undecided."""
    lo, hi = params.d_lo, params.d_hi
    if params.certified:
        obs = lo
    elif rel == ">=":
        obs = lo if lo >= pred else hi if hi < pred else None
    elif rel == "<=":
        obs = hi if hi <= pred else lo if lo > pred else None
    else:
        obs = lo if not lo <= pred <= hi else None
    if obs is None:
        note = (note + "; " if note else "") + "undecided: distance not certified"
    return _bound(name, rel, pred, obs, note)


def check_bounds(c: EvalCode, params: CodeParams, H: BinaryMatrix | None = None,
                 d: int | None = None) -> list[Bound]:
    """Every applicable bound on [n~, k~, d~] for H_C of c.

    d is the q-ary minimum distance (taken from the code when known).
    Bounds on d~ are decided from the interval [d_lo, d_hi] when the
    distance is not certified; undecided checks carry observed=None.
    """
    f = c.field
    n, k, q, p, r = c.n, c.k, f.q, f.p, f.r
    d = d if d is not None else (c.known_distance or codes.min_distance_qary(c))
    out = [_bound("dimension", ">=", q**k - (n * q - (n - 1)), params.k_tilde,
                  "each q-row block sums to the all-ones row")]
    if params.k_tilde == 0:
        return out
    if d < n:
        D = construct.disjunct_value(n, d)
        out.append(_dist_bound("disjunct", ">=", D + 2, params, f"D = {D}"))
    gamma = p ** (r - 1) * n
    if gamma % 2 == 0:
        out.append(_dist_bound("cor-literal", ">=", gamma + 2, params,
                               f"gamma = p^(r-1) n = {gamma}"))
    if H is None:
        H = construct.build_hc(c)
    g = girth(H)
    if n % 2 == 0 and g >= 6:
        out.append(_dist_bound("block-permutation", ">=", n + 2, params,
                               "n block rows of q x q permutation matrices, girth >= 6"))
    pts = c.points
    is_mds_rs = c.kind == "rs" and k == 2
    if p == 2 and is_mds_rs and 2 < n < q and 0 not in pts:
        out.append(_dist_bound("even-char-upper", "<=", q, params,
                               "weight-q word from beta(x - beta)"))
        if n == q - 1:
            out.append(_dist_bound("even-char-exact", "==", q, params))
            out.append(_bound("even-char-dimension", ">=", 2 * q - 2, params.k_tilde))
    if n == 2 and k == 2:
        out.append(_bound("trivial-dimension", "==", q * q - 2 * q + 1, params.k_tilde))
        out.append(_dist_bound("trivial-distance", "==", 4, params))
    return out


def even_char_codeword(c: EvalCode, H: BinaryMatrix | None = None) -> list[int]:
    """Columns of H_C for the polynomials beta(x - beta); a weight-q codeword."""
    f = c.field
    q = f.q
    if f.p != 2:
        raise ValueError("needs even characteristic")
    if c.kind != "rs" or c.k != 2 or not 2 < c.n < q:
        raise ValueError("needs an [n, 2, n-1] Reed-Solomon code with 2 < n < q")
    if 0 in c.points:
        raise ValueError("evaluation points must be nonzero")
    cols = []
    for beta in range(q):
        c0 = int(f.mul_table[beta, beta])  # -beta^2 = beta^2
        cols.append(c.codeword_index([c0, beta]))
    cols.sort()
    H = H if H is not None else construct.build_hc(c)
    x = np.zeros(H.cols, dtype=np.int64)
    x[cols] = 1
    if H.mul_vec(x).any():
        raise AssertionError("indicator of S is not in the nullspace")
    return cols


# -- reports -------------------------------------------------------------------------------

def _num(x):
    if x is None:
        return None
    return "inf" if x == INF else int(x)


def report_dict(params: CodeParams, bounds: list[Bound] = ()) -> dict:
    return {
        "n": params.n_tilde,
        "k": params.k_tilde,
        "d": _num(params.d_tilde),
        "d_lo": _num(params.d_lo),
        "d_hi": _num(params.d_hi),
        "method": params.d_method,
        "certified": params.certified,
        "support": list(params.support),
        "bounds": [{**asdict(b), "predicted": _num(b.predicted), "observed": _num(b.observed)}
                   for b in bounds],
    }


def report_json(params: CodeParams, bounds: list[Bound] = ()) -> str:
    return json.dumps(report_dict(params, bounds), indent=2)


def _verdict(b: Bound) -> str:
    if b.observed is None:
        return "undecided"
    return "holds" if b.holds else "FAILS"


def report_text(params: CodeParams, bounds: list[Bound] = ()) -> str:
    d = _num(params.d_tilde)
    dtxt = str(d) if params.certified else f"[{_num(params.d_lo)}, {_num(params.d_hi)}]"
    lines = [f"params [{params.n_tilde}, {params.k_tilde}, {dtxt}] method={params.d_method} "
             f"certified={str(params.certified).lower()}"]
    for b in bounds:
        lines.append(f"bound {b.name} {b.relation} {_num(b.predicted)} observed={_num(b.observed)} "
                     f"{_verdict(b)}")
    return "\n".join(lines) + "\n"
