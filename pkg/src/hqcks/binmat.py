"""Dense bit-packed 0/1 matrices and their plain-text format."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass(frozen=True, eq=False)
class BinaryMatrix:
    """Row-major 0/1 matrix, eight columns per byte (little bit order)."""

    rows: int
    cols: int
    bits: np.ndarray

    def __post_init__(self) -> None:
        if self.bits.shape != (self.rows, (self.cols + 7) // 8) or self.bits.dtype != np.uint8:
            raise ValueError("packed storage does not match the stated shape")

    @classmethod
    def from_dense(cls, a) -> BinaryMatrix:
        a = np.asarray(a)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        if a.size and not np.isin(a, (0, 1)).all():
            raise ValueError("entries must be 0 or 1")
        packed = np.packbits(a.astype(np.uint8), axis=1, bitorder="little")
        if a.shape[1] == 0:
            packed = np.zeros((a.shape[0], 0), dtype=np.uint8)
        return cls(a.shape[0], a.shape[1], packed)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BinaryMatrix:
        return cls(rows, cols, np.zeros((rows, (cols + 7) // 8), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_dense(self) -> np.ndarray:
        if self.cols == 0:
            return np.zeros((self.rows, 0), dtype=np.uint8)
        return np.unpackbits(self.bits, axis=1, count=self.cols, bitorder="little")

    def row_ints(self) -> list[int]:
        """Each row as a Python int, bit j holding column j."""
        return [int.from_bytes(r.tobytes(), "little") for r in self.bits]

    def col_ints(self) -> list[int]:
        return self.transpose().row_ints()

    def transpose(self) -> BinaryMatrix:
        return BinaryMatrix.from_dense(self.to_dense().T)

    def __getitem__(self, key) -> int:
        i, j = key
        return int((self.bits[i, j >> 3] >> (j & 7)) & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.bits.tobytes()))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols}, ones={self.count_ones()})"

    def count_ones(self) -> int:
        return int(np.bitwise_count(self.bits).sum())

    def row_weights(self) -> np.ndarray:
        return np.bitwise_count(self.bits).sum(axis=1, dtype=np.int64)

    def col_weights(self) -> np.ndarray:
        return self.to_dense().sum(axis=0, dtype=np.int64)

    def block(self, r0: int, c0: int, nr: int, nc: int) -> np.ndarray:
        return self.to_dense()[r0:r0 + nr, c0:c0 + nc]

    def mul_vec(self, x) -> np.ndarray:
        """H x^T over GF(2) for a 0/1 vector x of length cols."""
        x = np.asarray(x, dtype=np.int64)
        return (self.to_dense().astype(np.int64) @ x) % 2


def write_dense(m: BinaryMatrix, path: str | Path | None = None) -> str:
    """Header "rows cols", then one line of 0/1 characters per row."""
    dense = m.to_dense()
    lines = [f"{m.rows} {m.cols}"]
    lines += ["".join("1" if b else "0" for b in row) for row in dense]
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def read_dense(source: str | Path) -> BinaryMatrix:
    text = Path(source).read_text() if isinstance(source, Path) else source
    lines = [ln.strip() for ln in text.strip().splitlines()]
    rows, cols = (int(x) for x in lines[0].split())
    body = lines[1:]
    if len(body) != rows or any(len(ln) != cols or set(ln) - {"0", "1"} for ln in body):
        raise ValueError("malformed dense matrix text")
    a = np.array([[c == "1" for c in ln] for ln in body], dtype=np.uint8).reshape(rows, cols)
    return BinaryMatrix.from_dense(a)


def write_alist(m: BinaryMatrix, path: str | Path | None = None) -> str:
    """Sparse alist text with 1-based indices, zero-padded to the max weight."""
    dense = m.to_dense()
    col_idx = [np.flatnonzero(dense[:, j]) + 1 for j in range(m.cols)]
    row_idx = [np.flatnonzero(dense[i]) + 1 for i in range(m.rows)]
    max_c = max((len(c) for c in col_idx), default=0)
    max_r = max((len(r) for r in row_idx), default=0)

    def pad(v, width):
        return " ".join(str(int(x)) for x in list(v) + [0] * (width - len(v)))

    lines = [
        f"{m.cols} {m.rows}",
        f"{max_c} {max_r}",
        " ".join(str(len(c)) for c in col_idx),
        " ".join(str(len(r)) for r in row_idx),
    ]
    lines += [pad(c, max_c) for c in col_idx]
    lines += [pad(r, max_r) for r in row_idx]
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def read_alist(source: str | Path) -> BinaryMatrix:
    text = Path(source).read_text() if isinstance(source, Path) else source
    nums = [[int(x) for x in ln.split()] for ln in text.lstrip().splitlines()]
    cols, rows = nums[0]
    # index lines are empty when the maximum weight is zero
    nums += [[] for _ in range(4 + cols + rows - len(nums))]
    col_w = nums[2] if cols else []
    a = np.zeros((rows, cols), dtype=np.uint8)
    for j in range(cols):
        for i in nums[4 + j][: col_w[j]]:
            a[i - 1, j] = 1
    check = BinaryMatrix.from_dense(a)
    row_lines = nums[4 + cols: 4 + cols + rows]
    for i, ln in enumerate(row_lines):
        listed = sorted(x - 1 for x in ln if x)
        if listed != list(np.flatnonzero(a[i])):
            raise ValueError(f"alist row {i + 1} disagrees with the column lists")
    return check
