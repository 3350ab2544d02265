"""Bit-packed dense linear algebra over GF(2).

Rows are stored as little-endian 64-bit words: bit ``j`` of a row lives in word
``j // 64`` at position ``j % 64``. Bits past ``cols`` in the last word are always
zero, so word-level XOR and popcount never see garbage.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import CommensurateCaseError, DimensionError

_ONE = np.uint64(1)


def n_words(cols: int) -> int:
    return (cols + 63) // 64


def pack_bits(dense: Any) -> np.ndarray:
    """Pack a 2-D array of 0/1 entries into uint64 words, one row of words per row."""
    arr = np.asarray(dense, dtype=np.uint8)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D array, got {arr.ndim} dimensions")
    rows, cols = arr.shape
    nw = n_words(cols)
    if nw == 0:
        return np.zeros((rows, 0), dtype=np.uint64)
    padded = np.zeros((rows, nw * 64), dtype=np.uint8)
    padded[:, :cols] = arr & 1
    packed = np.ascontiguousarray(np.packbits(padded, axis=1, bitorder="little"))
    return packed.view(np.dtype("<u8")).astype(np.uint64)


def unpack_bits(bits: np.ndarray, cols: int) -> np.ndarray:
    """Inverse of `pack_bits`."""
    rows = bits.shape[0]
    if bits.shape[1] == 0:
        return np.zeros((rows, cols), dtype=np.uint8)
    raw = np.ascontiguousarray(bits.astype(np.dtype("<u8"))).view(np.uint8)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :cols]


def _column_mask(bits: np.ndarray, j: int) -> np.ndarray:
    return ((bits[:, j >> 6] >> np.uint64(j & 63)) & _ONE).astype(bool)


def _rref_words(bits: np.ndarray, cols: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with leftmost pivots and topmost-row tie-breaking."""
    m = bits.copy()
    rows = m.shape[0]
    pivots: list[int] = []
    r = 0
    for j in range(cols):
        if r == rows:
            break
        col = _column_mask(m[r:], j)
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        mask = _column_mask(m, j)
        mask[r] = False
        m[mask] ^= m[r]
        pivots.append(j)
        r += 1
    return m[:r], pivots


@dataclass(frozen=True, eq=False)
class BinVec:
    """A binary vector of length `len`."""

    len: int
    bits: np.ndarray

    def __post_init__(self):
        if self.bits.shape != (n_words(self.len),):
            raise DimensionError(f"vector of length {self.len} needs {n_words(self.len)} words")

    @classmethod
    def zeros(cls, length: int) -> BinVec:
        return cls(length, np.zeros(n_words(length), dtype=np.uint64))

    @classmethod
    def from_dense(cls, values: Any) -> BinVec:
        arr = np.asarray(values, dtype=np.uint8).reshape(1, -1)
        return cls(arr.shape[1], pack_bits(arr)[0])

    @classmethod
    def from_str(cls, text: str) -> BinVec:
        return cls.from_dense([int(ch) for ch in text.strip()])

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> BinVec:
        dense = np.zeros(length, dtype=np.uint8)
        dense[list(support)] = 1
        return cls.from_dense(dense)

    @classmethod
    def from_int(cls, length: int, value: int) -> BinVec:
        nw = n_words(length)
        words = np.frombuffer(value.to_bytes(nw * 8, "little"), dtype=np.dtype("<u8"))
        return cls(length, words.astype(np.uint64))

    def to_dense(self) -> np.ndarray:
        return unpack_bits(self.bits.reshape(1, -1), self.len)[0]

    def to_int(self) -> int:
        return int.from_bytes(self.bits.astype(np.dtype("<u8")).tobytes(), "little")

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.to_dense())]

    @property
    def weight(self) -> int:
        return int(np.bitwise_count(self.bits).sum())

    def dot(self, other: BinVec) -> int:
        if other.len != self.len:
            raise DimensionError(f"length mismatch: {self.len} vs {other.len}")
        return int(np.bitwise_count(self.bits & other.bits).sum()) & 1

    def __add__(self, other: BinVec) -> BinVec:
        if other.len != self.len:
            raise DimensionError(f"length mismatch: {self.len} vs {other.len}")
        return BinVec(self.len, self.bits ^ other.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinVec):
            return NotImplemented
        return self.len == other.len and bool(np.array_equal(self.bits, other.bits))

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return "".join(str(int(b)) for b in self.to_dense())

    def __repr__(self) -> str:
        return f"BinVec({self})"


@dataclass(frozen=True, eq=False)
class BinMat:
    """A `rows` x `cols` matrix over GF(2)."""

    rows: int
    cols: int
    bits: np.ndarray

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative shape {self.rows}x{self.cols}")
        if self.bits.shape != (self.rows, n_words(self.cols)):
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows}x{n_words(self.cols)} words, "
                f"got {self.bits.shape}"
            )

    # -- constructors --

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BinMat:
        return cls(rows, cols, np.zeros((rows, n_words(cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> BinMat:
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_dense(cls, values: Any) -> BinMat:
        arr = np.asarray(values, dtype=np.uint8)
        if arr.ndim != 2:
            raise DimensionError(f"expected a 2-D array, got {arr.ndim} dimensions")
        return cls(arr.shape[0], arr.shape[1], pack_bits(arr))

    @classmethod
    def from_rows(cls, rows: Sequence[str], cols: int | None = None) -> BinMat:
        """Build from 0/1 strings, e.g. ``BinMat.from_rows(["110", "011"])``."""
        if not rows:
            return cls.zeros(0, cols or 0)
        return cls.from_dense([[int(ch) for ch in row.strip()] for row in rows])

    @classmethod
    def from_vectors(cls, vectors: Sequence[BinVec], cols: int) -> BinMat:
        if any(v.len != cols for v in vectors):
            raise DimensionError(f"all vectors must have length {cols}")
        if not vectors:
            return cls.zeros(0, cols)
        return cls(len(vectors), cols, np.stack([v.bits for v in vectors]))

    @classmethod
    def from_row_ints(cls, values: Sequence[int], cols: int) -> BinMat:
        return cls.from_vectors([BinVec.from_int(cols, v) for v in values], cols)

    # -- views --

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def to_dense(self) -> np.ndarray:
        return unpack_bits(self.bits, self.cols)

    def row(self, i: int) -> BinVec:
        return BinVec(self.cols, self.bits[i].copy())

    def row_ints(self) -> list[int]:
        return [self.row(i).to_int() for i in range(self.rows)]

    def column_ints(self) -> list[int]:
        return self.T.row_ints()

    def row_weights(self) -> np.ndarray:
        return np.bitwise_count(self.bits).sum(axis=1)

    def column_weights(self) -> np.ndarray:
        return self.to_dense().sum(axis=0)

    def is_zero(self) -> bool:
        return not bool(self.bits.any())

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.T

    def rows_slice(self, start: int, stop: int) -> BinMat:
        return BinMat(stop - start, self.cols, self.bits[start:stop].copy())

    def columns_slice(self, start: int, stop: int) -> BinMat:
        return BinMat.from_dense(self.to_dense()[:, start:stop])

    # -- algebra --

    @property
    def T(self) -> BinMat:
        return BinMat.from_dense(self.to_dense().T)

    def __add__(self, other: BinMat) -> BinMat:
        if other.shape != self.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return BinMat(self.rows, self.cols, self.bits ^ other.bits)

    def __matmul__(self, other: BinMat) -> BinMat:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = np.zeros((self.rows, n_words(other.cols)), dtype=np.uint64)
        for j in range(self.cols):
            mask = _column_mask(self.bits, j)
            if mask.any():
                out[mask] ^= other.bits[j]
        return BinMat(self.rows, other.cols, out)

    def apply(self, v: BinVec) -> BinVec:
        """Matrix-vector product ``self @ v``."""
        if v.len != self.cols:
            raise DimensionError(f"cannot apply {self.shape} matrix to length-{v.len} vector")
        parity = np.bitwise_count(self.bits & v.bits).sum(axis=1) & 1
        return BinVec.from_dense(parity.astype(np.uint8))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinMat):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.bits, other.bits))

    __hash__ = None  # type: ignore[assignment]

    # -- elimination --

    def echelon(self) -> tuple[BinMat, list[int]]:
        """Return the reduced row echelon form (zero rows dropped) and its pivot columns."""
        reduced, pivots = _rref_words(self.bits, self.cols)
        return BinMat(len(pivots), self.cols, reduced), pivots

    def rank(self) -> int:
        return len(_rref_words(self.bits, self.cols)[1])

    def kernel_basis(self) -> BinMat:
        """Basis of ``{v : self @ v = 0}`` as rows, itself in reduced echelon form."""
        reduced, pivots = self.echelon()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        if not free:
            return BinMat.zeros(0, self.cols)
        dense = reduced.to_dense()
        basis = np.zeros((len(free), self.cols), dtype=np.uint8)
        basis[np.arange(len(free)), free] = 1
        if pivots:
            basis[:, pivots] = dense[:, free].T
        return BinMat.from_dense(basis).echelon()[0]

    def reduce(self, vectors: BinMat) -> BinMat:
        """Reduce each row of `vectors` against this matrix, which must be in RREF."""
        out = vectors.bits.copy()
        pivots = _leading_columns(self)
        for i, p in enumerate(pivots):
            mask = _column_mask(out, p)
            if mask.any():
                out[mask] ^= self.bits[i]
        return BinMat(vectors.rows, vectors.cols, out)

    def row_space_contains(self, v: BinVec) -> bool:
        if v.len != self.cols:
            raise DimensionError(f"vector length {v.len} does not match {self.cols} columns")
        reduced, _ = self.echelon()
        return reduced.reduce(BinMat.from_vectors([v], self.cols)).is_zero()

    def inverse(self) -> BinMat:
        if self.rows != self.cols:
            raise DimensionError(f"cannot invert a {self.rows}x{self.cols} matrix")
        n = self.rows
        reduced, pivots = hstack(self, BinMat.identity(n)).echelon()
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise DimensionError("matrix is singular")
        return reduced.columns_slice(n, 2 * n)

    def __repr__(self) -> str:
        return f"BinMat({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join("".join(str(int(b)) for b in row) for row in self.to_dense())


def _leading_columns(m: BinMat) -> list[int]:
    """Leading-one column of every row (rows assumed nonzero and in echelon form)."""
    dense = m.to_dense()
    return [int(np.flatnonzero(row)[0]) for row in dense]


# -- module-level operations --


def rank(m: BinMat) -> int:
    return m.rank()


def row_space_contains(m: BinMat, v: BinVec) -> bool:
    return m.row_space_contains(v)


def kernel_basis(m: BinMat) -> BinMat:
    return m.kernel_basis()


def mul(a: BinMat, b: BinMat) -> BinMat:
    return a @ b


def add(a: BinMat, b: BinMat) -> BinMat:
    return a + b


def transpose(a: BinMat) -> BinMat:
    return a.T


def kron(a: BinMat, b: BinMat) -> BinMat:
    return BinMat.from_dense(np.kron(a.to_dense(), b.to_dense()))


def kron_all(*factors: BinMat) -> BinMat:
    out = factors[0]
    for f in factors[1:]:
        out = kron(out, f)
    return out


def hstack(*mats: BinMat) -> BinMat:
    rows = {m.rows for m in mats}
    if len(rows) != 1:
        raise DimensionError(f"hstack needs equal row counts, got {sorted(rows)}")
    return BinMat.from_dense(np.hstack([m.to_dense() for m in mats]))


def vstack(*mats: BinMat) -> BinMat:
    cols = {m.cols for m in mats}
    if len(cols) != 1:
        raise DimensionError(f"vstack needs equal column counts, got {sorted(cols)}")
    return BinMat(sum(m.rows for m in mats), mats[0].cols, np.vstack([m.bits for m in mats]))


def mat_sum(mats: Iterable[BinMat], rows: int, cols: int) -> BinMat:
    out = BinMat.zeros(rows, cols)
    for m in mats:
        out = out + m
    return out


def circshift_perm(c: int, i: int) -> BinMat:
    """Cyclic shift: row k has its single 1 at column (k + i) mod c."""
    dense = np.zeros((c, c), dtype=np.uint8)
    ks = np.arange(c)
    dense[ks, (ks + i) % c] = 1
    return BinMat.from_dense(dense)


def skew_perm(c: int, chi: int) -> BinMat:
    """Boundary skew: row k has its single 1 at column (k * chi) mod c."""
    if math.gcd(c, chi) != 1:
        raise CommensurateCaseError(c, chi)
    dense = np.zeros((c, c), dtype=np.uint8)
    ks = np.arange(c)
    dense[ks, (ks * chi) % c] = 1
    return BinMat.from_dense(dense)


def unit_vector(length: int, i: int) -> BinMat:
    """A 1 x length row matrix with a single 1 at position i."""
    dense = np.zeros((1, length), dtype=np.uint8)
    dense[0, i] = 1
    return BinMat.from_dense(dense)
