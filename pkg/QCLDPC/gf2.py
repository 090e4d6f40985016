"""
Dense bit-packed matrices over GF(2).

Rows are packed eight columns per byte (little bit order) with zero padding.
Elimination works on a private copy, XOR-ing whole packed rows at a time,
so rank and null-space queries never touch the caller's matrix.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np

from QCLDPC.errors import DimensionError
from QCLDPC.ring_poly import RingPoly


class BitMatrix:
    """Immutable rows x cols binary matrix stored as packed uint8 rows."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray):
        nbytes = (cols + 7) // 8
        if data.shape != (rows, nbytes) or data.dtype != np.uint8:
            raise DimensionError(
                f"packed data of shape {data.shape} does not match {rows}x{cols}"
            )
        data = data.copy()
        data.setflags(write=False)
        self.rows = rows
        self.cols = cols
        self.data = data

    # Construction
    @classmethod
    def from_dense(cls, array) -> "BitMatrix":
        dense = np.asarray(array, dtype=np.uint8)
        if dense.ndim != 2:
            raise DimensionError(f"expected a 2-D array, got {dense.ndim}-D")
        dense = dense & 1
        rows, cols = dense.shape
        packed = np.packbits(dense, axis=1, bitorder="little")
        return cls(rows, cols, packed.reshape(rows, (cols + 7) // 8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, np.zeros((rows, (cols + 7) // 8), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def block(cls, grid: Sequence[Sequence["BitMatrix"]]) -> "BitMatrix":
        return cls.from_dense(np.block([[m.to_dense() for m in row] for row in grid]))

    @classmethod
    def hstack(cls, blocks: Sequence["BitMatrix"]) -> "BitMatrix":
        return cls.block([list(blocks)])

    @classmethod
    def vstack(cls, blocks: Sequence["BitMatrix"]) -> "BitMatrix":
        return cls.block([[b] for b in blocks])

    # Views
    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def to_dense(self) -> np.ndarray:
        if self.cols == 0:
            return np.zeros((self.rows, 0), dtype=np.uint8)
        return np.unpackbits(self.data, axis=1, count=self.cols, bitorder="little")

    def row_weights(self) -> np.ndarray:
        return self.to_dense().sum(axis=1, dtype=np.int64)

    def col_weights(self) -> np.ndarray:
        return self.to_dense().sum(axis=0, dtype=np.int64)

    def nonzero(self) -> Tuple[np.ndarray, np.ndarray]:
        return np.nonzero(self.to_dense())

    def is_zero(self) -> bool:
        return not self.data.any()

    def select_rows(self, indices: Sequence[int]) -> "BitMatrix":
        return BitMatrix(len(indices), self.cols, self.data[list(indices)])

    # Algebra
    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    @property
    def T(self) -> "BitMatrix":
        return self.transpose()

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return matrix_multiply(self, other)

    def dot_vector(self, vector) -> np.ndarray:
        """H . v^T over GF(2) for a dense 0/1 vector of length cols."""
        v = np.asarray(vector, dtype=np.int64)
        if v.shape != (self.cols,):
            raise DimensionError(f"vector of length {v.shape} does not match {self.cols} columns")
        return (self.to_dense().astype(np.int64) @ v & 1).astype(np.uint8)

    def row_reduce(self) -> Tuple[np.ndarray, List[int]]:
        """Reduced row echelon form (packed copy) and its pivot columns."""
        work = self.data.copy()
        pivots: List[int] = []
        row = 0
        for col in range(self.cols):
            if row == self.rows:
                break
            byte, bit = divmod(col, 8)
            candidates = np.flatnonzero((work[row:, byte] >> bit) & 1)
            if candidates.size == 0:
                continue
            pivot = row + int(candidates[0])
            if pivot != row:
                work[[row, pivot]] = work[[pivot, row]]
            mask = ((work[:, byte] >> bit) & 1).astype(bool)
            mask[row] = False
            work[mask] ^= work[row]
            pivots.append(col)
            row += 1
        return work, pivots

    def rank(self) -> int:
        return len(self.row_reduce()[1])

    # Comparison
    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols}, rank={self.rank()})"


def matrix_rank(m: BitMatrix) -> int:
    """GF(2) rank by Gaussian elimination over packed rows."""
    return m.rank()


def matrix_multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """
    Product over GF(2).

    Args:
        a: Left operand, shape (m, k)
        b: Right operand, shape (k, n)

    Returns:
        The m x n product with entries reduced mod 2

    Raises:
        DimensionError: If a.cols != b.rows
    """
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    product = a.to_dense().astype(np.int32) @ b.to_dense().astype(np.int32)
    return BitMatrix.from_dense(product & 1)


def transpose(m: BitMatrix) -> BitMatrix:
    return m.transpose()


def null_space_basis(m: BitMatrix) -> List[np.ndarray]:
    """
    Basis of the null space {x : m x^T = 0}.

    Args:
        m: Any GF(2) matrix

    Returns:
        One dense uint8 vector per free column of the reduced echelon form;
        empty when m has full column rank
    """
    work, pivots = m.row_reduce()
    reduced = np.unpackbits(work, axis=1, count=m.cols, bitorder="little") if m.cols else work
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        x = np.zeros(m.cols, dtype=np.uint8)
        x[free] = 1
        if pivots:
            x[pivots] = reduced[: len(pivots), free]
        basis.append(x)
    return basis


def circulant_from_poly(p: RingPoly) -> BitMatrix:
    """r x r circulant: row 0 holds the coefficients, row i is row i-1 shifted right by one."""
    first = np.array([(p.coeffs >> e) & 1 for e in range(p.r)], dtype=np.uint8)
    dense = np.stack([np.roll(first, i) for i in range(p.r)])
    return BitMatrix.from_dense(dense)
