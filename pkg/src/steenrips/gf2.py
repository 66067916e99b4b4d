"""Dense bit-packed linear algebra over the two-element field.

Vectors and matrix columns are Python ints used as bit-vectors: bit i of
``bits`` is the coefficient of basis row i.  Addition is XOR, which CPython
performs word-parallel in C, so elimination runs at machine-word speed
without any per-entry Python loop.

Elimination is by columns, pivot = lowest set bit of the (partially
reduced) column.  Pivoting is deterministic, so reduced forms and ranks
are reproducible bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DimensionMismatchError


def _low(bits: int) -> int:
    """Index of the lowest set bit (bits must be nonzero)."""
    return (bits & -bits).bit_length() - 1


@dataclass(frozen=True)
class F2Vector:
    """Immutable F2 vector of fixed length ``n``."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0 or self.bits < 0 or self.bits >> self.n:
            raise DimensionMismatchError(
                f"bit pattern does not fit in {self.n} coordinates"
            )

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "F2Vector":
        bits = 0
        for i in support:
            bits ^= 1 << i
        return cls(n, bits)

    def __xor__(self, other: "F2Vector") -> "F2Vector":
        if self.n != other.n:
            raise DimensionMismatchError("vector lengths differ")
        return F2Vector(self.n, self.bits ^ other.bits)

    __add__ = __xor__

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.n

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> tuple[int, ...]:
        out, bits = [], self.bits
        while bits:
            i = _low(bits)
            out.append(i)
            bits &= bits - 1
        return tuple(out)


@dataclass(frozen=True)
class F2Matrix:
    """Matrix stored as a tuple of bit-packed columns."""

    rows: int
    columns: tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.columns:
            if c < 0 or c >> self.rows:
                raise DimensionMismatchError(
                    f"column does not fit in {self.rows} rows"
                )

    @classmethod
    def from_columns(cls, rows: int, cols: Iterable[F2Vector | int]) -> "F2Matrix":
        packed = []
        for c in cols:
            if isinstance(c, F2Vector):
                if c.n != rows:
                    raise DimensionMismatchError("column length != row count")
                packed.append(c.bits)
            else:
                packed.append(int(c))
        return cls(rows, tuple(packed))

    @classmethod
    def from_dense(cls, array) -> "F2Matrix":
        a = np.asarray(array, dtype=np.uint8) & 1
        if a.ndim != 2:
            raise DimensionMismatchError("dense input must be 2-dimensional")
        rows, cols = a.shape
        packed = []
        for j in range(cols):
            bits = 0
            for i in range(rows):
                if a[i, j]:
                    bits |= 1 << i
            packed.append(bits)
        return cls(rows, tuple(packed))

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(rows, (0,) * cols)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def column(self, j: int) -> F2Vector:
        return F2Vector(self.rows, self.columns[j])

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.ncols), dtype=np.uint8)
        for j, bits in enumerate(self.columns):
            while bits:
                i = _low(bits)
                out[i, j] = 1
                bits &= bits - 1
        return out

    def transpose(self) -> "F2Matrix":
        cols = [0] * self.rows
        for j, bits in enumerate(self.columns):
            while bits:
                i = _low(bits)
                cols[i] |= 1 << j
                bits &= bits - 1
        return F2Matrix(self.ncols, tuple(cols))

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if self.ncols != other.rows:
            raise DimensionMismatchError("inner dimensions differ")
        cols = []
        for bits in other.columns:
            acc = 0
            while bits:
                i = _low(bits)
                acc ^= self.columns[i]
                bits &= bits - 1
            cols.append(acc)
        return F2Matrix(self.rows, tuple(cols))

    def hstack(self, other: "F2Matrix") -> "F2Matrix":
        if self.rows != other.rows:
            raise DimensionMismatchError("row counts differ")
        return F2Matrix(self.rows, self.columns + other.columns)


class PivotTable:
    """Incremental column elimination with lowest-set-bit pivots.

    Inserted columns are reduced against the stored ones; a nonzero
    residual is stored under its pivot.  The stored columns always have
    pairwise distinct lowest set bits and span the same space as
    everything inserted so far.
    """

    __slots__ = ("_cols",)

    def __init__(self):
        self._cols: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._cols)

    def pivots(self) -> list[int]:
        return sorted(self._cols)

    def columns(self) -> dict[int, int]:
        """Snapshot of the stored reduced columns, keyed by pivot."""
        return dict(self._cols)

    def column(self, pivot: int) -> int:
        return self._cols[pivot]

    def reduce(self, bits: int) -> int:
        cols = self._cols
        while bits:
            col = cols.get((bits & -bits).bit_length() - 1)
            if col is None:
                break
            bits ^= col
        return bits

    def reduce_masked(self, bits: int, mask: int) -> int:
        # Reduce with every stored column masked to the given row prefix.
        # Valid because masking preserves the pivot bit of any column
        # whose pivot lies inside the mask.
        cols = self._cols
        while bits:
            col = cols.get((bits & -bits).bit_length() - 1)
            if col is None:
                break
            bits ^= col & mask
        return bits

    def insert(self, bits: int) -> int | None:
        """Reduce and store; return the new pivot, or None if dependent."""
        bits = self.reduce(bits)
        if bits == 0:
            return None
        p = _low(bits)
        self._cols[p] = bits
        return p


def rank(matrix: F2Matrix) -> int:
    """Dimension of the column span over F2."""
    table = PivotTable()
    for bits in matrix.columns:
        table.insert(bits)
    return len(table)


def quotient_rank(span: F2Matrix, base: F2Matrix) -> int:
    """dim((span + base) / base), i.e. rank([span | base]) - rank(base)."""
    if span.rows != base.rows:
        raise DimensionMismatchError(
            f"row counts differ: {span.rows} != {base.rows}"
        )
    table = PivotTable()
    for bits in base.columns:
        table.insert(bits)
    extra = 0
    for bits in span.columns:
        if table.insert(bits) is not None:
            extra += 1
    return extra


def member(basis: F2Matrix, v: F2Vector) -> bool:
    """True iff v lies in the column span of basis."""
    if basis.rows != v.n:
        raise DimensionMismatchError(
            f"vector length {v.n} != row count {basis.rows}"
        )
    table = PivotTable()
    for bits in basis.columns:
        table.insert(bits)
    return table.reduce(v.bits) == 0


def nullspace(matrix: F2Matrix) -> list[F2Vector]:
    """Basis of {x : matrix @ x = 0}, as coefficient vectors over columns."""
    table = PivotTable()
    companions: dict[int, int] = {}
    out = []
    for j, bits in enumerate(matrix.columns):
        comp = 1 << j
        while bits:
            p = _low(bits)
            col = table._cols.get(p)
            if col is None:
                break
            bits ^= col
            comp ^= companions[p]
        if bits == 0:
            out.append(F2Vector(matrix.ncols, comp))
        else:
            p = _low(bits)
            table._cols[p] = bits
            companions[p] = comp
    return out
