"""Dense matrices over a division ring and the biring operations on them.

Positions are 1-based in every public signature, to match the way rows and
columns are numbered in the mathematics; ``Matrix.data`` is the plain 0-based
tuple-of-tuples used internally.

Two products are provided. The rc-product is the usual one,
``(A ⊛ B)(r, c) = Σ_k A(r, k)·B(k, c)``. The cr-product pairs columns of the
left factor with rows of the right one, ``(A ⊛' B)(r, c) = Σ_k A(k, c)·B(r, k)``,
keeping the left factor first in each term. Over a field the second is just
the first with its operands swapped; over the quaternions it is not.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    EmptyMinor,
    IndexOutOfBounds,
    InvalidDimension,
    NonSquare,
    ZeroEntry,
)
from .scalars import RATIONAL, Ring, ring_of, scalar_inv

__all__ = [
    "Matrix",
    "IndexSet",
    "MinorSpec",
    "Mode",
    "ProductKind",
    "Side",
    "kronecker_delta",
    "zeros",
    "transpose",
    "add",
    "sub",
    "neg",
    "rc_product",
    "cr_product",
    "cr_product_via_transpose",
    "product",
    "power",
    "scalar_mul",
    "minor",
    "delete_row_col",
    "hadamard_inverse",
]


class ProductKind(str, enum.Enum):
    RC = "rc"
    CR = "cr"


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Mode(str, enum.Enum):
    SELECT = "select"
    DELETE = "delete"


class Matrix:
    """Immutable dense ``rows × cols`` matrix with entries in ``ring``."""

    __slots__ = ("ring", "rows", "cols", "data", "_hash")

    def __init__(self, data: Iterable[Iterable], ring: Ring | None = None, *,
                 rows: int | None = None, cols: int | None = None):
        table = [list(row) for row in data]
        if ring is None:
            ring = ring_of(table[0][0]) if table and table[0] else RATIONAL
        nrows = len(table) if rows is None else rows
        ncols = (len(table[0]) if table else 0) if cols is None else cols
        if len(table) != nrows or any(len(row) != ncols for row in table):
            raise DimensionMismatch(
                f"entries do not form a {nrows}×{ncols} table")
        coerce = ring.coerce
        self.ring = ring
        self.rows = nrows
        self.cols = ncols
        self.data = tuple(tuple(coerce(x) for x in row) for row in table)
        self._hash = None

    @classmethod
    def _trusted(cls, data, ring, rows, cols):
        m = object.__new__(cls)
        m.ring, m.rows, m.cols, m.data, m._hash = ring, rows, cols, data, None
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, pos):
        r, c = pos
        if not (1 <= r <= self.rows and 1 <= c <= self.cols):
            raise IndexOutOfBounds(f"position {pos} outside {self.rows}×{self.cols}")
        return self.data[r - 1][c - 1]

    def tolist(self) -> list[list]:
        return [list(row) for row in self.data]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.data))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.data)
        return f"Matrix({self.ring.name}, [{body}])"

    # operator sugar; the module functions are the canonical entry points
    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return neg(self)

    def __matmul__(self, other):
        return rc_product(self, other)

    @property
    def T(self) -> "Matrix":
        return transpose(self)


def _same_ring(a: Matrix, b: Matrix) -> Ring:
    # a rational matrix mixed with a quaternion one lifts to quaternions
    return a.ring if a.ring is b.ring or b.ring is RATIONAL else b.ring


def _require_square(a: Matrix, what: str) -> int:
    if not a.is_square:
        raise NonSquare(f"{what} needs a square matrix, got {a.rows}×{a.cols}")
    return a.rows


def kronecker_delta(n: int, ring: Ring = RATIONAL) -> Matrix:
    """``n × n`` identity, shared by both products."""
    if n < 1:
        raise InvalidDimension(f"Kronecker symbol of size {n}")
    zero, one = ring.zero, ring.one
    return Matrix._trusted(
        tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)),
        ring, n, n)


def zeros(rows: int, cols: int, ring: Ring = RATIONAL) -> Matrix:
    zero = ring.zero
    return Matrix._trusted(tuple((zero,) * cols for _ in range(rows)), ring, rows, cols)


def transpose(a: Matrix) -> Matrix:
    return Matrix._trusted(tuple(zip(*a.data)) if a.rows else (), a.ring, a.cols, a.rows)


def add(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot add {a.shape} and {b.shape}")
    ring = _same_ring(a, b)
    data = tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.data, b.data))
    if ring is not a.ring:
        return Matrix(data, ring)
    return Matrix._trusted(data, ring, a.rows, a.cols)


def neg(a: Matrix) -> Matrix:
    return Matrix._trusted(tuple(tuple(-x for x in row) for row in a.data),
                           a.ring, a.rows, a.cols)


def sub(a: Matrix, b: Matrix) -> Matrix:
    return add(a, neg(b))


def _rc(adata, bdata, ring, n, k, m) -> tuple:
    zero = ring.zero
    bcols = list(zip(*bdata)) if k else [()] * m
    out = []
    for row in adata:
        line = []
        for col in bcols:
            s = zero
            for x, y in zip(row, col):
                s = s + x * y
            line.append(s)
        out.append(tuple(line))
    return tuple(out)


def rc_product(a: Matrix, b: Matrix) -> Matrix:
    """``(A ⊛ B)(r, c) = Σ_k A(r, k)·B(k, c)``."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"rc-product of {a.shape} and {b.shape}")
    ring = _same_ring(a, b)
    if ring is not a.ring or ring is not b.ring:
        a, b = Matrix(a.data, ring), Matrix(b.data, ring)
    return Matrix._trusted(_rc(a.data, b.data, ring, a.rows, a.cols, b.cols),
                           ring, a.rows, b.cols)


def cr_product(a: Matrix, b: Matrix) -> Matrix:
    """``(A ⊛' B)(r, c) = Σ_k A(k, c)·B(r, k)``, summed directly.

    The result has ``rows(B)`` rows and ``cols(A)`` columns; the summation
    index runs over the rows of ``A`` and the columns of ``B``.
    """
    if a.rows != b.cols:
        raise DimensionMismatch(f"cr-product of {a.shape} and {b.shape}")
    ring = _same_ring(a, b)
    if ring is not a.ring or ring is not b.ring:
        a, b = Matrix(a.data, ring), Matrix(b.data, ring)
    zero = ring.zero
    acols = list(zip(*a.data)) if a.rows else [()] * a.cols
    out = []
    for brow in b.data:
        line = []
        for acol in acols:
            s = zero
            for x, y in zip(acol, brow):
                s = s + x * y
            line.append(s)
        out.append(tuple(line))
    return Matrix._trusted(tuple(out), ring, b.rows, a.cols)


def cr_product_via_transpose(a: Matrix, b: Matrix) -> Matrix:
    """Second route to the cr-product: ``(Aᵀ ⊛ Bᵀ)ᵀ``."""
    return transpose(rc_product(transpose(a), transpose(b)))


def product(kind, a: Matrix, b: Matrix) -> Matrix:
    kind = ProductKind(kind)
    return rc_product(a, b) if kind is ProductKind.RC else cr_product(a, b)


def power(kind, a: Matrix, n: int) -> Matrix:
    """``A^0 = δ`` and ``A^n = A^(n-1) ∗ A`` under the chosen product."""
    size = _require_square(a, "power")
    if n < 0:
        raise InvalidDimension(f"negative power {n}")
    result = kronecker_delta(size, a.ring)
    for _ in range(n):
        result = product(kind, result, a)
    return result


def scalar_mul(side, m, a: Matrix) -> Matrix:
    """Multiply every entry by ``m`` on the given side (``m·x`` or ``x·m``)."""
    side = Side(side)
    ring = a.ring if a.ring is not RATIONAL else ring_of(m)
    m = ring.coerce(m)
    if side is Side.LEFT:
        data = tuple(tuple(m * x for x in row) for row in a.data)
    else:
        data = tuple(tuple(x * m for x in row) for row in a.data)
    return Matrix(data, ring, rows=a.rows, cols=a.cols)


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing tuple of 1-based positions."""

    positions: tuple[int, ...]

    def __init__(self, positions: Iterable[int]):
        pos = tuple(int(p) for p in positions)
        if any(p < 1 for p in pos):
            raise IndexOutOfBounds(f"positions must be ≥ 1: {pos}")
        if len(set(pos)) != len(pos):
            raise ValueError(f"duplicate positions in {pos}")
        object.__setattr__(self, "positions", tuple(sorted(pos)))

    def __iter__(self):
        return iter(self.positions)

    def __len__(self):
        return len(self.positions)

    def check_bound(self, bound: int, what: str) -> None:
        if self.positions and self.positions[-1] > bound:
            raise IndexOutOfBounds(
                f"{what} position {self.positions[-1]} exceeds {bound}")

    def complement(self, bound: int) -> "IndexSet":
        keep = set(self.positions)
        return IndexSet(p for p in range(1, bound + 1) if p not in keep)


@dataclass(frozen=True)
class MinorSpec:
    """Which rows and columns survive. The default deletes nothing."""

    row_mode: Mode = Mode.DELETE
    row_set: IndexSet = IndexSet(())
    col_mode: Mode = Mode.DELETE
    col_set: IndexSet = IndexSet(())

    @classmethod
    def deleting(cls, rows: Sequence[int] = (), cols: Sequence[int] = ()) -> "MinorSpec":
        return cls(Mode.DELETE, IndexSet(rows), Mode.DELETE, IndexSet(cols))

    @classmethod
    def selecting(cls, rows: Sequence[int], cols: Sequence[int]) -> "MinorSpec":
        return cls(Mode.SELECT, IndexSet(rows), Mode.SELECT, IndexSet(cols))

    def resolve(self, rows: int, cols: int) -> tuple[IndexSet, IndexSet]:
        """Surviving row and column positions for a ``rows × cols`` matrix."""
        self.row_set.check_bound(rows, "row")
        self.col_set.check_bound(cols, "column")
        keep_r = self.row_set if Mode(self.row_mode) is Mode.SELECT else self.row_set.complement(rows)
        keep_c = self.col_set if Mode(self.col_mode) is Mode.SELECT else self.col_set.complement(cols)
        return keep_r, keep_c


def minor(a: Matrix, spec: MinorSpec) -> Matrix:
    keep_r, keep_c = spec.resolve(a.rows, a.cols)
    if not len(keep_r) or not len(keep_c):
        raise EmptyMinor("minor selects no rows or no columns")
    data = tuple(tuple(a.data[r - 1][c - 1] for c in keep_c) for r in keep_r)
    return Matrix._trusted(data, a.ring, len(keep_r), len(keep_c))


def delete_row_col(a: Matrix, r: int, c: int) -> Matrix:
    """Minor with row ``r`` and column ``c`` removed (may be 0×0 only via this helper)."""
    if not (1 <= r <= a.rows and 1 <= c <= a.cols):
        raise IndexOutOfBounds(f"position ({r}, {c}) outside {a.rows}×{a.cols}")
    data = tuple(tuple(x for j, x in enumerate(row) if j != c - 1)
                 for i, row in enumerate(a.data) if i != r - 1)
    return Matrix._trusted(data, a.ring, a.rows - 1, a.cols - 1)


def hadamard_inverse(a: Matrix) -> Matrix:
    """Entrywise inverse with rows and columns exchanged: ``H(A)(r, c) = A(c, r)⁻¹``."""
    for i, row in enumerate(a.data):
        for j, x in enumerate(row):
            if x == 0:
                raise ZeroEntry((i + 1, j + 1))
    data = tuple(tuple(scalar_inv(a.data[c][r]) for c in range(a.rows))
                 for r in range(a.cols))
    return Matrix._trusted(data, a.ring, a.cols, a.rows)
