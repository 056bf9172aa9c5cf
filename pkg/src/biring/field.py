"""The commutative case: determinants and the identities of a reducible biring.

Over a field the quasideterminant collapses to a signed ratio of determinants,

    |A|(r, c) = (−1)^(r+c) · det A / det A[r̂, ĉ],

which gives an exact oracle that shares no code with the noncommutative
quasideterminant routines.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import DimensionMismatch, IndexOutOfBounds, NonSquare, RingMismatch
from .matrix import Matrix, cr_product, rc_product, transpose
from .quasidet import QuasidetOutcome, cr_inverse, rc_inverse
from .report import Report
from .scalars import RATIONAL

__all__ = [
    "determinant",
    "det_ratio_quasidet",
    "check_reducibility",
    "field_coincidence_report",
]


def _require_field(a: Matrix) -> None:
    if not a.ring.commutative:
        raise RingMismatch(f"determinant is defined only over a field, not {a.ring.name}")


def _cofactor_det(data, rows: tuple, cols: tuple, column: int, memo: dict) -> Fraction:
    """Expansion of the minor on ``rows × cols`` along its ``column``-th column (0-based)."""
    if not rows:
        return Fraction(1)
    key = (rows, cols)
    if column == 0 and key in memo:
        return memo[key]
    j = cols[column]
    rest = cols[:column] + cols[column + 1:]
    total = Fraction(0)
    for pos, i in enumerate(rows):
        x = data[i][j]
        if not x:
            continue
        sub = _cofactor_det(data, rows[:pos] + rows[pos + 1:], rest, 0, memo)
        term = x * sub
        total = total - term if (pos + column) % 2 else total + term
    if column == 0:
        memo[key] = total
    return total


def determinant(a: Matrix, column: int = 1) -> Fraction:
    """Cofactor expansion along ``column`` (1-based); ``det`` of 0×0 is 1.

    Sub-determinants are always expanded along their first column and cached
    by their row and column sets, so the cost is O(n·2ⁿ) rather than O(n!).
    """
    _require_field(a)
    if not a.is_square:
        raise NonSquare(f"determinant of {a.rows}×{a.cols}")
    n = a.rows
    if n == 0:
        return Fraction(1)
    if not 1 <= column <= n:
        raise IndexOutOfBounds(f"expansion column {column} outside 1..{n}")
    full = tuple(range(n))
    return _cofactor_det(a.data, full, full, column - 1, {})


def det_ratio_quasidet(a: Matrix, r: int, c: int) -> QuasidetOutcome:
    """``(−1)^(r+c)·det A / det(A without row r, column c)``; undefined when the minor is singular."""
    _require_field(a)
    if not a.is_square:
        raise NonSquare(f"quasideterminant of {a.rows}×{a.cols}")
    n = a.rows
    if not (1 <= r <= n and 1 <= c <= n):
        raise IndexOutOfBounds(f"position ({r}, {c}) outside {n}×{n}")
    full = tuple(range(n))
    memo: dict = {}
    rows = tuple(i for i in full if i != r - 1)
    cols = tuple(j for j in full if j != c - 1)
    denom = _cofactor_det(a.data, rows, cols, 0, memo)
    if denom == 0:
        return QuasidetOutcome.fail((r, c), f"minor deleting row {r}, column {c} "
                                            "has determinant 0")
    num = _cofactor_det(a.data, full, full, 0, memo)
    sign = -1 if (r + c) % 2 else 1
    return QuasidetOutcome.of(sign * num / denom)


def check_reducibility(a: Matrix, b: Matrix) -> bool:
    """``A ⊛ B = B ⊛' A``. Always true over a field; any ring is accepted."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"reducibility check on {a.shape} and {b.shape}")
    return rc_product(a, b) == cr_product(b, a)


def field_coincidence_report(a: Matrix, b: Matrix | None = None, *,
                             rng: random.Random | None = None, samples: int = 3) -> Report:
    """Check the identities that hold in a reducible biring.

    ``A^{⊛'-1} = A^{⊛-1}`` for ``A`` itself, and both transpose-reversal laws
    for ``B`` (when given) plus ``samples`` random rational partners.
    """
    report = Report()
    report.compare("cr-inverse = rc-inverse", cr_inverse(a), rc_inverse(a))
    partners = [b] if b is not None else []
    rng = rng or random.Random(0)
    for _ in range(samples):
        partners.append(Matrix([[RATIONAL.random(rng, 4, 3) for _ in range(a.cols)]
                                for _ in range(a.rows)], RATIONAL))
    rc_ok, cr_ok = [], []
    for p in partners:
        lhs, rhs = transpose(rc_product(a, p)), rc_product(transpose(p), transpose(a))
        rc_ok.append(lhs == rhs)
        lhs, rhs = transpose(cr_product(a, p)), cr_product(transpose(p), transpose(a))
        cr_ok.append(lhs == rhs)
    report.record("(A⊛B)ᵀ = Bᵀ⊛Aᵀ", all(rc_ok),
                  f"fails for partner #{rc_ok.index(False)}" if not all(rc_ok) else "")
    report.record("(A⊛'B)ᵀ = Bᵀ⊛'Aᵀ", all(cr_ok),
                  f"fails for partner #{cr_ok.index(False)}" if not all(cr_ok) else "")
    return report
