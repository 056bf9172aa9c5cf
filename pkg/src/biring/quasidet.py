"""Quasideterminants and matrix inverses over a division ring.

Conventions, with 1-based positions:

* ``rc_quasideterminant(A, r, c)`` is
  ``A(r, c) − Σ A(r, c')·M⁻¹(c', r')·A(r', c)`` where ``M`` deletes row ``r`` and
  column ``c`` of ``A`` and ``M⁻¹`` is its rc-inverse (rows of ``M⁻¹`` are
  addressed by the columns of ``A`` and vice versa).
* The rc-inverse is the Hadamard inverse of the quasideterminant table:
  ``A⁻¹(c, r) = |A|(r, c)⁻¹``.
* A quasideterminant is *undefined* when ``M`` has no inverse. A quasideterminant
  equal to zero is defined, but then ``A`` itself is singular.

Three inversion algorithms are available and are expected to agree exactly:
the quasideterminant table, a recursive pivot/Schur-complement split, and
Gauss-Jordan elimination with left row scaling.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import IndexOutOfBounds, NonSquare, NotInvertible, SizeLimit
from .matrix import (
    Matrix,
    cr_product,
    kronecker_delta,
    rc_product,
    scalar_mul,
    transpose,
)
from .report import Report
from .scalars import scalar_inv

__all__ = [
    "Undefined",
    "QuasidetOutcome",
    "InverseAlgorithm",
    "rc_quasideterminant",
    "cr_quasideterminant",
    "cr_quasideterminant_direct",
    "quasideterminant",
    "quasideterminant_matrix",
    "quasidet_by_recursion",
    "rc_inverse",
    "cr_inverse",
    "cr_inverse_direct",
    "check_scalar_inverse_laws",
    "cancel_right_factor",
]

RECURSION_LIMIT = 5


@dataclass(frozen=True)
class Undefined:
    position: tuple[int, int]
    cause: str


@dataclass(frozen=True)
class QuasidetOutcome:
    """Either a scalar ``value`` or an ``undefined`` marker, never both."""

    value: object = None
    undefined: Optional[Undefined] = None

    def __post_init__(self):
        if (self.value is None) == (self.undefined is None):
            raise ValueError("exactly one of value/undefined must be set")

    @classmethod
    def of(cls, value) -> "QuasidetOutcome":
        return cls(value=value)

    @classmethod
    def fail(cls, position, cause: str) -> "QuasidetOutcome":
        return cls(undefined=Undefined(tuple(position), cause))

    @property
    def is_defined(self) -> bool:
        return self.undefined is None

    def __repr__(self):
        if self.is_defined:
            return f"QuasidetOutcome({self.value})"
        return f"QuasidetOutcome(undefined at {self.undefined.position}: {self.undefined.cause})"


class InverseAlgorithm(str, enum.Enum):
    VIA_QUASIDET = "quasidet"
    SCHUR = "schur"
    ELIMINATION = "elim"

    @classmethod
    def parse(cls, name) -> "InverseAlgorithm":
        if isinstance(name, cls):
            return name
        aliases = {"via-quasidet": cls.VIA_QUASIDET, "elimination": cls.ELIMINATION}
        return aliases.get(name) or cls(name)


def _check_square(a: Matrix, what: str) -> int:
    if not a.is_square:
        raise NonSquare(f"{what} needs a square matrix, got {a.rows}×{a.cols}")
    return a.rows


def _check_position(a: Matrix, r: int, c: int) -> None:
    if not (1 <= r <= a.rows and 1 <= c <= a.cols):
        raise IndexOutOfBounds(f"position ({r}, {c}) outside {a.rows}×{a.cols}")


# --- elimination -----------------------------------------------------------

def _eliminate(rows, one, zero, opposite=False):
    """Gauss-Jordan on a list-of-lists; returns the inverse as lists.

    Row operations act by multiplication on the left, so the result ``E``
    satisfies ``E ⊛ A = δ``. With ``opposite=True`` every product ``x·y`` is
    replaced by ``y·x``: the same procedure then runs in the opposite ring,
    where ``E ⊛ A = δ`` reads ``A ⊛' E = δ``.
    """
    n = len(rows)
    a = [list(r) for r in rows]
    e = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise NotInvertible(f"no nonzero pivot in column {col + 1}",
                                witness=("pivot", col + 1))
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            e[col], e[piv] = e[piv], e[col]
        p = scalar_inv(a[col][col])
        if opposite:
            a[col] = [x * p for x in a[col]]
            e[col] = [x * p for x in e[col]]
        else:
            a[col] = [p * x for x in a[col]]
            e[col] = [p * x for x in e[col]]
        arow, erow = a[col], e[col]
        for i in range(n):
            f = a[i][col]
            if i == col or not f:
                continue
            if opposite:
                a[i] = [x - y * f for x, y in zip(a[i], arow)]
                e[i] = [x - y * f for x, y in zip(e[i], erow)]
            else:
                a[i] = [x - f * y for x, y in zip(a[i], arow)]
                e[i] = [x - f * y for x, y in zip(e[i], erow)]
    return e


# --- recursive pivot / Schur complement ---------------------------------------

def _schur(a, depth=1):
    """Invert by splitting off the first row and column.

    With pivot ``p`` (after swapping a row with nonzero first entry to the
    top), row ``b``, column ``c`` and block ``D``, the complement is
    ``S = D − c·p⁻¹·b`` and ``S⁻¹`` is exactly the block of the inverse that
    deletes the pivot row and column. The remaining blocks follow from it.
    """
    n = len(a)
    piv = next((i for i in range(n) if a[i][0]), None)
    if piv is None:
        raise NotInvertible(f"singular pivot block at depth {depth}",
                            witness=("pivot", depth))
    if piv:
        a = list(a)
        a[0], a[piv] = a[piv], a[0]
    p = scalar_inv(a[0][0])
    if n == 1:
        return [[p]]
    b = a[0][1:]
    u = [p * x for x in b]                      # p⁻¹·b
    v = [a[i][0] * p for i in range(1, n)]      # c·p⁻¹
    s = [[a[i][j] - v[i - 1] * b[j - 1] for j in range(1, n)] for i in range(1, n)]
    s_inv = _schur(s, depth + 1)
    m = n - 1
    zero = p - p
    top = []
    for j in range(m):
        acc = zero
        for k in range(m):
            acc = acc + u[k] * s_inv[k][j]
        top.append(-acc)
    left = []
    for i in range(m):
        acc = zero
        for k in range(m):
            acc = acc + s_inv[i][k] * v[k]
        left.append(-acc)
    corner = p
    for k in range(m):
        corner = corner - u[k] * left[k]
    out = [[corner] + top] + [[left[i]] + list(s_inv[i]) for i in range(m)]
    if piv:
        # inverse of P·A is A⁻¹·P⁻¹; undo by swapping the matching columns
        for row in out:
            row[0], row[piv] = row[piv], row[0]
    return out


# --- quasideterminants --------------------------------------------------------

def _minor_rows(a: Matrix, r: int, c: int):
    return [[x for j, x in enumerate(row) if j != c] for i, row in enumerate(a.data) if i != r]


def rc_quasideterminant(a: Matrix, r: int, c: int) -> QuasidetOutcome:
    n = _check_square(a, "quasideterminant")
    _check_position(a, r, c)
    r0, c0 = r - 1, c - 1
    if n == 1:
        return QuasidetOutcome.of(a.data[r0][c0])
    try:
        inv = _eliminate(_minor_rows(a, r0, c0), a.ring.one, a.ring.zero)
    except NotInvertible as exc:
        return QuasidetOutcome.fail((r, c), f"minor deleting row {r}, column {c} "
                                            f"is not invertible ({exc})")
    # inv rows follow the columns c' != c, inv columns the rows r' != r
    row_r = [x for j, x in enumerate(a.data[r0]) if j != c0]
    col_c = [a.data[i][c0] for i in range(n) if i != r0]
    total = a.data[r0][c0]
    for k, x in enumerate(row_r):
        for l, y in enumerate(col_c):
            total = total - x * inv[k][l] * y
    return QuasidetOutcome.of(total)


def cr_quasideterminant(a: Matrix, r: int, c: int) -> QuasidetOutcome:
    """cr-quasideterminant, by reduction to the rc one of the transpose."""
    _check_square(a, "quasideterminant")
    _check_position(a, r, c)
    out = rc_quasideterminant(transpose(a), c, r)
    if out.is_defined:
        return out
    return QuasidetOutcome.fail((r, c), out.undefined.cause.replace(
        f"row {c}, column {r}", f"row {r}, column {c}"))


def cr_quasideterminant_direct(a: Matrix, r: int, c: int) -> QuasidetOutcome:
    """``A(r, c) − Σ A(r', c)·X(c', r')·A(r, c')`` with ``X`` the cr-inverse of the minor.

    This is the defining rc formula read from right to left, evaluated
    without any transposition; used to cross-check ``cr_quasideterminant``.
    """
    n = _check_square(a, "quasideterminant")
    _check_position(a, r, c)
    r0, c0 = r - 1, c - 1
    if n == 1:
        return QuasidetOutcome.of(a.data[r0][c0])
    try:
        inv = _eliminate(_minor_rows(a, r0, c0), a.ring.one, a.ring.zero, opposite=True)
    except NotInvertible as exc:
        return QuasidetOutcome.fail((r, c), f"minor deleting row {r}, column {c} "
                                            f"is not invertible ({exc})")
    col_c = [a.data[i][c0] for i in range(n) if i != r0]
    row_r = [x for j, x in enumerate(a.data[r0]) if j != c0]
    total = a.data[r0][c0]
    for l, x in enumerate(col_c):
        for k, y in enumerate(row_r):
            total = total - x * inv[k][l] * y
    return QuasidetOutcome.of(total)


def quasideterminant(kind, a: Matrix, r: int, c: int) -> QuasidetOutcome:
    if kind == "rc":
        return rc_quasideterminant(a, r, c)
    if kind == "cr":
        return cr_quasideterminant(a, r, c)
    raise ValueError(f"unknown quasideterminant kind {kind!r}")


def quasideterminant_matrix(kind, a: Matrix) -> tuple[tuple[QuasidetOutcome, ...], ...]:
    n = _check_square(a, "quasideterminant")
    return tuple(tuple(quasideterminant(kind, a, r, c) for c in range(1, n + 1))
                 for r in range(1, n + 1))


def quasidet_by_recursion(a: Matrix, r: int, c: int) -> QuasidetOutcome:
    """Quasideterminant built only from nested quasideterminants.

    Each ``M⁻¹(c', r')`` in the defining sum is replaced by the inverse of the
    ``(r', c')`` quasideterminant of ``M``, all the way down to 1×1 blocks.
    No matrix is ever inverted, which makes this an independent oracle for
    ``rc_quasideterminant``. Factorial cost; capped at 5×5.
    """
    n = _check_square(a, "quasideterminant")
    _check_position(a, r, c)
    if n > RECURSION_LIMIT:
        raise SizeLimit(f"definitional recursion limited to {RECURSION_LIMIT}×"
                        f"{RECURSION_LIMIT}, got {n}×{n}")
    data = a.data
    memo: dict = {}

    def qd(rows, cols, i, j):
        key = (rows, cols, i, j)
        if key in memo:
            return memo[key]
        if len(rows) == 1:
            out = (data[i][j], None)
        else:
            sub_r = tuple(x for x in rows if x != i)
            sub_c = tuple(x for x in cols if x != j)
            total = data[i][j]
            out = None
            for jj in sub_c:
                for ii in sub_r:
                    val, why = qd(sub_r, sub_c, ii, jj)
                    if why is None and not val:
                        why = f"nested quasideterminant at ({ii + 1}, {jj + 1}) is zero"
                    if why is not None:
                        out = (None, why)
                        break
                    total = total - data[i][jj] * scalar_inv(val) * data[ii][j]
                if out is not None:
                    break
            if out is None:
                out = (total, None)
        memo[key] = out
        return out

    full = tuple(range(n))
    val, why = qd(full, full, r - 1, c - 1)
    if why is not None:
        return QuasidetOutcome.fail((r, c), why)
    return QuasidetOutcome.of(val)


# --- inverses -------------------------------------------------------------------

def _via_quasidet(a: Matrix):
    """Hadamard inverse of the quasideterminant table.

    An undefined cell ``(r, c)`` means the complementary minor is singular; when
    ``A`` is invertible that happens exactly when ``A⁻¹(c, r) = 0``, so the entry
    is filled with zero. The post-check in ``rc_inverse`` catches the case
    where ``A`` was singular after all.
    """
    n = a.rows
    table = quasideterminant_matrix("rc", a)
    zero = a.ring.zero
    out = [[zero] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            q = table[r][c]
            if not q.is_defined:
                continue
            if not q.value:
                raise NotInvertible(f"quasideterminant at ({r + 1}, {c + 1}) is zero",
                                    witness=("quasidet", (r + 1, c + 1)))
            out[c][r] = scalar_inv(q.value)
    return out


def rc_inverse(a: Matrix, alg="elim") -> Matrix:
    """Matrix ``X`` with ``A ⊛ X = X ⊛ A = δ``, by the requested algorithm.

    Both identities are checked on the result whatever algorithm produced it.
    """
    n = _check_square(a, "inverse")
    alg = InverseAlgorithm.parse(alg)
    ring = a.ring
    if alg is InverseAlgorithm.ELIMINATION:
        data = _eliminate(a.data, ring.one, ring.zero)
    elif alg is InverseAlgorithm.SCHUR:
        data = _schur([list(row) for row in a.data])
    else:
        data = _via_quasidet(a)
    inv = Matrix._trusted(tuple(tuple(row) for row in data), ring, n, n)
    delta = kronecker_delta(n, ring)
    if rc_product(a, inv) != delta or rc_product(inv, a) != delta:
        raise NotInvertible(f"{alg.value}: candidate inverse fails A⊛X = X⊛A = δ",
                            witness=("post-check", alg.value))
    return inv


def cr_inverse(a: Matrix, alg="elim") -> Matrix:
    """Matrix ``X`` with ``A ⊛' X = δ``, computed as ``(rc_inverse(Aᵀ))ᵀ``."""
    _check_square(a, "inverse")
    return transpose(rc_inverse(transpose(a), alg))


def cr_inverse_direct(a: Matrix) -> Matrix:
    """cr-inverse by elimination in the opposite ring, with no transposition."""
    n = _check_square(a, "inverse")
    ring = a.ring
    data = _eliminate(a.data, ring.one, ring.zero, opposite=True)
    inv = Matrix._trusted(tuple(tuple(row) for row in data), ring, n, n)
    delta = kronecker_delta(n, ring)
    if cr_product(a, inv) != delta or cr_product(inv, a) != delta:
        raise NotInvertible("candidate cr-inverse fails A⊛'X = X⊛'A = δ",
                            witness=("post-check", "cr"))
    return inv


# --- identities used as property checks ---------------------------------------

def check_scalar_inverse_laws(m, a: Matrix, alg="elim") -> Report:
    """Check ``(mA)⁻¹ = A⁻¹·m⁻¹`` and ``(Am)⁻¹ = m⁻¹·A⁻¹`` for the rc-inverse."""
    m_inv = scalar_inv(a.ring.coerce(m) if a.ring.contains(m) else m)
    base = rc_inverse(a, alg)
    report = Report()
    report.compare("(mA)^-1 = A^-1 m^-1",
                   rc_inverse(scalar_mul("left", m, a), alg),
                   scalar_mul("right", m_inv, base))
    report.compare("(Am)^-1 = m^-1 A^-1",
                   rc_inverse(scalar_mul("right", m, a), alg),
                   scalar_mul("left", m_inv, base))
    return report


def cancel_right_factor(b: Matrix, c: Matrix, a: Matrix) -> bool:
    """Whether ``B ⊛ A = C ⊛ A`` forces ``B = C`` once ``A⁻¹`` is applied on the right."""
    a_inv = rc_inverse(a)
    ba, ca = rc_product(b, a), rc_product(c, a)
    rb, rc = rc_product(ba, a_inv), rc_product(ca, a_inv)
    if rb != b or rc != c:
        return False
    return ba != ca or rb == rc
