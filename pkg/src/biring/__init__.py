"""Exact matrix biring over a division ring: dual products, inverses, quasideterminants."""

from .errors import (
    BiringError,
    DimensionMismatch,
    DivisionByZero,
    EmptyMinor,
    IndexOutOfBounds,
    InvalidDimension,
    NonSquare,
    NotInvertible,
    ParseError,
    RingMismatch,
    SizeLimit,
    UnknownCommand,
    ZeroDenominator,
    ZeroEntry,
)
from .field import check_reducibility, det_ratio_quasidet, determinant, field_coincidence_report
from .matrix import (
    IndexSet,
    Matrix,
    MinorSpec,
    add,
    cr_product,
    cr_product_via_transpose,
    delete_row_col,
    hadamard_inverse,
    kronecker_delta,
    minor,
    power,
    product,
    rc_product,
    scalar_mul,
    sub,
    transpose,
    zeros,
)
from .quasidet import (
    InverseAlgorithm,
    QuasidetOutcome,
    Undefined,
    cancel_right_factor,
    check_scalar_inverse_laws,
    cr_inverse,
    cr_inverse_direct,
    cr_quasideterminant,
    cr_quasideterminant_direct,
    quasidet_by_recursion,
    quasideterminant,
    quasideterminant_matrix,
    rc_inverse,
    rc_quasideterminant,
)
from .scalars import (
    QUATERNION,
    RATIONAL,
    Quaternion,
    Ring,
    quaternion_inv,
    quaternion_mul,
    rational_normalize,
    scalar_inv,
)
from .verify import verify_suite

__version__ = "0.1.0"
