"""Run every applicable identity against one or two concrete matrices."""

from __future__ import annotations

from .errors import DimensionMismatch, NonSquare, NotInvertible
from .field import (
    check_reducibility,
    det_ratio_quasidet,
    determinant,
    field_coincidence_report,
)
from .matrix import (
    Matrix,
    add,
    cr_product,
    cr_product_via_transpose,
    hadamard_inverse,
    kronecker_delta,
    power,
    rc_product,
    transpose,
)
from .quasidet import (
    InverseAlgorithm,
    cancel_right_factor,
    check_scalar_inverse_laws,
    cr_inverse,
    cr_inverse_direct,
    cr_quasideterminant_direct,
    quasidet_by_recursion,
    quasideterminant_matrix,
    rc_inverse,
)
from .report import Report
from .scalars import QUATERNION, Quaternion

MAX_POWER = 4
RECURSION_ORACLE_MAX = 4


def _algebra_checks(report: Report, a: Matrix, b: Matrix) -> None:
    n = a.rows
    delta = kronecker_delta(n, a.ring)
    report.compare("double transpose", transpose(transpose(a)), a)
    report.compare("δ transpose", transpose(delta), delta)
    report.record("δ is rc identity", rc_product(delta, a) == a == rc_product(a, delta))
    report.record("δ is cr identity", cr_product(delta, a) == a == cr_product(a, delta))
    report.compare("cr-product direct = via transpose",
                   cr_product(a, b), cr_product_via_transpose(a, b))
    report.compare("(A⊛B)ᵀ = Aᵀ⊛'Bᵀ", transpose(rc_product(a, b)),
                   cr_product(transpose(a), transpose(b)))
    report.compare("(A⊛'B)ᵀ = Aᵀ⊛Bᵀ", transpose(cr_product(a, b)),
                   rc_product(transpose(a), transpose(b)))
    # the duality swap A↔Aᵀ, ⊛↔⊛' applied to the two identities above
    report.compare("dual: (Aᵀ⊛'Bᵀ)ᵀ = A⊛B", transpose(cr_product(transpose(a), transpose(b))),
                   rc_product(a, b))
    report.compare("dual: (Aᵀ⊛Bᵀ)ᵀ = A⊛'B", transpose(rc_product(transpose(a), transpose(b))),
                   cr_product(a, b))
    for name, prod in (("rc", rc_product), ("cr", cr_product)):
        report.compare(f"{name}-product associative", prod(prod(a, b), a), prod(a, prod(b, a)))
        report.compare(f"{name}-product left distributive",
                       prod(a, add(a, b)), add(prod(a, a), prod(a, b)))
        report.compare(f"{name}-product right distributive",
                       prod(add(a, b), b), add(prod(a, b), prod(b, b)))
    at = transpose(a)
    for k in range(MAX_POWER + 1):
        report.compare(f"(Aᵀ)^(rc,{k}) = (A^(cr,{k}))ᵀ", power("rc", at, k),
                       transpose(power("cr", a, k)))
        report.compare(f"(Aᵀ)^(cr,{k}) = (A^(rc,{k}))ᵀ", power("cr", at, k),
                       transpose(power("rc", a, k)))


def _quasidet_checks(report: Report, a: Matrix) -> None:
    n = a.rows
    rc_table = quasideterminant_matrix("rc", a)
    cr_table_t = quasideterminant_matrix("cr", transpose(a))
    bad = [(r + 1, c + 1) for r in range(n) for c in range(n)
           if rc_table[r][c].is_defined != cr_table_t[c][r].is_defined
           or (rc_table[r][c].is_defined and rc_table[r][c].value != cr_table_t[c][r].value)]
    report.record("cr-quasidet(Aᵀ)(c,r) = rc-quasidet(A)(r,c)", not bad, f"cells {bad}")
    cr_table = quasideterminant_matrix("cr", a)
    bad = []
    for r in range(n):
        for c in range(n):
            direct = cr_quasideterminant_direct(a, r + 1, c + 1)
            if direct.is_defined != cr_table[r][c].is_defined or (
                    direct.is_defined and direct.value != cr_table[r][c].value):
                bad.append((r + 1, c + 1))
    report.record("cr-quasidet direct = via transpose", not bad, f"cells {bad}")
    if n <= RECURSION_ORACLE_MAX:
        bad = []
        for r in range(n):
            for c in range(n):
                rec = quasidet_by_recursion(a, r + 1, c + 1)
                if rec.is_defined and rc_table[r][c].is_defined and rec.value != rc_table[r][c].value:
                    bad.append((r + 1, c + 1))
        report.record("definitional recursion = rc-quasidet", not bad, f"cells {bad}")
    else:
        report.skip("definitional recursion = rc-quasidet", f"size {n} > {RECURSION_ORACLE_MAX}")


def _inverse_checks(report: Report, a: Matrix, b: Matrix | None) -> Matrix | None:
    results, failures = {}, {}
    for alg in InverseAlgorithm:
        try:
            results[alg] = rc_inverse(a, alg)
        except NotInvertible as exc:
            failures[alg] = str(exc)
    if not results:
        report.record("all inverse algorithms report NotInvertible", True)
        report.skip("inverse identities", "matrix is not invertible")
        return None
    report.record("every inverse algorithm succeeds", not failures,
                  "; ".join(f"{k.value}: {v}" for k, v in failures.items()))
    inv = results.get(InverseAlgorithm.ELIMINATION) or next(iter(results.values()))
    report.record("inverse algorithms agree", all(x == inv for x in results.values()))
    n = a.rows
    delta = kronecker_delta(n, a.ring)
    report.record("A⊛A⁻¹ = A⁻¹⊛A = δ", rc_product(a, inv) == delta == rc_product(inv, a))
    table = quasideterminant_matrix("rc", a)
    cells = [q for row in table for q in row]
    if all(q.is_defined and q.value for q in cells):
        qm = Matrix([[q.value for q in row] for row in table], a.ring)
        report.compare("A⁻¹ = H(quasidet table)", inv, hadamard_inverse(qm))
    else:
        report.skip("A⁻¹ = H(quasidet table)", "some quasideterminant undefined or zero")
    bad = [(r + 1, c + 1) for r in range(n) for c in range(n)
           if table[r][c].is_defined and table[r][c].value * inv.data[c][r] != a.ring.one]
    report.record("quasidet(r,c)·A⁻¹(c,r) = 1", not bad, f"cells {bad}")
    bad = [(r + 1, c + 1) for r in range(n) for c in range(n)
           if (not table[r][c].is_defined) != (inv.data[c][r] == 0)]
    report.record("undefined quasidet ⇔ zero inverse entry", not bad, f"cells {bad}")
    at = transpose(a)
    report.compare("(Aᵀ)^{⊛'-1} = (A^{⊛-1})ᵀ", cr_inverse(at), transpose(inv))
    report.compare("(Aᵀ)^{⊛-1} = (A^{⊛'-1})ᵀ", rc_inverse(at), transpose(cr_inverse(a)))
    report.compare("cr-inverse direct = via transpose", cr_inverse_direct(a), cr_inverse(a))
    scalars = [2]
    if a.ring is QUATERNION:
        scalars.append(Quaternion(1, 1, 0, 0))
    for m in scalars:
        for c in check_scalar_inverse_laws(m, a).checks:
            report.record(f"{c.name} [m={m}]", c.ok, c.detail)
    if b is not None:
        report.record("B⊛A = C⊛A cancels A (B, C = B, A)", cancel_right_factor(b, b, a)
                      and cancel_right_factor(b, a, a))
    return inv


def _field_checks(report: Report, a: Matrix, b: Matrix, inv: Matrix | None) -> None:
    names = ["A⊛B = B⊛'A", "quasidet = signed det ratio", "det(Aᵀ) = det(A)",
             "det independent of expansion column", "inverse in reducible biring"]
    if a.ring is QUATERNION or b.ring is QUATERNION:
        for name in names:
            report.skip(name, "ring is not commutative")
        return
    n = a.rows
    report.record(names[0], check_reducibility(a, b) and check_reducibility(b, a))
    table = quasideterminant_matrix("rc", a)
    bad = []
    for r in range(n):
        for c in range(n):
            ratio = det_ratio_quasidet(a, r + 1, c + 1)
            q = table[r][c]
            if ratio.is_defined != q.is_defined or (q.is_defined and q.value != ratio.value):
                bad.append((r + 1, c + 1))
    report.record(names[1], not bad, f"cells {bad}")
    d = determinant(a)
    report.record(names[2], determinant(transpose(a)) == d)
    report.record(names[3], all(determinant(a, col) == d for col in range(1, n + 1)))
    if inv is None:
        report.skip(names[4], "matrix is not invertible")
    else:
        for c in field_coincidence_report(a, b).checks:
            report.record(f"{names[4]}: {c.name}", c.ok, c.detail)


def verify_suite(a: Matrix, b: Matrix | None = None) -> Report:
    """All identities applicable to ``a`` (and the pair ``a, b`` when given)."""
    for m in (a, b):
        if m is not None and not m.is_square:
            raise NonSquare(f"verify needs square matrices, got {m.rows}×{m.cols}")
    if b is not None and b.shape != a.shape:
        raise DimensionMismatch(f"verify needs matrices of one size, got {a.shape} and {b.shape}")
    partner = a if b is None else b
    report = Report()
    _algebra_checks(report, a, partner)
    _quasidet_checks(report, a)
    inv = _inverse_checks(report, a, b)
    _field_checks(report, a, partner, inv)
    return report
