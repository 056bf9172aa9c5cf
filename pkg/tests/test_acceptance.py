"""Exit criteria for the package. Every comparison is exact equality.

Run alone with ``pytest tests/test_acceptance.py -s`` (one PASS/FAIL line per
criterion is also printed in the terminal summary), or directly with
``python3 tests/test_acceptance.py``.
"""

import json
import random
import tempfile
import time
from pathlib import Path

from biring import (
    QUATERNION,
    RATIONAL,
    InverseAlgorithm,
    Matrix,
    NotInvertible,
    add,
    check_reducibility,
    check_scalar_inverse_laws,
    cr_inverse,
    cr_product,
    det_ratio_quasidet,
    kronecker_delta,
    power,
    quasidet_by_recursion,
    quasideterminant_matrix,
    rc_inverse,
    rc_product,
    rc_quasideterminant,
    transpose,
)
from biring.cli import main
from biring.sampling import WITNESS_A, WITNESS_B, random_invertible, random_matrix

RESULTS = {}
SEED = 20240601


def criterion(number, name):
    """Wrap a check returning ``(failures, checked)``; record and assert it."""
    def wrap(fn):
        def run():
            start = time.perf_counter()
            failures, checked = fn(random.Random(SEED + number))
            ok = not failures and checked > 0
            detail = f"({checked} exact comparisons, {time.perf_counter() - start:.1f}s)"
            if failures:
                detail += f" first failure: {failures[0]}"
            RESULTS[number] = (name, ok, detail)
            print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} {detail}")
            assert ok, detail
        # no functools.wraps: pytest would then see the rng parameter as a fixture
        run.__name__ = fn.__name__
        return run
    return wrap


def _same(a, b):
    return a.is_defined == b.is_defined and (not a.is_defined or a.value == b.value)


@criterion(1, "quasideterminant = signed determinant ratio over the rationals")
def test_ratio_theorem_oracle(rng):
    failures, checked = [], 0
    for t in range(200):
        n = 2 + t % 5
        a = random_matrix(rng, RATIONAL, n, bound=3, den=rng.choice([1, 1, 2, 3]))
        for r in range(1, n + 1):
            for c in range(1, n + 1):
                qd, ratio = rc_quasideterminant(a, r, c), det_ratio_quasidet(a, r, c)
                if not _same(qd, ratio):
                    failures.append((a, r, c, qd, ratio))
                checked += qd.is_defined
    return failures, checked


@criterion(2, "quasidet / schur / elimination inverses agree and are two-sided")
def test_inverse_algorithm_agreement(rng):
    failures, checked = [], 0
    for n in range(1, 6):
        delta = kronecker_delta(n, QUATERNION)
        for _ in range(100):
            a = random_invertible(rng, QUATERNION, n)
            invs = [rc_inverse(a, alg) for alg in InverseAlgorithm]
            if not invs[0] == invs[1] == invs[2]:
                failures.append(("disagree", a))
            for inv in invs:
                if rc_product(a, inv) != delta or rc_product(inv, a) != delta:
                    failures.append(("not two-sided", a))
            checked += 1
    return failures, checked


@criterion(3, "biring axioms over the quaternions")
def test_biring_axioms(rng):
    failures, checked = [], 0
    for n in range(1, 6):
        delta = kronecker_delta(n, QUATERNION)
        for _ in range(100):
            a, b, c = (random_matrix(rng, QUATERNION, n) for _ in range(3))
            at, bt = transpose(a), transpose(b)
            identities = {
                "(A⊛B)ᵀ = Aᵀ⊛'Bᵀ": transpose(rc_product(a, b)) == cr_product(at, bt),
                "(A⊛'B)ᵀ = Aᵀ⊛Bᵀ": transpose(cr_product(a, b)) == rc_product(at, bt),
                "δ common identity": (rc_product(delta, a) == a == rc_product(a, delta)
                                      and cr_product(delta, a) == a == cr_product(a, delta)),
                "double transpose": transpose(at) == a,
            }
            for name, prod in (("rc", rc_product), ("cr", cr_product)):
                identities[f"{name} associative"] = prod(prod(a, b), c) == prod(a, prod(b, c))
                identities[f"{name} left distributive"] = \
                    prod(a, add(b, c)) == add(prod(a, b), prod(a, c))
                identities[f"{name} right distributive"] = \
                    prod(add(a, b), c) == add(prod(a, c), prod(b, c))
            for name, ok in identities.items():
                checked += 1
                if not ok:
                    failures.append((name, n))
    return failures, checked


@criterion(4, "duality: powers, inverses, quasideterminants")
def test_duality(rng):
    failures, checked = [], 0
    for n in range(1, 6):
        for _ in range(40):
            a = random_matrix(rng, QUATERNION, n)
            at = transpose(a)
            for k in range(5):
                checked += 1
                if power("rc", at, k) != transpose(power("cr", a, k)):
                    failures.append(("power", n, k))
        for _ in range(20):
            a = random_invertible(rng, QUATERNION, n)
            at = transpose(a)
            checked += 2
            if cr_inverse(at) != transpose(rc_inverse(a)):
                failures.append(("(Aᵀ)^{⊛'-1}", n))
            if rc_inverse(at) != transpose(cr_inverse(a)):
                failures.append(("(Aᵀ)^{⊛-1}", n))
            rc = quasideterminant_matrix("rc", a)
            cr_t = quasideterminant_matrix("cr", at)
            for r in range(n):
                for c in range(n):
                    checked += 1
                    if not _same(rc[r][c], cr_t[c][r]):
                        failures.append(("quasidet", n, r + 1, c + 1))
    return failures, checked


@criterion(5, "scalar laws for the rc-inverse with quaternion scalars")
def test_scalar_laws(rng):
    failures, checked = [], 0
    for t in range(50):
        n = 1 + t % 4
        a = random_invertible(rng, QUATERNION, n)
        m = QUATERNION.random(rng)
        while not m:
            m = QUATERNION.random(rng)
        report = check_scalar_inverse_laws(m, a)
        checked += len(report.checks)
        failures.extend(c.name for c in report.checks if not c.ok)
    return failures, checked


@criterion(6, "reducibility holds over the rationals and fails over the quaternions")
def test_reducibility_split(rng):
    failures, checked = [], 0
    for t in range(100):
        n = 1 + t % 5
        a = random_matrix(rng, RATIONAL, n, den=3)
        b = random_matrix(rng, RATIONAL, n, den=3)
        checked += 1
        if not check_reducibility(a, b):
            failures.append(("rational pair", a, b))
    checked += 1
    if check_reducibility(WITNESS_A, WITNESS_B):
        failures.append("quaternion counterexample did not fail")
    for t in range(50):
        a = random_invertible(rng, RATIONAL, 1 + t % 5, den=2)
        checked += 1
        if cr_inverse(a) != rc_inverse(a):
            failures.append(("cr-inverse != rc-inverse", a))
    return failures, checked


@criterion(7, "definitional recursion agrees with the rc-quasideterminant")
def test_recursion_oracle(rng):
    failures, checked = [], 0
    for n, count in ((3, 50), (4, 20)):
        for _ in range(count):
            a = random_matrix(rng, QUATERNION, n)
            for r in range(1, n + 1):
                for c in range(1, n + 1):
                    rec, qd = quasidet_by_recursion(a, r, c), rc_quasideterminant(a, r, c)
                    if rec.is_defined and qd.is_defined:
                        checked += 1
                        if rec.value != qd.value:
                            failures.append((a, r, c))
    return failures, checked


def _cli(tmp, name, data, argv):
    path = tmp / name
    path.write_text(json.dumps({"ring": "rational", "data": data}))
    return main([*argv, str(path)])


@criterion(8, "degenerate inputs and CLI exit codes")
def test_degenerate_handling(rng):
    failures, checked = [], 0
    ones = Matrix([[1, 1], [1, 1]])
    for row in quasideterminant_matrix("rc", ones):
        for q in row:
            checked += 1
            if not (q.is_defined and q.value == 0):
                failures.append(("all-ones quasidet", q))
    for alg in InverseAlgorithm:
        checked += 1
        try:
            rc_inverse(ones, alg)
            failures.append(("all-ones invertible", alg.value))
        except NotInvertible:
            pass
    table = quasideterminant_matrix("rc", kronecker_delta(2))
    for r, c in ((0, 1), (1, 0)):
        checked += 1
        if table[r][c].is_defined:
            failures.append(("δ₂ off-diagonal defined", r + 1, c + 1))

    with tempfile.TemporaryDirectory() as d:
        tmp = Path(d)
        a = [["1", "2"], ["3", "4"]]
        cases = [
            (0, "ok.json", a, ["quasidet", "--kind", "rc", "--row", "1", "--col", "1"]),
            (0, "inv.json", a, ["inverse", "--kind", "cr", "--alg", "quasidet"]),
            (2, "ones.json", [["1", "1"], ["1", "1"]], ["inverse", "--kind", "rc", "--alg", "schur"]),
            (2, "ones2.json", [["1", "1"], ["1", "1"]], ["inverse", "--alg", "elim"]),
            (2, "delta.json", [["1", "0"], ["0", "1"]], ["quasidet", "--row", "1", "--col", "2"]),
            (1, "bad.json", [["1", "x"]], ["transpose"]),
            (1, "usage.json", a, ["power", "--kind", "rc"]),
            (1, "unknown.json", a, ["frobnicate"]),
        ]
        for expected, name, data, argv in cases:
            checked += 1
            code = _cli(tmp, name, data, argv)
            if code != expected:
                failures.append(("exit code", argv, code, expected))
    return failures, checked


if __name__ == "__main__":
    import sys

    failed = 0
    for fn in (test_ratio_theorem_oracle, test_inverse_algorithm_agreement, test_biring_axioms,
               test_duality, test_scalar_laws, test_reducibility_split, test_recursion_oracle,
               test_degenerate_handling):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
