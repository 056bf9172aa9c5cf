"""Seeded random matrices for property sweeps."""

from __future__ import annotations

import random

from .errors import NotInvertible
from .matrix import Matrix
from .quasidet import rc_inverse
from .scalars import QUATERNION, Quaternion, Ring

# A ⊛ B = B ⊛' A fails for this pair: the (1, 1) entries are i·j = k and j·i = −k.
WITNESS_A = Matrix([[Quaternion(0, 1, 0, 0)]], QUATERNION)
WITNESS_B = Matrix([[Quaternion(0, 0, 1, 0)]], QUATERNION)


def random_matrix(rng: random.Random, ring: Ring, rows: int, cols: int | None = None,
                  bound: int = 3, den: int = 1) -> Matrix:
    cols = rows if cols is None else cols
    return Matrix([[ring.random(rng, bound, den) for _ in range(cols)] for _ in range(rows)],
                  ring)


def random_invertible(rng: random.Random, ring: Ring, n: int, bound: int = 3,
                      den: int = 1, tries: int = 1000) -> Matrix:
    for _ in range(tries):
        a = random_matrix(rng, ring, n, n, bound, den)
        try:
            rc_inverse(a)
        except NotInvertible:
            continue
        return a
    raise RuntimeError(f"no invertible {n}×{n} sample in {tries} tries")
