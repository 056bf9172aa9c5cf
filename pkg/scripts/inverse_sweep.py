"""Time the three rc-inverse algorithms on random matrices and check they agree.

    python scripts/inverse_sweep.py --ring quaternion --sizes 1 2 3 4 5 --samples 50
"""

import argparse
import random
import time
from dataclasses import dataclass, field

from biring import InverseAlgorithm, kronecker_delta, rc_product
from biring.quasidet import rc_inverse
from biring.sampling import random_invertible
from biring.scalars import get_ring


@dataclass
class SweepConfig:
    ring: str = "quaternion"
    sizes: list[int] = field(default_factory=lambda: [1, 2, 3, 4, 5])
    samples: int = 50
    bound: int = 3
    seed: int = 0


def run(cfg: SweepConfig) -> list[dict]:
    ring = get_ring(cfg.ring)
    rng = random.Random(cfg.seed)
    rows = []
    for n in cfg.sizes:
        delta = kronecker_delta(n, ring)
        timings = {alg: 0.0 for alg in InverseAlgorithm}
        disagreements = 0
        for _ in range(cfg.samples):
            a = random_invertible(rng, ring, n, bound=cfg.bound)
            results = []
            for alg in InverseAlgorithm:
                t0 = time.perf_counter()
                results.append(rc_inverse(a, alg))
                timings[alg] += time.perf_counter() - t0
            ref = results[0]
            if any(r != ref for r in results) or rc_product(a, ref) != delta:
                disagreements += 1
        rows.append({"n": n, "disagreements": disagreements,
                     **{alg.value: timings[alg] / cfg.samples * 1e3 for alg in InverseAlgorithm}})
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--ring", default="quaternion", choices=["rational", "quaternion"])
    p.add_argument("--sizes", type=int, nargs="+", default=[1, 2, 3, 4, 5])
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    cfg = SweepConfig(**vars(p.parse_args()))
    print(f"{'n':>3} {'quasidet ms':>12} {'schur ms':>10} {'elim ms':>9} {'mismatch':>9}")
    for row in run(cfg):
        print(f"{row['n']:>3} {row['quasidet']:>12.2f} {row['schur']:>10.2f} "
              f"{row['elim']:>9.2f} {row['disagreements']:>9}")


if __name__ == "__main__":
    main()
