"""Compare rc-quasideterminants with signed determinant ratios on random rational matrices.

Reports, per size, how many cells were defined, how many were undefined in
both routes, and any mismatch.
"""

import argparse
import random
from dataclasses import dataclass

from biring import RATIONAL, det_ratio_quasidet, rc_quasideterminant
from biring.sampling import random_matrix


@dataclass
class RatioConfig:
    max_size: int = 6
    samples: int = 40
    bound: int = 2
    den: int = 3
    seed: int = 1


def run(cfg: RatioConfig):
    rng = random.Random(cfg.seed)
    for n in range(2, cfg.max_size + 1):
        defined = undefined = mismatched = 0
        for _ in range(cfg.samples):
            a = random_matrix(rng, RATIONAL, n, bound=cfg.bound, den=cfg.den)
            for r in range(1, n + 1):
                for c in range(1, n + 1):
                    qd, ratio = rc_quasideterminant(a, r, c), det_ratio_quasidet(a, r, c)
                    if qd.is_defined != ratio.is_defined or (
                            qd.is_defined and qd.value != ratio.value):
                        mismatched += 1
                    elif qd.is_defined:
                        defined += 1
                    else:
                        undefined += 1
        yield n, defined, undefined, mismatched


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(RatioConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = RatioConfig(**vars(p.parse_args()))
    print(f"{'n':>3} {'defined':>8} {'undefined':>10} {'mismatch':>9}")
    for n, d, u, m in run(cfg):
        print(f"{n:>3} {d:>8} {u:>10} {m:>9}")


if __name__ == "__main__":
    main()
