"""Tabulate both coefficient-bound chains for n = 2a+3 over a range of a."""
import argparse
import csv
import sys
from dataclasses import dataclass

from simplest_cubic import FieldParam
from simplest_cubic.units import coefficient_bounds


@dataclass
class BoundConfig:
    lo: int = 1
    hi: int = 10000
    every: int = 1


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lo", type=int, default=BoundConfig.lo)
    p.add_argument("--hi", type=int, default=BoundConfig.hi)
    p.add_argument("--every", type=int, default=BoundConfig.every)
    cfg = BoundConfig(**vars(p.parse_args()))
    w = csv.writer(sys.stdout)
    w.writerow(["a", "s_bound", "t_bound", "coarse_chain", "termwise_s", "termwise_t"])
    worst = 0
    for a in range(cfg.lo, cfg.hi + 1, cfg.every):
        b = coefficient_bounds(FieldParam(a), 2 * a + 3)
        w.writerow([a, b.s_bound, b.t_bound, b.coarse_chain, *b.termwise_chain])
        if a >= 7:
            worst = max(worst, b.s_bound, b.t_bound)
    print(f"# max bound for a >= 7: {worst}", file=sys.stderr)


if __name__ == "__main__":
    main()
