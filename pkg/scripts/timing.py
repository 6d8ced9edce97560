"""Wall-clock cost of each route as d' grows.

    python3 scripts/timing.py --max-gluing 7 --max-hurwitz 4 --max-fock 8
"""

import argparse
import time
from dataclasses import dataclass

from hzfock.fock import epsilon_fock
from hzfock.gluing import epsilon_bruteforce
from hzfock.hurwitz import h_grothendieck, h_monotone, h_monotone_direct
from hzfock.hzpipeline import epsilon_formula, genera


@dataclass
class Config:
    max_gluing: int = 7
    max_hurwitz: int = 4
    max_fock: int = 8
    max_formula: int = 12


def clock(fn, *args):
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start


def row(name, dmax, per_d):
    for d in range(1, dmax + 1):
        print(f"{name:<14} d'={d:<3} {per_d(d):8.3f}s")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    for f in ("max_gluing", "max_hurwitz", "max_fock", "max_formula"):
        p.add_argument("--" + f.replace("_", "-"), type=int, default=getattr(Config, f))
    cfg = Config(**vars(p.parse_args()))

    row("formula", cfg.max_formula, lambda d: sum(clock(epsilon_formula, g, d) for g in genera(d)))
    row("gluing", cfg.max_gluing, lambda d: clock(epsilon_bruteforce, d))
    row("hurwitz-gr", cfg.max_hurwitz, lambda d: sum(clock(h_grothendieck, g, d) for g in genera(d)))
    row("hurwitz-mono", cfg.max_hurwitz, lambda d: sum(clock(h_monotone, g, d) for g in genera(d)))
    row("mono-direct", cfg.max_hurwitz, lambda d: sum(clock(h_monotone_direct, g, d) for g in genera(d)))
    row("fock", cfg.max_fock, lambda d: sum(clock(epsilon_fock, g, d) for g in genera(d)))


if __name__ == "__main__":
    main()
