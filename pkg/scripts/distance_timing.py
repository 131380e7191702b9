"""Time the exhaustive component distance search as the component rank grows."""
from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from ringcodes.linalg import ZpMatrix
from ringcodes.linear import ComponentCode, min_weight_word
from ringcodes.ring import make_ring


@dataclass(frozen=True)
class TimingConfig:
    p: int = 5
    s: int = 4
    n: int = 12
    max_k: int = 9
    repeats: int = 3
    seed: int = 1


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in TimingConfig.__dataclass_fields__.items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default.default)
    cfg = TimingConfig(**vars(ap.parse_args()))
    ring = make_ring(cfg.p, cfg.s)
    rng = random.Random(cfg.seed)
    print(f"{'k':>3} {'words':>12} {'d':>3} {'seconds':>9}")
    for k in range(1, min(cfg.max_k, cfg.n) + 1):
        best = float("inf")
        d = None
        for _ in range(cfg.repeats):
            rows = tuple(tuple(rng.randrange(cfg.p) for _ in range(cfg.n)) for _ in range(k))
            comp = ComponentCode(ring, ring.index_set[0], ZpMatrix(cfg.p, cfg.n, rows))
            start = time.perf_counter()
            d, _ = min_weight_word(comp)
            best = min(best, time.perf_counter() - start)
        print(f"{k:>3} {cfg.p ** k:>12} {d if d is not None else '-':>3} {best:>9.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
