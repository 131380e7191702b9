"""Compare structured computations with brute-force enumeration on random codes."""
from __future__ import annotations

import argparse
import json
import random
import time
from dataclasses import asdict, dataclass

from ringcodes import oracle
from ringcodes.cyclic import is_cyclic
from ringcodes.linalg import ZpMatrix
from ringcodes.linear import RingLinearCode, cardinality, dual_matrix, min_distance
from ringcodes.ring import make_ring


@dataclass(frozen=True)
class SweepConfig:
    p: int = 3
    max_n: int = 4
    max_k: int = 2
    trials: int = 200
    seed: int = 0


@dataclass
class SweepResult:
    trials: int = 0
    distance_mismatches: int = 0
    dual_mismatches: int = 0
    cyclic_mismatches: int = 0
    cardinality_mismatches: int = 0
    cyclic_codes: int = 0
    seconds: float = 0.0


def random_code(rng: random.Random, cfg: SweepConfig) -> RingLinearCode:
    ring = make_ring(cfg.p, rng.randrange(cfg.p))
    n = rng.randint(1, cfg.max_n)
    mats = []
    for _ in range(ring.dim):
        k = rng.randint(0, cfg.max_k)
        mats.append(ZpMatrix(cfg.p, n, tuple(tuple(rng.randrange(cfg.p) for _ in range(n)) for _ in range(k))))
    return RingLinearCode.from_component_matrices(ring, mats)


def sweep(cfg: SweepConfig) -> SweepResult:
    rng = random.Random(cfg.seed)
    res = SweepResult()
    start = time.perf_counter()
    for _ in range(cfg.trials):
        code = random_code(rng, cfg)
        G = code.generator_matrix()
        words = oracle.enumerate_ring_code(G)
        res.trials += 1
        res.cardinality_mismatches += len(words) != cardinality(code)
        expected = None if not any(code.ranks) else min_distance(code)
        res.distance_mismatches += oracle.brute_min_distance(G) != expected
        res.dual_mismatches += oracle.brute_dual(G) != oracle.enumerate_ring_code(dual_matrix(code))
        closed = oracle.is_shift_closed(words)
        res.cyclic_codes += closed
        res.cyclic_mismatches += closed != is_cyclic(code)
    res.seconds = round(time.perf_counter() - start, 3)
    return res


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    for f, default in asdict(SweepConfig()).items():
        ap.add_argument(f"--{f.replace('_', '-')}", type=int, default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    res = sweep(cfg)
    print(json.dumps({"config": asdict(cfg), "result": asdict(res)}, indent=2))
    bad = res.distance_mismatches + res.dual_mismatches + res.cyclic_mismatches + res.cardinality_mismatches
    return 0 if bad == 0 else 2


if __name__ == "__main__":
    raise SystemExit(main())
