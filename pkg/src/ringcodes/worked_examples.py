"""Reference worked examples over R_{4,5} and the checks run by ``verify-paper``.

All data below is transcribed as printed, with ring elements written in u
and component matrices as integer rows ordered by I_4 = (0, 1, 2, 3).
"""
from __future__ import annotations

import time
import traceback
from dataclasses import dataclass
from typing import Callable

from .cyclic import CyclicSpec, compose_cyclic_generator, factor_xn_minus_1
from .linalg import ZpMatrix
from .linear import (
    RingLinearCode,
    RingMatrix,
    component_dual,
    component_min_distance,
    compose_generator,
    decompose_generator,
    dual_matrix,
    is_mds,
    min_distance,
    parity_check,
    ring_dot,
)
from .polytext import parse_poly
from .ring import RingParams, make_ring
from .zp import ZpPoly, is_prime

P, S = 5, 4

IDEMPOTENT_FACTORS = {
    # alpha_r = c * prod (u - i) for the listed roots
    0: (4, (1, 2, 3)),
    1: (3, (0, 2, 3)),
    2: (2, (0, 1, 3)),
    3: (1, (0, 1, 2)),
}

EXAMPLE_I_G = [
    ["1", "0", "0", "u^3+3u^2+2u+1", "u^3+u^2+4u+1"],
    ["0", "1", "0", "3u^3+3u^2+4u+2", "2u^3+u^2+u"],
    ["0", "0", "1", "4u^3+4u^2+2u", "4u^3+2u^2+u+3"],
]
EXAMPLE_I_COMPONENTS = [
    [[1, 0, 0, 1, 1], [0, 1, 0, 2, 0], [0, 0, 1, 0, 3]],
    [[1, 0, 0, 2, 2], [0, 1, 0, 2, 4], [0, 0, 1, 0, 0]],
    [[1, 0, 0, 0, 1], [0, 1, 0, 1, 2], [0, 0, 1, 2, 0]],
    [[1, 0, 0, 1, 4], [0, 1, 0, 2, 1], [0, 0, 1, 0, 2]],
]
EXAMPLE_I_DISTANCES = (2, 1, 2, 2)
EXAMPLE_I_DISTANCE = 1
EXAMPLE_I_H_COMPONENTS = [
    [[4, 3, 0, 1, 0], [4, 0, 2, 0, 1]],
    [[3, 3, 0, 1, 0], [3, 1, 0, 0, 1]],
    [[0, 4, 3, 1, 0], [4, 3, 0, 0, 1]],
    [[4, 3, 0, 1, 0], [1, 4, 3, 0, 1]],
]
# Entry (2, 1) is printed as 4a_0+3a_1+4a_2+a_3; its expansion was obtained by
# brute-force interpolation.
EXAMPLE_I_H = [
    ["4u^3+2u^2+3u+4", "2u^3+2u^2+u+3", "u^3+u^2+3u", "1", "0"],
    ["4u^3+4u^2+u+4", "3u^3+4u^2+4u", "u^3+3u^2+4u+2", "0", "1"],
]

EXAMPLE_II_G = [
    ["1", "0", "0", "1", "1"],
    ["0", "1", "0", "1", "2"],
    ["0", "0", "1", "3u^3+4u^2+3u+1", "4u^3+u^2+u+3"],
]
EXAMPLE_II_COMPONENTS = [
    [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 1, 3]],
    [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 1, 4]],
    [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 2, 1]],
    [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 2, 3]],
]
EXAMPLE_II_DISTANCES = (3, 3, 3, 3)
EXAMPLE_II_DISTANCE = 3
EXAMPLE_II_H_COMPONENTS = [
    [[4, 4, 4, 1, 0], [4, 3, 2, 0, 1]],
    [[4, 4, 4, 1, 0], [4, 3, 1, 0, 1]],
    [[4, 4, 3, 1, 0], [4, 3, 4, 0, 1]],
    [[4, 4, 3, 1, 0], [4, 3, 2, 0, 1]],
]
EXAMPLE_II_H = [
    ["4", "4", "2u^3+u^2+2u+4", "1", "0"],
    ["4", "3", "u^3+4u^2+4u+2", "0", "1"],
]

CYCLIC_4_GENERATORS = ["x-2", "x-3", "x^2-3x+2", "x-4"]
CYCLIC_4_G = ["3u^3+4u^2+2u+3", "2u^3+2u^2+u+1", "2u^3+2u^2+u", "0"]
CYCLIC_5_GENERATORS = ["x+4", "x^3+2x^2+3x+4", "x^2+3x+1", "x^4+x^3+x^2+x+1"]
CYCLIC_5_G = ["u^3+3u^2+u+4", "4u^2+3u+1", "4u^3+4u^2+4u", "4u^3+2u^2", "u^3+2u^2+2u"]
# x^n - 1 = prod (x - root)^mult
FACTORS_4 = {1: 1, 2: 1, 3: 1, 4: 1}
FACTORS_5 = {1: 5}


def ring() -> RingParams:
    return make_ring(P, S)


def ring_matrix(rows: list[list[str]]) -> RingMatrix:
    R = ring()
    return RingMatrix.from_rows(R, [[R.reduce(parse_poly(t, P)) for t in row] for row in rows])


def zp_matrices(blocks: list[list[list[int]]]) -> list[ZpMatrix]:
    return [ZpMatrix.from_rows(P, b) for b in blocks]


def cyclic_spec(texts: list[str], n: int) -> CyclicSpec:
    return CyclicSpec(ring(), n, tuple(parse_poly(t, P, "x") for t in texts))


@dataclass(frozen=True)
class CheckResult:
    item: int
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{status}] item {self.item}: {self.name}{tail}"


# -- item 1 ------------------------------------------------------------------


def check_idempotent_list() -> str:
    R = ring()
    for r, (c, roots) in IDEMPOTENT_FACTORS.items():
        expected = R.reduce(ZpPoly.product(P, (ZpPoly.linear(P, i) for i in roots)).scale(c))
        got = R.idempotents[R.position(r)]
        assert got == expected, f"alpha_{r} = {got}, expected {expected}"
    return "alpha_0..alpha_3 match"


def check_idempotent_laws(max_p: int = 13) -> str:
    start = time.perf_counter()
    count = 0
    for p in (q for q in range(2, max_p + 1) if is_prime(q)):
        for s in range(p):
            R = make_ring(p, s)
            total = R.zero
            for i, a in enumerate(R.idempotents):
                total = total + a
                for j, b in enumerate(R.idempotents):
                    prod = a * b
                    assert prod == (a if i == j else R.zero), f"p={p} s={s} alpha product ({i},{j}) wrong"
            assert total == R.one, f"p={p} s={s}: idempotents do not sum to 1"
            count += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    return f"{count} rings, {elapsed:.3f}s"


# -- items 2 and 3 -----------------------------------------------------------


def _check_distances(G_rows, comps, dists, d):
    start = time.perf_counter()
    G = ring_matrix(G_rows)
    got = decompose_generator(G)
    assert got == zp_matrices(comps), "component matrices differ"
    C = RingLinearCode.from_generator(G)
    got_d = tuple(component_min_distance(c) for c in C.components)
    assert got_d == dists, f"component distances {got_d}, expected {dists}"
    assert min_distance(C) == d, f"d_H = {min_distance(C)}, expected {d}"
    elapsed = time.perf_counter() - start
    return C, elapsed


def check_example_i() -> str:
    _, elapsed = _check_distances(EXAMPLE_I_G, EXAMPLE_I_COMPONENTS, EXAMPLE_I_DISTANCES, EXAMPLE_I_DISTANCE)
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    return f"distances {EXAMPLE_I_DISTANCES}, d_H = 1, {elapsed:.3f}s"


def check_example_ii() -> str:
    C, _ = _check_distances(EXAMPLE_II_G, EXAMPLE_II_COMPONENTS, EXAMPLE_II_DISTANCES, EXAMPLE_II_DISTANCE)
    assert all(is_mds(c) for c in C.components), "a component is not MDS"
    return "distances all 3, d_H = 3, every component MDS"


# -- item 4 ------------------------------------------------------------------


def _check_dual(G_rows, H_comps, H_rows):
    G = ring_matrix(G_rows)
    C = RingLinearCode.from_generator(G)
    for k, (comp, expected) in enumerate(zip(C.components, zp_matrices(H_comps))):
        assert parity_check(comp.generator) == expected, f"H_{k} differs"
        H, perm = component_dual(comp)
        assert H == expected and perm == tuple(range(comp.length)), f"component_dual {k} differs"
    H = dual_matrix(C)
    assert H == ring_matrix(H_rows), "ring-level H differs"
    assert compose_generator(ring(), zp_matrices(H_comps)) == H
    for g in G.rows:
        for h in H.rows:
            assert ring_dot(g, h).is_zero(), "G H^t != 0"


def check_dual_i() -> str:
    _check_dual(EXAMPLE_I_G, EXAMPLE_I_H_COMPONENTS, EXAMPLE_I_H)
    return "H_0..H_3 and ring H match, G H^t = 0"


def check_dual_ii() -> str:
    _check_dual(EXAMPLE_II_G, EXAMPLE_II_H_COMPONENTS, EXAMPLE_II_H)
    return "H_0..H_3 and ring H match, G H^t = 0"


# -- item 5 ------------------------------------------------------------------


def _check_cyclic(gens, n, coeffs, factors):
    g = compose_cyclic_generator(cyclic_spec(gens, n))
    R = ring()
    expected = tuple(R.reduce(parse_poly(t, P)) for t in coeffs)
    assert g.coeffs == expected, f"g(x) = {g}"
    fl = factor_xn_minus_1(P, n)
    assert dict(zip(fl.roots, (m for _, m in fl.factors))) == factors, f"factorisation {fl}"
    assert fl.product() == ZpPoly.monomial(P, n) - 1
    return str(g)


def check_cyclic_4() -> str:
    return _check_cyclic(CYCLIC_4_GENERATORS, 4, CYCLIC_4_G, FACTORS_4)


def check_cyclic_5() -> str:
    return _check_cyclic(CYCLIC_5_GENERATORS, 5, CYCLIC_5_G, FACTORS_5)


CHECKS: list[tuple[int, str, Callable[[], str]]] = [
    (1, "idempotents of R_{4,5}", check_idempotent_list),
    (1, "idempotent laws for p <= 13", check_idempotent_laws),
    (2, "example i components and distances", check_example_i),
    (3, "example ii distances and MDS", check_example_ii),
    (4, "dual of example i", check_dual_i),
    (4, "dual of example ii", check_dual_ii),
    (5, "cyclic code of length 4", check_cyclic_4),
    (5, "cyclic code of length 5", check_cyclic_5),
]


def run_checks() -> list[CheckResult]:
    results = []
    for item, name, fn in CHECKS:
        try:
            results.append(CheckResult(item, name, True, fn()))
        except Exception as exc:  # report and keep going
            detail = str(exc) or traceback.format_exception_only(type(exc), exc)[-1].strip()
            results.append(CheckResult(item, name, False, detail))
    return results
