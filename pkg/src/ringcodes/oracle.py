"""Brute-force reference computations for tests.

Nothing here touches the idempotents, the component maps, elimination or
the structured distance code. Ring elements are bare coefficient tuples
multiplied with schoolbook polynomial arithmetic modulo (u^p - u)/(u - s),
and every code is handled by enumerating its full span. Only usable at
desk scale (p <= 5, n <= 5).
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import EnumerationCapExceeded
from .linalg import ZpMatrix
from .linear import RingLinearCode, RingMatrix
from .zp import ZpPoly

Elem = tuple[int, ...]
Word = tuple[Elem, ...]


@dataclass(frozen=True)
class OracleConfig:
    max_enumeration: int = 10**6

    def __post_init__(self):
        if self.max_enumeration < 1:
            raise ValueError("max_enumeration must be positive")


DEFAULT_CONFIG = OracleConfig()


class NaiveRing:
    """R_{s,p} by direct residue arithmetic."""

    def __init__(self, p: int, s: int):
        self.p, self.s, self.dim = p, s, p - 1
        f = ZpPoly.monomial(p, p) - ZpPoly.monomial(p, 1)
        self.modulus, rem = divmod(f, ZpPoly(p, (-s, 1)))
        assert rem.is_zero()
        self.zero: Elem = (0,) * self.dim

    def elements(self) -> list[Elem]:
        return list(itertools.product(range(self.p), repeat=self.dim))

    def add(self, a: Elem, b: Elem) -> Elem:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    @functools.lru_cache(maxsize=None)
    def mul(self, a: Elem, b: Elem) -> Elem:
        prod = ZpPoly(self.p, a) * ZpPoly(self.p, b)
        return (prod % self.modulus).padded(self.dim)

    def evaluate(self, a: Elem, point: int) -> int:
        return ZpPoly(self.p, a)(point)

    def __hash__(self):
        return hash((self.p, self.s))

    def __eq__(self, other):
        return isinstance(other, NaiveRing) and (self.p, self.s) == (other.p, other.s)


@functools.lru_cache(maxsize=None)
def naive_ring(p: int, s: int) -> NaiveRing:
    return NaiveRing(p, s)


def _check_cap(count: int, config: OracleConfig) -> None:
    if count > config.max_enumeration:
        raise EnumerationCapExceeded(f"{count} vectors exceeds oracle cap {config.max_enumeration}")


def coefficient_rows(G: RingMatrix) -> list[Word]:
    return [tuple(x.coeffs for x in row) for row in G.rows]


def enumerate_ring_code(G: RingMatrix, config: OracleConfig = DEFAULT_CONFIG) -> set[Word]:
    """Every R-combination of the rows of G."""
    R = naive_ring(G.ring.p, G.ring.s)
    rows = coefficient_rows(G)
    _check_cap(G.ring.cardinality ** len(rows), config)
    zero_word = (R.zero,) * G.ncols
    words = set()
    elems = R.elements()
    for msg in itertools.product(elems, repeat=len(rows)):
        word = list(zero_word)
        for m, row in zip(msg, rows):
            if any(m):
                word = [R.add(w, R.mul(m, g)) for w, g in zip(word, row)]
        words.add(tuple(word))
    return words


def weight(word: Word) -> int:
    return sum(1 for x in word if any(x))


def brute_min_distance(G: RingMatrix, config: OracleConfig = DEFAULT_CONFIG) -> int | None:
    """Minimum weight over all nonzero codewords; ``None`` for the zero code."""
    weights = [weight(w) for w in enumerate_ring_code(G, config) if weight(w)]
    return min(weights) if weights else None


def brute_dual(C: Union[RingMatrix, RingLinearCode], config: OracleConfig = DEFAULT_CONFIG) -> set[Word]:
    """All x in R^n orthogonal to every generator row.

    Pass a :class:`RingMatrix` to keep the check independent of the
    component machinery; a code is first turned into its ring generator.
    """
    G = C.generator_matrix() if isinstance(C, RingLinearCode) else C
    R = naive_ring(G.ring.p, G.ring.s)
    rows = coefficient_rows(G)
    _check_cap(G.ring.cardinality ** G.ncols, config)
    out = set()
    for x in itertools.product(R.elements(), repeat=G.ncols):
        ok = True
        for row in rows:
            acc = R.zero
            for a, b in zip(x, row):
                if any(a) and any(b):
                    acc = R.add(acc, R.mul(a, b))
            if any(acc):
                ok = False
                break
        if ok:
            out.add(x)
    return out


def is_shift_closed(words: set[Word]) -> bool:
    return all((w[-1:] + w[:-1]) in words for w in words)


def crt_interpolate(p: int, s: int, values: Sequence[int]) -> Elem:
    """The unique residue taking ``values[k]`` at the k-th root of g_s, by search."""
    R = naive_ring(p, s)
    roots = [i for i in range(p) if i != s]
    target = tuple(v % p for v in values)
    for a in R.elements():
        if tuple(R.evaluate(a, r) for r in roots) == target:
            return a
    raise AssertionError("interpolation search failed")


def zp_span(p: int, rows: Iterable[Sequence[int]], n: int, config: OracleConfig = DEFAULT_CONFIG) -> set[tuple[int, ...]]:
    rows = [tuple(r) for r in rows]
    _check_cap(p ** len(rows), config)
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        out.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(n)))
    return out or {(0,) * n}


def brute_rank(M: ZpMatrix, config: OracleConfig = DEFAULT_CONFIG) -> int:
    size = len(zp_span(M.p, M.rows, M.ncols, config))
    k = 0
    while M.p**k < size:
        k += 1
    return k


def brute_zp_distance(M: ZpMatrix, config: OracleConfig = DEFAULT_CONFIG) -> int | None:
    weights = [sum(1 for x in w if x) for w in zp_span(M.p, M.rows, M.ncols, config) if any(w)]
    return min(weights) if weights else None


def full_space(p: int, s: int, n: int, config: OracleConfig = DEFAULT_CONFIG) -> set[Word]:
    R = naive_ring(p, s)
    _check_cap(R.p ** (R.dim * n), config)
    return set(itertools.product(R.elements(), repeat=n))
