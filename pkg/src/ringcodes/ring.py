"""The rings R_{s,p} = Z_p[u] / (g_s(u)), g_s(u) = (u^p - u) / (u - s).

g_s splits into the p-1 distinct linear factors u - i, i in I_s, so the ring
is isomorphic to Z_p^{p-1}. The isomorphism is realised by evaluation at the
roots I_s (forward) and by the orthogonal idempotents alpha_i (backward).
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    CoefficientOutOfRange,
    IndexNotInIs,
    LengthMismatch,
    NotAUnit,
    ResidueOutOfRange,
    RingMismatch,
)
from .zp import ZpPoly, check_prime, inv_mod


@dataclass(frozen=True)
class RingParams:
    """Parameters of R_{s,p}; build with :func:`make_ring`.

    ``index_set`` is I_s in ascending order. Every component vector in the
    package is indexed by position in this tuple, not by root value.
    """

    p: int
    s: int
    index_set: tuple[int, ...] = field(compare=False)
    modulus: ZpPoly = field(compare=False, repr=False)
    q: tuple[int, ...] = field(default=(), compare=False, repr=False)
    idempotents: tuple["RingElement", ...] = field(default=(), compare=False, repr=False)

    @property
    def dim(self) -> int:
        """Number of components, p - 1."""
        return self.p - 1

    @property
    def cardinality(self) -> int:
        return self.p ** (self.p - 1)

    def position(self, r: int) -> int:
        try:
            return self.index_set.index(r)
        except ValueError:
            raise IndexNotInIs(f"{r} is not in I_{self.s} = {list(self.index_set)}") from None

    def element(self, coeffs: Sequence[int]) -> RingElement:
        return RingElement(self, tuple(coeffs))

    def reduce(self, poly: ZpPoly) -> RingElement:
        """Residue class of an arbitrary polynomial in u."""
        if poly.p != self.p:
            raise RingMismatch(f"polynomial mod {poly.p} used in a ring with p={self.p}")
        return RingElement(self, (poly % self.modulus).padded(self.dim))

    def scalar(self, c: int) -> RingElement:
        return RingElement(self, (c % self.p,) + (0,) * (self.dim - 1))

    @property
    def zero(self) -> RingElement:
        return RingElement(self, (0,) * self.dim)

    @property
    def one(self) -> RingElement:
        return self.scalar(1)

    def elements(self) -> Iterator[RingElement]:
        """All p^{p-1} elements, in lexicographic coefficient order."""
        for c in itertools.product(range(self.p), repeat=self.dim):
            yield RingElement(self, c)

    def __str__(self) -> str:
        return f"R_{{{self.s},{self.p}}}"


@dataclass(frozen=True)
class RingElement:
    """Canonical residue: coefficient of u^j at position j, j < p - 1."""

    ring: RingParams
    coeffs: tuple[int, ...]

    def __post_init__(self):
        ring = self.ring
        if len(self.coeffs) != ring.dim:
            raise LengthMismatch(f"ring element needs {ring.dim} coefficients, got {len(self.coeffs)}")
        for c in self.coeffs:
            if not 0 <= c < ring.p:
                raise CoefficientOutOfRange(f"coefficient {c} outside [0, {ring.p - 1}]")

    def poly(self) -> ZpPoly:
        return ZpPoly(self.ring.p, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _check(self, other: RingElement) -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"cannot combine elements of {self.ring} and {other.ring}")

    def _coerce(self, other) -> RingElement:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.scalar(other)
        self._check(other)
        return other

    def __add__(self, other) -> RingElement:
        other = self._coerce(other)
        p = self.ring.p
        return RingElement(self.ring, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> RingElement:
        p = self.ring.p
        return RingElement(self.ring, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other) -> RingElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RingElement:
        return self._coerce(other) - self

    def __mul__(self, other) -> RingElement:
        if isinstance(other, int) and not isinstance(other, bool):
            p = self.ring.p
            return RingElement(self.ring, tuple(a * other % p for a in self.coeffs))
        self._check(other)
        return self.ring.reduce(self.poly() * other.poly())

    __rmul__ = __mul__

    def __pow__(self, e: int) -> RingElement:
        out = self.ring.one
        for _ in range(e):
            out = out * self
        return out

    def components(self) -> ComponentVector:
        return to_components(self)

    def is_unit(self) -> bool:
        return is_unit(self)

    def inverse(self) -> RingElement:
        return invert(self)

    def __str__(self) -> str:
        from .polytext import format_poly

        return format_poly(self.poly())

    def __repr__(self) -> str:
        return f"RingElement({self.ring}, {self})"


@dataclass(frozen=True)
class ComponentVector:
    """Image of a ring element in Z_p^{p-1}; ``values[k]`` sits at root I_s[k]."""

    ring: RingParams
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.ring.dim:
            raise LengthMismatch(f"component vector needs {self.ring.dim} entries, got {len(self.values)}")
        object.__setattr__(self, "values", tuple(int(v) % self.ring.p for v in self.values))

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def at(self, root: int) -> int:
        return self.values[self.ring.position(root)]


@functools.lru_cache(maxsize=None)
def make_ring(p: int, s: int) -> RingParams:
    check_prime(p)
    if isinstance(s, bool) or not isinstance(s, int) or not 0 <= s < p:
        raise ResidueOutOfRange(f"s must lie in [0, {p - 1}], got {s!r}")
    index_set = tuple(i for i in range(p) if i != s)
    modulus = ZpPoly.product(p, (ZpPoly.linear(p, i) for i in index_set))
    ring = RingParams(p, s, index_set, modulus)
    qs = tuple(inv_mod(q_sr(ring, r)(r), p) for r in index_set)
    object.__setattr__(ring, "q", qs)
    alphas = tuple(_idempotent(ring, r, q) for r, q in zip(index_set, qs))
    object.__setattr__(ring, "idempotents", alphas)
    return ring


def q_sr(ring: RingParams, r: int) -> ZpPoly:
    """Product of (u - i) over i in I_s, i != r."""
    ring.position(r)
    return ZpPoly.product(ring.p, (ZpPoly.linear(ring.p, i) for i in ring.index_set if i != r))


def _idempotent(ring: RingParams, r: int, q: int) -> RingElement:
    return ring.reduce(q_sr(ring, r).scale(q))


def idempotent(ring: RingParams, r: int) -> RingElement:
    """alpha_r = q_r * Q_{sr}(u) with q_r = Q_{sr}(r)^{-1}."""
    k = ring.position(r)
    if ring.idempotents:
        return ring.idempotents[k]
    return _idempotent(ring, r, inv_mod(q_sr(ring, r)(r), ring.p))


def to_components(x: RingElement) -> ComponentVector:
    poly = x.poly()
    return ComponentVector(x.ring, tuple(poly(i) for i in x.ring.index_set))


def from_components(ring: RingParams, v: ComponentVector | Iterable[int]) -> RingElement:
    values = tuple(v.values if isinstance(v, ComponentVector) else v)
    if len(values) != ring.dim:
        raise LengthMismatch(f"component vector needs {ring.dim} entries, got {len(values)}")
    p = ring.p
    acc = [0] * ring.dim
    for c, alpha in zip(values, ring.idempotents):
        if c % p:
            for j, a in enumerate(alpha.coeffs):
                acc[j] += c * a
    return RingElement(ring, tuple(a % p for a in acc))


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_sub(x: RingElement, y: RingElement) -> RingElement:
    return x - y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def ring_neg(x: RingElement) -> RingElement:
    return -x


def is_unit(x: RingElement) -> bool:
    return all(to_components(x))


def invert(x: RingElement) -> RingElement:
    comps = to_components(x)
    zeros = tuple(r for r, c in zip(x.ring.index_set, comps) if c == 0)
    if zeros:
        raise NotAUnit(f"{x} vanishes at roots {list(zeros)}", zeros)
    return from_components(x.ring, [inv_mod(c, x.ring.p) for c in comps])
