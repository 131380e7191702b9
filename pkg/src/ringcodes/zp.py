"""Scalars and polynomials over the prime field Z_p.

Polynomials are dense, ascending-degree coefficient tuples with no trailing
zeros; the zero polynomial has the empty tuple and degree -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import DivisionByZeroPoly, ModulusMismatch, ModulusTooLarge, NotPrime

MAX_PRIME = 97


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    """Return ``p`` unchanged if it is a prime in the supported range."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise NotPrime(f"modulus must be an integer, got {p!r}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p > MAX_PRIME:
        raise ModulusTooLarge(f"p={p} exceeds the supported bound {MAX_PRIME}")
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


Scalar = int
PolyLike = Union["ZpPoly", int]


@dataclass(frozen=True)
class ZpPoly:
    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) % self.p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def constant(cls, p: int, c: int) -> ZpPoly:
        return cls(p, (c,))

    @classmethod
    def monomial(cls, p: int, degree: int, c: int = 1) -> ZpPoly:
        return cls(p, (0,) * degree + (c,))

    @classmethod
    def linear(cls, p: int, root: int) -> ZpPoly:
        """The monic factor ``x - root``."""
        return cls(p, (-root, 1))

    @classmethod
    def product(cls, p: int, factors: Iterable[ZpPoly]) -> ZpPoly:
        out = cls.constant(p, 1)
        for f in factors:
            out = out * f
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> ZpPoly:
        if not self.coeffs:
            return self
        return self.scale(inv_mod(self.leading, self.p))

    def _lift(self, other: PolyLike) -> ZpPoly:
        if isinstance(other, ZpPoly):
            if other.p != self.p:
                raise ModulusMismatch(f"cannot combine polynomials mod {self.p} and mod {other.p}")
            return other
        if isinstance(other, int):
            return ZpPoly.constant(self.p, other)
        return NotImplemented

    def __add__(self, other: PolyLike) -> ZpPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return ZpPoly(self.p, tuple(self.coeff(j) + other.coeff(j) for j in range(n)))

    __radd__ = __add__

    def __neg__(self) -> ZpPoly:
        return ZpPoly(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other: PolyLike) -> ZpPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> ZpPoly:
        return (-self) + other

    def scale(self, c: int) -> ZpPoly:
        return ZpPoly(self.p, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: PolyLike) -> ZpPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return ZpPoly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ZpPoly(self.p, tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: PolyLike) -> tuple[ZpPoly, ZpPoly]:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            raise DivisionByZeroPoly("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dd = other.degree
        if len(rem) - 1 < dd:
            return ZpPoly(p), self
        lead_inv = inv_mod(other.leading, p)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] % p
            if c == 0:
                continue
            f = c * lead_inv % p
            quot[i - dd] = f
            for j, b in enumerate(other.coeffs):
                rem[i - dd + j] = (rem[i - dd + j] - f * b) % p
        return ZpPoly(p, tuple(quot)), ZpPoly(p, tuple(rem[:dd]))

    def __floordiv__(self, other: PolyLike) -> ZpPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: PolyLike) -> ZpPoly:
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> ZpPoly:
        if e < 0:
            raise ValueError("negative exponent")
        out = ZpPoly.constant(self.p, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __str__(self) -> str:
        from .polytext import format_poly

        return format_poly(self)


# function-style aliases


def poly_add(a: ZpPoly, b: ZpPoly) -> ZpPoly:
    return a + b


def poly_sub(a: ZpPoly, b: ZpPoly) -> ZpPoly:
    return a - b


def poly_mul(a: ZpPoly, b: ZpPoly) -> ZpPoly:
    return a * b


def poly_divmod(a: ZpPoly, b: ZpPoly) -> tuple[ZpPoly, ZpPoly]:
    return divmod(a, b)


def poly_eval(a: ZpPoly, x: int) -> int:
    return a(x)


def poly_pow(a: ZpPoly, e: int) -> ZpPoly:
    return a ** e
