"""Cyclic codes of length n over R_{s,p}.

A cyclic code is described by one generator polynomial g_i(x) | x^n - 1 per
component; the ring generator is g(x) = sum_i alpha_i g_i(x).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DoesNotSplit, InvalidGenerator, LengthMismatch, RingMismatch, WrongComponentCount
from .linalg import ZpMatrix, in_row_space
from .polytext import format_poly
from .linear import RingCodeword, RingLinearCode, RingMatrix
from .ring import RingElement, RingParams, from_components, to_components
from .zp import ZpPoly, check_prime


def xn_minus_1(p: int, n: int) -> ZpPoly:
    return ZpPoly.monomial(p, n) - 1


@dataclass(frozen=True)
class RingPolynomial:
    """Element of R_{s,p}[x] / (x^n - 1); ``coeffs[j]`` multiplies x^j."""

    ring: RingParams
    n: int
    coeffs: tuple[RingElement, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n:
            raise LengthMismatch(f"ring polynomial of length {self.n} given {len(self.coeffs)} coefficients")
        for c in self.coeffs:
            if c.ring != self.ring:
                raise RingMismatch(f"coefficient from {c.ring} in a polynomial over {self.ring}")

    @property
    def degree(self) -> int:
        for j in range(self.n - 1, -1, -1):
            if not self.coeffs[j].is_zero():
                return j
        return -1

    def shift(self, j: int = 1) -> RingPolynomial:
        """Multiplication by x^j modulo x^n - 1."""
        j %= self.n
        return RingPolynomial(self.ring, self.n, self.coeffs[-j:] + self.coeffs[:-j] if j else self.coeffs)

    def __str__(self) -> str:
        terms = []
        for j in range(self.n - 1, -1, -1):
            c = self.coeffs[j]
            if c.is_zero():
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            text = str(c)
            if "+" in text:
                terms.append(f"({text}){mono}")
            elif not mono:
                terms.append(text)
            elif text == "1":
                terms.append(mono)
            else:
                terms.append(f"{text}{mono}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class CyclicSpec:
    """Per-component generators ordered as I_s, normalised to monic.

    ``g_i = x^n - 1`` is accepted and stands for the zero component.
    """

    ring: RingParams
    n: int
    generators: tuple[ZpPoly, ...]

    def __post_init__(self):
        if self.n < 1:
            raise LengthMismatch("code length must be at least 1")
        if len(self.generators) != self.ring.dim:
            raise WrongComponentCount(f"{self.ring} needs {self.ring.dim} generators, got {len(self.generators)}")
        gens = []
        for root, g in zip(self.ring.index_set, self.generators):
            if g.p != self.ring.p:
                raise RingMismatch(f"generator mod {g.p} for {self.ring}")
            if g.is_zero() or not divides_xn_minus_1(g, self.n):
                raise InvalidGenerator(f"g_{root} = {format_poly(g, 'x')} does not divide x^{self.n}-1 mod {self.ring.p}")
            gens.append(g.monic())
        object.__setattr__(self, "generators", tuple(gens))


@dataclass(frozen=True)
class FactorList:
    p: int
    n: int
    factors: tuple[tuple[ZpPoly, int], ...]

    def product(self) -> ZpPoly:
        return ZpPoly.product(self.p, (f**m for f, m in self.factors))

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(-f(0) % self.p for f, _ in self.factors)

    def __str__(self) -> str:
        parts = []
        for (f, m), r in zip(self.factors, self.roots):
            base = f"(x-{r})" if r else "x"
            parts.append(base if m == 1 else f"{base}^{m}")
        return "".join(parts)


def factor_xn_minus_1(p: int, n: int) -> FactorList:
    """Linear factorisation of x^n - 1 over Z_p.

    Writes n = n' p^e with p coprime to n', so x^n - 1 = (x^{n'} - 1)^{p^e},
    and splits x^{n'} - 1 by trial roots. Raises :class:`DoesNotSplit` when
    x^{n'} - 1 has an irreducible factor of degree > 1.
    """
    check_prime(p)
    if n < 1:
        raise LengthMismatch("n must be at least 1")
    n_prime, mult = n, 1
    while n_prime % p == 0:
        n_prime //= p
        mult *= p
    base = xn_minus_1(p, n_prime)
    roots = [r for r in range(1, p) if base(r) == 0]
    residual = base
    for r in roots:
        residual = residual // ZpPoly.linear(p, r)
    if residual.degree > 0:
        raise DoesNotSplit(
            f"x^{n_prime}-1 mod {p} leaves the non-split factor {format_poly(residual.monic(), 'x')} of degree {residual.degree}",
            residual.degree,
        )
    return FactorList(p, n, tuple((ZpPoly.linear(p, r), mult) for r in roots))


def divides_xn_minus_1(g: ZpPoly, n: int) -> bool:
    return (xn_minus_1(g.p, n) % g).is_zero()


def compose_cyclic_generator(spec: CyclicSpec) -> RingPolynomial:
    ring, n = spec.ring, spec.n
    reduced = [g % xn_minus_1(ring.p, n) for g in spec.generators]
    coeffs = tuple(from_components(ring, [g.coeff(j) for g in reduced]) for j in range(n))
    return RingPolynomial(ring, n, coeffs)


def decompose_ring_polynomial(g: RingPolynomial) -> list[ZpPoly]:
    comps = [to_components(c).values for c in g.coeffs]
    return [ZpPoly(g.ring.p, tuple(v[k] for v in comps)) for k in range(g.ring.dim)]


def cyclic_generator_matrix(g: ZpPoly, n: int) -> ZpMatrix:
    """Rows x^j g(x), j = 0 .. n - 1 - deg g; no rows for g = x^n - 1."""
    if g.is_zero() or not divides_xn_minus_1(g, n):
        raise InvalidGenerator(f"{format_poly(g, 'x')} does not divide x^{n}-1 mod {g.p}")
    g = g.monic()
    d = g.degree
    return ZpMatrix(g.p, n, tuple((0,) * j + g.coeffs + (0,) * (n - d - 1 - j) for j in range(n - d)))


def cyclic_code(spec: CyclicSpec) -> RingLinearCode:
    return RingLinearCode.from_component_matrices(
        spec.ring, [cyclic_generator_matrix(g, spec.n) for g in spec.generators]
    )


def shift_matrix(g: RingPolynomial) -> RingMatrix:
    """All n shifts x^j g(x) as rows; spans the ideal generated by g."""
    return RingMatrix(g.ring, g.n, tuple(g.shift(j).coeffs for j in range(g.n)))


def cyclic_shift(c: Sequence[RingElement]) -> RingCodeword:
    c = tuple(c)
    return c[-1:] + c[:-1] if c else c


def zp_cyclic_shift(v: Sequence[int]) -> tuple[int, ...]:
    v = tuple(v)
    return v[-1:] + v[:-1] if v else v


def is_component_cyclic(M: ZpMatrix) -> bool:
    return all(in_row_space(M, zp_cyclic_shift(r)) for r in M.rows)


def is_cyclic(C: RingLinearCode) -> bool:
    return all(is_component_cyclic(c.basis) for c in C.components)
