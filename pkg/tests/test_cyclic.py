import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ring_elements, rings
from ringcodes import oracle
from ringcodes import worked_examples as wx
from ringcodes.cyclic import (
    CyclicSpec,
    RingPolynomial,
    compose_cyclic_generator,
    cyclic_code,
    cyclic_generator_matrix,
    cyclic_shift,
    decompose_ring_polynomial,
    divides_xn_minus_1,
    factor_xn_minus_1,
    is_component_cyclic,
    is_cyclic,
    shift_matrix,
    xn_minus_1,
)
from ringcodes.errors import DoesNotSplit, InvalidGenerator
from ringcodes.linalg import ZpMatrix, row_space_basis
from ringcodes.linear import RingLinearCode, decompose_generator, hamming_weight
from ringcodes.polytext import parse_poly
from ringcodes.ring import make_ring
from ringcodes.zp import ZpPoly

R = wx.ring()


def xpoly(text, p=5):
    return parse_poly(text, p, "x")


def roots_of(fl):
    return {r: m for r, m in zip(fl.roots, (m for _, m in fl.factors))}


def test_factor_examples():
    assert roots_of(factor_xn_minus_1(5, 4)) == {1: 1, 2: 1, 3: 1, 4: 1}
    fl5 = factor_xn_minus_1(5, 5)
    assert roots_of(fl5) == {1: 5}
    assert str(fl5) == "(x-1)^5"
    assert roots_of(factor_xn_minus_1(3, 2)) == {1: 1, 2: 1}
    with pytest.raises(DoesNotSplit) as info:
        factor_xn_minus_1(5, 3)
    assert info.value.residual_degree == 2


@pytest.mark.parametrize("p,n", [(2, 1), (3, 6), (5, 10), (7, 6), (7, 21), (11, 10), (13, 4)])
def test_factor_product_reproduces(p, n):
    fl = factor_xn_minus_1(p, n)
    assert fl.product() == xn_minus_1(p, n)


def test_divides():
    assert divides_xn_minus_1(xpoly("x-2"), 4)
    assert divides_xn_minus_1(ZpPoly(5, (1,)), 4)
    assert not divides_xn_minus_1(xpoly("x-2"), 5)


def test_compose_length_4():
    g = compose_cyclic_generator(wx.cyclic_spec(wx.CYCLIC_4_GENERATORS, 4))
    expected = [R.reduce(parse_poly(t, 5)) for t in wx.CYCLIC_4_G]
    assert list(g.coeffs) == expected
    assert str(g) == "(2u^3+2u^2+u)x^2 + (2u^3+2u^2+u+1)x + (3u^3+4u^2+2u+3)"


def test_compose_length_5():
    g = compose_cyclic_generator(wx.cyclic_spec(wx.CYCLIC_5_GENERATORS, 5))
    assert str(g) == (
        "(u^3+2u^2+2u)x^4 + (4u^3+2u^2)x^3 + (4u^3+4u^2+4u)x^2 + (4u^2+3u+1)x + (u^3+3u^2+u+4)"
    )


def test_length_5_generators_are_powers():
    lin = ZpPoly.linear(5, 1)
    assert [xpoly(t) for t in wx.CYCLIC_5_GENERATORS] == [lin, lin**3, lin**2, lin**4]


def test_compose_all_ones_is_one():
    spec = CyclicSpec(R, 3, (ZpPoly(5, (1,)),) * 4)
    g = compose_cyclic_generator(spec)
    assert g.coeffs == (R.one, R.zero, R.zero)


def test_decompose_length_4():
    g = compose_cyclic_generator(wx.cyclic_spec(wx.CYCLIC_4_GENERATORS, 4))
    comps = decompose_ring_polynomial(g)
    assert [c.coeffs for c in comps] == [(3, 1), (2, 1), (2, 2, 1), (1, 1)]


def test_decompose_zero_and_leading_component():
    zero = RingPolynomial(R, 3, (R.zero,) * 3)
    assert all(c.is_zero() for c in decompose_ring_polynomial(zero))
    g = compose_cyclic_generator(wx.cyclic_spec(wx.CYCLIC_5_GENERATORS, 5))
    top = g.coeffs[4]
    assert top == R.reduce(parse_poly("u^3+2u^2+2u", 5))
    assert tuple(oracle.naive_ring(5, 4).evaluate(top.coeffs, r) for r in R.index_set) == (0, 0, 0, 1)
    assert [c.degree for c in decompose_ring_polynomial(g)] == [1, 3, 2, 4]


def test_invalid_generator():
    with pytest.raises(InvalidGenerator):
        CyclicSpec(R, 5, (xpoly("x-2"),) * 4)
    with pytest.raises(InvalidGenerator):
        cyclic_generator_matrix(xpoly("x-2"), 5)


def test_zero_component_convention():
    g = xn_minus_1(5, 4)
    assert cyclic_generator_matrix(g, 4).nrows == 0
    spec = CyclicSpec(R, 4, (g, xpoly("x-1"), xpoly("x-1"), xpoly("x-1")))
    poly = compose_cyclic_generator(spec)
    assert decompose_ring_polynomial(poly)[0].is_zero()
    assert cyclic_code(spec).ranks == (0, 3, 3, 3)


def test_generator_matrix_examples():
    assert cyclic_generator_matrix(xpoly("x-1", 3), 2).rows == ((2, 1),)
    assert cyclic_generator_matrix(ZpPoly(3, (1,)), 3) == ZpMatrix.identity(3, 3)
    M = cyclic_generator_matrix(xpoly("x^2+3x+1"), 5)
    assert M.rows == ((1, 3, 1, 0, 0), (0, 1, 3, 1, 0), (0, 0, 1, 3, 1))
    span = oracle.zp_span(5, M.rows, 5)
    assert all((w[-1:] + w[:-1]) in span for w in span)


def test_generator_matrix_normalises_to_monic():
    assert cyclic_generator_matrix(xpoly("2x-2"), 4) == cyclic_generator_matrix(xpoly("x-1"), 4)


def test_cyclic_shift():
    a, b, c = R.scalar(1), R.scalar(2), R.scalar(3)
    assert cyclic_shift((a, b, c)) == (c, a, b)
    assert cyclic_shift((a,) * 4) == (a,) * 4
    w = (a, b, c, R.zero, R.idempotents[1])
    out = w
    for _ in range(len(w)):
        out = cyclic_shift(out)
    assert out == w


def test_is_cyclic_examples():
    assert is_cyclic(cyclic_code(wx.cyclic_spec(wx.CYCLIC_4_GENERATORS, 4)))
    assert is_cyclic(cyclic_code(wx.cyclic_spec(wx.CYCLIC_5_GENERATORS, 5)))
    full = RingLinearCode.from_component_matrices(R, [ZpMatrix.identity(5, 4)] * 4)
    assert is_cyclic(full)
    M = ZpMatrix.from_rows(5, [[1, 0, 0, 0]])
    assert not is_component_cyclic(M)
    assert not is_cyclic(RingLinearCode.from_component_matrices(R, [M] + [ZpMatrix.identity(5, 4)] * 3))


def test_ring_generator_spans_component_ideals():
    for gens, n in ((wx.CYCLIC_4_GENERATORS, 4), (wx.CYCLIC_5_GENERATORS, 5)):
        spec = wx.cyclic_spec(gens, n)
        g = compose_cyclic_generator(spec)
        for M, gi in zip(decompose_generator(shift_matrix(g)), spec.generators):
            assert row_space_basis(M) == row_space_basis(cyclic_generator_matrix(gi, n))


def _divisors_of_xn_minus_1(p, n):
    """Every monic divisor, by trial division over all monic polynomials."""
    target = xn_minus_1(p, n)
    out = []
    for d in range(n + 1):
        for low in itertools.product(range(p), repeat=d):
            g = ZpPoly(p, low + (1,))
            if (target % g).is_zero():
                out.append(g)
    return out


@st.composite
def cyclic_specs(draw, primes=(3, 5), max_n=6):
    ring = draw(rings(primes=primes))
    n = draw(st.integers(1, max_n))
    divisors = _divisors_of_xn_minus_1(ring.p, n)
    gens = tuple(draw(st.sampled_from(divisors)) for _ in range(ring.dim))
    return CyclicSpec(ring, n, gens)


@given(cyclic_specs())
def test_compose_decompose_roundtrip(spec):
    g = compose_cyclic_generator(spec)
    back = decompose_ring_polynomial(g)
    assert back == [gi % xn_minus_1(spec.ring.p, spec.n) for gi in spec.generators]


@given(cyclic_specs())
def test_ideal_equals_component_sum(spec):
    g = compose_cyclic_generator(spec)
    C = cyclic_code(spec)
    for M, comp in zip(decompose_generator(shift_matrix(g)), C.components):
        assert row_space_basis(M) == comp.basis
    assert is_cyclic(C)


@given(cyclic_specs(primes=(3,), max_n=3))
def test_ideal_is_shift_closed_by_enumeration(spec):
    g = compose_cyclic_generator(spec)
    words = oracle.enumerate_ring_code(shift_matrix(g))
    assert oracle.is_shift_closed(words)


@given(st.data())
def test_shift_preserves_weight(data):
    ring = data.draw(rings())
    c = data.draw(st.lists(ring_elements(ring), min_size=1, max_size=6))
    assert hamming_weight(cyclic_shift(c)) == hamming_weight(c)
