import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ring_elements, rings
from ringcodes import oracle
from ringcodes.errors import IndexNotInIs, LengthMismatch, NotAUnit, NotPrime, ResidueOutOfRange, RingMismatch
from ringcodes.ring import (
    from_components,
    idempotent,
    invert,
    is_unit,
    make_ring,
    q_sr,
    ring_add,
    ring_mul,
    ring_neg,
    ring_sub,
    to_components,
)
from ringcodes.zp import ZpPoly, is_prime

R45 = make_ring(5, 4)


def el(ring, *coeffs):
    return ring.element(coeffs)


def factored(p, c, roots):
    return ZpPoly.product(p, (ZpPoly.linear(p, i) for i in roots)).scale(c)


def test_make_ring_5_4():
    assert R45.index_set == (0, 1, 2, 3)
    assert R45.modulus == factored(5, 1, (0, 1, 2, 3))
    assert R45.cardinality == 5**4


def test_make_ring_2_0():
    R = make_ring(2, 0)
    assert R.modulus == ZpPoly(2, (1, 1))
    assert R.cardinality == 2
    assert R.idempotents == (R.one,)


def test_make_ring_3_1_matches_naive_modulus():
    R = make_ring(3, 1)
    assert R.modulus.coeffs == (0, 1, 1)
    assert R.modulus == oracle.naive_ring(3, 1).modulus
    assert R.cardinality == 9


@pytest.mark.parametrize("p,s,err", [(4, 0, NotPrime), (5, 5, ResidueOutOfRange), (5, -1, ResidueOutOfRange)])
def test_make_ring_errors(p, s, err):
    with pytest.raises(err):
        make_ring(p, s)


def test_q_sr():
    assert q_sr(R45, 0) == factored(5, 1, (1, 2, 3))
    assert q_sr(make_ring(3, 1), 0) == ZpPoly.linear(3, 2)
    assert q_sr(R45, 3).coeffs == (0, 2, 2, 1)
    with pytest.raises(IndexNotInIs):
        q_sr(R45, 4)


def test_idempotents_worked_values():
    assert idempotent(R45, 0) == R45.reduce(factored(5, 4, (1, 2, 3)))
    assert idempotent(R45, 0).coeffs == (1, 4, 1, 4)
    assert idempotent(R45, 2) == R45.reduce(factored(5, 2, (0, 1, 3)))
    assert idempotent(R45, 2).coeffs == (0, 1, 2, 2)
    assert idempotent(make_ring(3, 1), 0).coeffs == (1, 1)
    assert R45.q == (4, 3, 2, 1)


def test_idempotent_matches_interpolation_oracle():
    for p in (3, 5):
        for s in range(p):
            R = make_ring(p, s)
            for k in range(R.dim):
                unit_vec = [int(j == k) for j in range(R.dim)]
                assert R.idempotents[k].coeffs == oracle.crt_interpolate(p, s, unit_vec)


def test_to_components_examples():
    assert to_components(el(R45, 1, 2, 3, 1)).values == (1, 2, 0, 1)
    assert to_components(R45.one).values == (1, 1, 1, 1)
    assert to_components(el(R45, 3, 2, 4, 3)).values == (3, 2, 2, 1)


def test_from_components_examples():
    assert from_components(R45, (1, 2, 0, 1)) == el(R45, 1, 2, 3, 1)
    assert from_components(R45, (0, 0, 0, 0)) == R45.zero
    expected = oracle.crt_interpolate(5, 4, (4, 3, 4, 1))
    assert expected == (4, 1, 4, 4)
    assert from_components(R45, (4, 3, 4, 1)).coeffs == expected
    with pytest.raises(LengthMismatch):
        from_components(R45, (1, 2, 3))


def test_components_at_root():
    assert to_components(el(R45, 1, 2, 3, 1)).at(3) == 1


def test_mul_examples():
    a0, a1 = R45.idempotents[:2]
    assert ring_mul(a0, a1) == R45.zero
    R = make_ring(3, 1)
    u = el(R, 0, 1)
    assert (u * u).coeffs == (0, 2)


def test_function_aliases():
    x, y = el(R45, 1, 2, 3, 4), el(R45, 0, 1, 0, 1)
    assert ring_add(x, y) == x + y
    assert ring_sub(x, y) == x - y
    assert ring_neg(x) + x == R45.zero


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        R45.one + make_ring(5, 0).one


def test_units():
    assert invert(R45.one) == R45.one
    assert invert(R45.scalar(2)) == R45.scalar(3)
    a0 = R45.idempotents[0]
    assert to_components(a0).values == (1, 0, 0, 0)
    assert not is_unit(a0)
    with pytest.raises(NotAUnit) as info:
        invert(a0)
    assert info.value.zero_components == (1, 2, 3)


@pytest.mark.parametrize("p", [q for q in range(2, 14) if is_prime(q)])
def test_idempotent_laws(p):
    for s in range(p):
        R = make_ring(p, s)
        total = R.zero
        for i, a in enumerate(R.idempotents):
            assert a * a == a
            if p > 2:
                assert a != R.zero and a != R.one
            for j, b in enumerate(R.idempotents):
                if i != j:
                    assert (a * b).is_zero()
            total = total + a
        assert total == R.one


@pytest.mark.parametrize("p,s", [(2, 1), (3, 0), (3, 2), (5, 1)])
def test_exhaustive_bijection(p, s):
    R = make_ring(p, s)
    elements = list(R.elements())
    assert len(elements) == R.cardinality == p ** (p - 1)
    images = {to_components(x).values for x in elements}
    assert images == set(itertools.product(range(p), repeat=p - 1))
    for x in elements:
        assert from_components(R, to_components(x)) == x


@given(st.data())
def test_homomorphism(data):
    R = data.draw(rings())
    x = data.draw(ring_elements(R))
    y = data.draw(ring_elements(R))
    cx, cy = to_components(x).values, to_components(y).values
    assert to_components(x * y).values == tuple(a * b % R.p for a, b in zip(cx, cy))
    assert to_components(x + y).values == tuple((a + b) % R.p for a, b in zip(cx, cy))


@given(st.data())
def test_ring_mul_matches_naive(data):
    R = data.draw(rings(primes=(3, 5)))
    x = data.draw(ring_elements(R))
    y = data.draw(ring_elements(R))
    assert (x * y).coeffs == oracle.naive_ring(R.p, R.s).mul(x.coeffs, y.coeffs)


@given(st.data())
def test_unit_criterion(data):
    R = data.draw(rings())
    x = data.draw(ring_elements(R))
    assert is_unit(x) == all(to_components(x))


def test_inverse_of_random_units():
    rng = random.Random(20261014)
    for _ in range(1000):
        R = make_ring(*rng.choice([(3, 0), (5, 4), (7, 3), (11, 5)]))
        x = from_components(R, [rng.randrange(1, R.p) for _ in range(R.dim)])
        assert is_unit(x)
        assert invert(x) * x == R.one
