import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringcodes.errors import DivisionByZeroPoly, ModulusMismatch, ModulusTooLarge, NotPrime
from ringcodes.zp import ZpPoly, check_prime, inv_mod, is_prime


def poly(p, *coeffs):
    return ZpPoly(p, coeffs)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 91])
def test_check_prime_rejects(bad):
    with pytest.raises(NotPrime):
        check_prime(bad)


def test_check_prime_bound():
    assert check_prime(97) == 97
    with pytest.raises(ModulusTooLarge):
        check_prime(101)


def test_canonical_form_strips_and_reduces():
    assert poly(5, 6, -1, 0, 5).coeffs == (1, 4)
    assert poly(3, 0, 0).coeffs == ()
    assert poly(3).degree == -1


def test_mul_linear_factors():
    # (u-1)(u-2) = u^2 - 3u + 2 = u^2 + 2u + 2 mod 5
    assert ZpPoly.linear(5, 1) * ZpPoly.linear(5, 2) == poly(5, 2, 2, 1)


def test_divmod_exact():
    q, r = divmod(poly(3, 0, 1, 1), poly(3, 0, 1))
    assert q == poly(3, 1, 1)
    assert r.is_zero()


def test_eval_root():
    assert poly(5, 1, 2, 3, 1)(2) == 0


def test_pow_frobenius():
    # (x - 1)^5 = x^5 - 1 over Z_5
    assert ZpPoly.linear(5, 1) ** 5 == ZpPoly.monomial(5, 5) - 1


def test_division_by_zero():
    with pytest.raises(DivisionByZeroPoly):
        divmod(poly(5, 1, 1), poly(5))


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        poly(5, 1) + poly(3, 1)


def test_monic():
    assert poly(5, 4, 2).monic() == poly(5, 2, 1)


def test_inv_mod():
    assert inv_mod(2, 5) == 3
    with pytest.raises(ZeroDivisionError):
        inv_mod(5, 5)


coeff_lists = st.lists(st.integers(0, 6), max_size=7)


@given(coeff_lists, coeff_lists.filter(lambda c: any(x % 7 for x in c)))
def test_divmod_identity(a, b):
    a, b = ZpPoly(7, tuple(a)), ZpPoly(7, tuple(b))
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(coeff_lists, coeff_lists, st.integers(0, 6))
def test_eval_is_ring_homomorphism(a, b, x):
    a, b = ZpPoly(7, tuple(a)), ZpPoly(7, tuple(b))
    assert (a * b)(x) == a(x) * b(x) % 7
    assert (a + b)(x) == (a(x) + b(x)) % 7
