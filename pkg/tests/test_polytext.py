import random

import pytest

from ringcodes.errors import CoefficientOutOfRange, PolySyntaxError
from ringcodes.polytext import format_poly, parse_poly
from ringcodes.zp import ZpPoly


@pytest.mark.parametrize(
    "text,p,coeffs",
    [
        ("4u^3+u^2+4u+1", 5, (1, 4, 1, 4)),
        ("0", 5, ()),
        ("u", 3, (0, 1)),
        ("2*u^2 + 3*u + 1", 5, (1, 3, 2)),
        ("2u^2", 5, (0, 0, 2)),
        ("u^3+u^3", 5, (0, 0, 0, 2)),
        ("7u+6", 5, (1, 2)),
        ("-1", 5, (4,)),
        ("  u ^ 2 - 3 u + 2 ", 5, (2, 2, 1)),
    ],
)
def test_parse(text, p, coeffs):
    assert parse_poly(text, p).coeffs == coeffs


def test_parse_x_variable_normalises_minus():
    g = parse_poly("x-2", 5, "x")
    assert g.coeffs == (3, 1)
    assert format_poly(g, "x") == "x+3"


@pytest.mark.parametrize("text,pos", [("", 0), ("u+", 2), ("3u2", 2), ("u^", 1), ("2*", 1), ("x", 0), ("u u", 2)])
def test_syntax_errors(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text, 5)
    assert info.value.position == pos


def test_strict_mode():
    assert parse_poly("4u^3+1", 5, strict=True).coeffs == (1, 0, 0, 4)
    with pytest.raises(CoefficientOutOfRange):
        parse_poly("5u+1", 5, strict=True)
    with pytest.raises(PolySyntaxError):
        parse_poly("u-1", 5, strict=True)


def test_format_canonical():
    assert format_poly(ZpPoly(5, (1, 4, 1, 4))) == "4u^3+u^2+4u+1"
    assert format_poly(ZpPoly(5, ())) == "0"
    assert format_poly(ZpPoly(5, (0, 1))) == "u"
    assert format_poly(ZpPoly(5, (3,))) == "3"


def test_roundtrip_random():
    rng = random.Random(7)
    for _ in range(1000):
        p = rng.choice((2, 3, 5, 7))
        poly = ZpPoly(p, tuple(rng.randrange(p) for _ in range(rng.randrange(0, 8))))
        text = format_poly(poly)
        assert parse_poly(text, p) == poly
        assert format_poly(parse_poly(text, p)) == text
