"""Text grammar for polynomials over Z_p.

Input is a signed sum of terms ``c``, ``c*v``, ``cv``, ``v``, ``c*v^e``,
``cv^e`` or ``v^e`` where ``v`` is the variable letter; whitespace is
ignored. Minus signs and coefficients of any size are reduced mod p unless
``strict`` is set. Output is canonical: descending degree, zero terms
dropped, a unit coefficient omitted in front of the variable, and ``0`` for
the zero polynomial.
"""
from __future__ import annotations

import re

from .errors import CoefficientOutOfRange, PolySyntaxError
from .zp import ZpPoly

_TERM_TEMPLATE = (
    r"(?P<coef>\d+)(?:\*?(?P<var1>{v})(?:\^(?P<e1>\d+))?)?"
    r"|(?P<var2>{v})(?:\^(?P<e2>\d+))?"
)
_term_cache: dict[str, re.Pattern] = {}


def _term_pattern(variable: str) -> re.Pattern:
    if variable not in _term_cache:
        if not re.fullmatch(r"[A-Za-z]", variable):
            raise ValueError(f"variable must be a single letter, got {variable!r}")
        _term_cache[variable] = re.compile(_TERM_TEMPLATE.format(v=variable))
    return _term_cache[variable]


def parse_poly(text: str, p: int, variable: str = "u", strict: bool = False) -> ZpPoly:
    """Parse ``text`` into a canonical :class:`ZpPoly` mod ``p``.

    Error positions are offsets into the original string.
    """
    pattern = _term_pattern(variable)
    positions = [i for i, ch in enumerate(text) if not ch.isspace()]
    compact = "".join(text[i] for i in positions)

    def where(k: int) -> int:
        return positions[k] if k < len(positions) else len(text)

    if not compact:
        raise PolySyntaxError("empty polynomial", 0)

    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(compact):
        sign = 1
        if compact[pos] in "+-":
            if compact[pos] == "-":
                if strict:
                    raise PolySyntaxError("minus sign not allowed in strict mode", where(pos))
                sign = -1
            pos += 1
        elif not first:
            raise PolySyntaxError(f"expected '+' or '-', found {compact[pos]!r}", where(pos))
        m = pattern.match(compact, pos)
        if m is None or m.end() == pos:
            raise PolySyntaxError("expected a term", where(pos))
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            has_var = m.group("var1") is not None
            e_text = m.group("e1")
        else:
            c = 1
            has_var = True
            e_text = m.group("e2")
        if strict and not 1 <= c <= p - 1 and not (c == 0 and compact == "0"):
            raise CoefficientOutOfRange(f"coefficient {c} outside [1, {p - 1}] at position {where(pos)}")
        e = int(e_text) if e_text is not None else (1 if has_var else 0)
        if strict and has_var and e < 1:
            raise PolySyntaxError("exponent must be at least 1", where(pos))
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos = m.end()
        first = False

    if not coeffs:
        return ZpPoly(p)
    top = max(coeffs)
    return ZpPoly(p, tuple(coeffs.get(j, 0) for j in range(top + 1)))


def format_poly(poly: ZpPoly, variable: str = "u") -> str:
    terms = []
    for e in range(poly.degree, -1, -1):
        c = poly.coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
            continue
        mono = variable if e == 1 else f"{variable}^{e}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"
