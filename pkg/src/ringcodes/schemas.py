"""JSON wire formats.

Ring matrix::

    {"p": 5, "s": 4, "n": 5, "rows": [["1", "0", "u^3+3u^2+2u+1", ...], ...]}

Component bundle (keys are the roots in I_s, as strings)::

    {"p": 5, "s": 4, "n": 5, "components": {"0": [[1, 0, 0, 1, 1], ...], ...}}

Cyclic spec (x-polynomials in the same grammar as u-polynomials)::

    {"p": 5, "s": 4, "n": 4, "generators": {"0": "x-2", "1": "x-3", ...}}

Ring polynomial (coefficients ascending in x)::

    {"p": 5, "s": 4, "n": 4, "coeffs": ["3u^3+4u^2+2u+3", ...]}

Ring elements are poly-strings reduced modulo g_s(u) or ascending integer
arrays of length p - 1. Loaders also accept a CLI report and read its
``results`` member, so command output can be fed back in.
"""
from __future__ import annotations

from typing import Any, Mapping

from .cyclic import CyclicSpec, RingPolynomial
from .errors import LengthMismatch, SchemaError, WrongComponentCount
from .linalg import ZpMatrix
from .linear import RingMatrix
from .polytext import format_poly, parse_poly
from .ring import RingElement, RingParams, make_ring
from .zp import ZpPoly


def _unwrap(data: Mapping[str, Any]) -> Mapping[str, Any]:
    if not isinstance(data, Mapping):
        raise SchemaError(f"expected a JSON object, got {type(data).__name__}")
    if "results" in data and isinstance(data["results"], Mapping):
        return data["results"]
    return data


def ring_from_json(data: Mapping[str, Any], p: int | None = None, s: int | None = None) -> RingParams:
    """Ring named by the document; explicit ``p``/``s`` fill gaps and must agree."""
    data = _unwrap(data)
    vals = {}
    for key, given in (("p", p), ("s", s)):
        doc = data.get(key)
        if doc is not None and given is not None and doc != given:
            raise SchemaError(f"document has {key}={doc} but {key}={given} was requested")
        vals[key] = doc if doc is not None else given
        if vals[key] is None:
            raise SchemaError(f"missing ring parameter {key!r}")
        if isinstance(vals[key], bool) or not isinstance(vals[key], int):
            raise SchemaError(f"{key} must be an integer")
    return make_ring(vals["p"], vals["s"])


def element_to_json(x: RingElement) -> str:
    return format_poly(x.poly())


def element_from_json(value: Any, ring: RingParams) -> RingElement:
    if isinstance(value, str):
        return ring.reduce(parse_poly(value, ring.p, "u"))
    if isinstance(value, bool):
        raise SchemaError("booleans are not ring elements")
    if isinstance(value, int):
        return ring.scalar(value)
    if isinstance(value, list):
        if len(value) != ring.dim:
            raise LengthMismatch(f"coefficient array needs {ring.dim} entries, got {len(value)}")
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in value):
            raise SchemaError("coefficient arrays hold integers only")
        return ring.element([c % ring.p for c in value])
    raise SchemaError(f"cannot read a ring element from {value!r}")


def _check_n(data: Mapping[str, Any], n: int) -> None:
    if "n" in data and data["n"] != n:
        raise SchemaError(f"declared n={data['n']} but rows have length {n}")


def ring_matrix_to_json(G: RingMatrix) -> dict:
    return {
        "p": G.ring.p,
        "s": G.ring.s,
        "n": G.ncols,
        "rows": [[element_to_json(x) for x in row] for row in G.rows],
    }


def ring_matrix_from_json(data: Mapping[str, Any], p: int | None = None, s: int | None = None) -> RingMatrix:
    ring = ring_from_json(data, p, s)
    data = _unwrap(data)
    rows = data.get("rows")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError("'rows' must be a list of lists")
    n = data.get("n", len(rows[0]) if rows else None)
    if n is None:
        raise SchemaError("an empty matrix needs an explicit 'n'")
    if any(len(r) != n for r in rows):
        raise SchemaError(f"declared n={n} but a row has a different length")
    matrix = RingMatrix(ring, n, tuple(tuple(element_from_json(x, ring) for x in row) for row in rows))
    _check_n(data, matrix.ncols)
    return matrix


def bundle_to_json(ring: RingParams, mats: list[ZpMatrix]) -> dict:
    return {
        "p": ring.p,
        "s": ring.s,
        "n": mats[0].ncols,
        "components": {str(r): M.to_list() for r, M in zip(ring.index_set, mats)},
    }


def bundle_from_json(
    data: Mapping[str, Any], p: int | None = None, s: int | None = None
) -> tuple[RingParams, list[ZpMatrix]]:
    ring = ring_from_json(data, p, s)
    data = _unwrap(data)
    comps = data.get("components")
    if not isinstance(comps, Mapping):
        raise SchemaError("'components' must be an object keyed by root")
    keys = {str(r) for r in ring.index_set}
    if set(comps) != keys:
        raise WrongComponentCount(f"components must be keyed exactly by {sorted(keys)}, got {sorted(comps)}")
    n = data.get("n")
    mats = []
    for r in ring.index_set:
        rows = comps[str(r)]
        if not isinstance(rows, list):
            raise SchemaError(f"component {r} must be a list of rows")
        width = n if n is not None else (len(rows[0]) if rows else None)
        if width is None:
            raise SchemaError(f"component {r} is empty and no 'n' is given")
        mats.append(ZpMatrix(ring.p, width, tuple(tuple(row) for row in rows)))
    return ring, mats


def cyclic_spec_to_json(spec: CyclicSpec) -> dict:
    return {
        "p": spec.ring.p,
        "s": spec.ring.s,
        "n": spec.n,
        "generators": {str(r): format_poly(g, "x") for r, g in zip(spec.ring.index_set, spec.generators)},
    }


def cyclic_spec_from_json(data: Mapping[str, Any], p: int | None = None, s: int | None = None) -> CyclicSpec:
    ring = ring_from_json(data, p, s)
    data = _unwrap(data)
    gens = data.get("generators")
    n = data.get("n")
    if not isinstance(gens, Mapping):
        raise SchemaError("'generators' must be an object keyed by root")
    if isinstance(n, bool) or not isinstance(n, int):
        raise SchemaError("'n' must be an integer")
    keys = {str(r) for r in ring.index_set}
    if set(gens) != keys:
        raise WrongComponentCount(f"generators must be keyed exactly by {sorted(keys)}, got {sorted(gens)}")
    polys = []
    for r in ring.index_set:
        g = gens[str(r)]
        if isinstance(g, str):
            polys.append(parse_poly(g, ring.p, "x"))
        elif isinstance(g, list):
            polys.append(ZpPoly(ring.p, tuple(g)))
        else:
            raise SchemaError(f"generator {r} must be a string or coefficient list")
    return CyclicSpec(ring, n, tuple(polys))


def ring_polynomial_to_json(g: RingPolynomial) -> dict:
    return {
        "p": g.ring.p,
        "s": g.ring.s,
        "n": g.n,
        "coeffs": [element_to_json(c) for c in g.coeffs],
    }


def ring_polynomial_from_json(data: Mapping[str, Any], p: int | None = None, s: int | None = None) -> RingPolynomial:
    ring = ring_from_json(data, p, s)
    data = _unwrap(data)
    coeffs = data.get("coeffs")
    if not isinstance(coeffs, list):
        raise SchemaError("'coeffs' must be a list")
    n = data.get("n", len(coeffs))
    return RingPolynomial(ring, n, tuple(element_from_json(c, ring) for c in coeffs))
