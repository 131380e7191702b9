"""Command-line front end.

Each verb reads its input (a file path, ``-`` for stdin, or inline JSON),
calls into the library and prints a report as text or JSON. Failures are
printed to stderr as ``code=<NAME> detail=<...>``; the exit status is 1 for
invalid input and 2 when a computation cannot be completed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import schemas
from .cyclic import compose_cyclic_generator, cyclic_code, factor_xn_minus_1, is_cyclic
from .errors import RingCodesError, SchemaError, ValidationError
from .linear import (
    RingLinearCode,
    cardinality,
    component_dual,
    compose_generator,
    decompose_generator,
    dual_code,
    is_mds,
    min_distance,
    min_weight_word,
)
from .polytext import format_poly
from .ring import make_ring
from .worked_examples import run_checks
from .zp import check_prime

VERBS = (
    "ring-info",
    "decompose",
    "compose",
    "distance",
    "dual",
    "cyclic-compose",
    "cyclic-factor",
    "verify-paper",
)


class InputError(ValidationError):
    pass


@dataclass(frozen=True)
class Command:
    verb: str
    p: int | None = None
    s: int | None = None
    n: int | None = None
    source: str | None = None
    fmt: str = "text"
    cap: int | None = None


@dataclass
class Report:
    verb: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    warnings: list[str] = field(default_factory=list)
    text: list[str] = field(default_factory=list)
    exit_status: int = 0

    def to_json(self) -> dict[str, Any]:
        return {"verb": self.verb, "inputs": self.inputs, "results": self.results, "warnings": self.warnings}

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2)
        lines = list(self.text)
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines)


def load_source(source: str | None) -> Any:
    if source is None:
        raise InputError("no input given")
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("{", "[")):
        text = source
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def _load_code(cmd: Command) -> tuple[RingLinearCode, dict]:
    data = load_source(cmd.source)
    body = schemas._unwrap(data)
    if "rows" in body:
        G = schemas.ring_matrix_from_json(data, cmd.p, cmd.s)
        return RingLinearCode.from_generator(G), {"generator": schemas.ring_matrix_to_json(G)}
    if "components" in body:
        ring, mats = schemas.bundle_from_json(data, cmd.p, cmd.s)
        return RingLinearCode.from_component_matrices(ring, mats), {"components": schemas.bundle_to_json(ring, mats)}
    raise SchemaError("expected a ring matrix ('rows') or a component bundle ('components')")


def _ring_info(cmd: Command) -> Report:
    ring = make_ring(cmd.p, cmd.s)
    idem = {str(r): format_poly(a.poly()) for r, a in zip(ring.index_set, ring.idempotents)}
    results = {
        "p": ring.p,
        "s": ring.s,
        "index_set": list(ring.index_set),
        "modulus": format_poly(ring.modulus),
        "q": {str(r): q for r, q in zip(ring.index_set, ring.q)},
        "idempotents": idem,
        "cardinality": ring.cardinality,
    }
    text = [
        f"ring R_{{{ring.s},{ring.p}}} = Z_{ring.p}[u]/({results['modulus']})",
        f"I_{ring.s} = {list(ring.index_set)}",
        f"cardinality = {ring.p}^{ring.dim} = {ring.cardinality}",
    ]
    text += [f"alpha_{r} = {idem[str(r)]}  (q_{r} = {q})" for r, q in zip(ring.index_set, ring.q)]
    return Report(cmd.verb, {"p": cmd.p, "s": cmd.s}, results, text=text)


def _decompose(cmd: Command) -> Report:
    data = load_source(cmd.source)
    G = schemas.ring_matrix_from_json(data, cmd.p, cmd.s)
    mats = decompose_generator(G)
    results = schemas.bundle_to_json(G.ring, mats)
    text = []
    for r, M in zip(G.ring.index_set, mats):
        text.append(f"G_{r}:")
        text += ["  " + " ".join(map(str, row)) for row in M.rows]
    return Report(cmd.verb, {"generator": schemas.ring_matrix_to_json(G)}, results, text=text)


def _compose(cmd: Command) -> Report:
    ring, mats = schemas.bundle_from_json(load_source(cmd.source), cmd.p, cmd.s)
    G = compose_generator(ring, mats)
    results = schemas.ring_matrix_to_json(G)
    text = ["G:"] + ["  " + " | ".join(row) for row in results["rows"]]
    return Report(cmd.verb, {"components": schemas.bundle_to_json(ring, mats)}, results, text=text)


def _distance(cmd: Command) -> Report:
    C, inputs = _load_code(cmd)
    per = {}
    text = []
    for comp in C.components:
        d, witness = min_weight_word(comp, cmd.cap)
        mds = is_mds(comp, cmd.cap) if d is not None else False
        per[str(comp.index)] = {
            "rank": comp.rank,
            "distance": d,
            "witness": list(witness) if witness is not None else None,
            "mds": mds,
        }
        shown = "-" if d is None else str(d)
        text.append(f"C_{comp.index}: k={comp.rank} d={shown}" + (" MDS" if mds else ""))
    d_all = min_distance(C, cmd.cap)
    card = cardinality(C)
    results = {
        "p": C.ring.p,
        "s": C.ring.s,
        "n": C.length,
        "component_codes": per,
        "distances": [per[str(r)]["distance"] for r in C.ring.index_set],
        "distance": d_all,
        "cardinality": card,
        "log_p_cardinality": sum(C.ranks),
    }
    text += [f"d_H(C) = {d_all}", f"|C| = {C.ring.p}^{sum(C.ranks)} = {card}"]
    return Report(cmd.verb, inputs, results, text=text)


def _dual(cmd: Command) -> Report:
    C, inputs = _load_code(cmd)
    warnings = []
    for comp in C.components:
        _, perm = component_dual(comp)
        if perm != tuple(range(comp.length)):
            warnings.append(f"component {comp.index}: column permutation {list(perm)} applied for systematic form")
    D = dual_code(C)
    H = D.generator_matrix()
    results = schemas.ring_matrix_to_json(H)
    results.update(schemas.bundle_to_json(C.ring, [c.generator for c in D.components]))
    text = []
    for comp in D.components:
        text.append(f"H_{comp.index}:")
        text += ["  " + " ".join(map(str, row)) for row in comp.generator.rows] or ["  (zero)"]
    text.append("H:")
    text += ["  " + " | ".join(row) for row in results["rows"]] or ["  (zero)"]
    return Report(cmd.verb, inputs, results, warnings=warnings, text=text)


def _cyclic_compose(cmd: Command) -> Report:
    spec = schemas.cyclic_spec_from_json(load_source(cmd.source), cmd.p, cmd.s)
    if cmd.n is not None and cmd.n != spec.n:
        raise SchemaError(f"document has n={spec.n} but n={cmd.n} was requested")
    g = compose_cyclic_generator(spec)
    results = schemas.ring_polynomial_to_json(g)
    results["generators"] = schemas.cyclic_spec_to_json(spec)["generators"]
    results["text"] = str(g)
    results["is_cyclic"] = is_cyclic(cyclic_code(spec))
    text = [f"g(x) = {g}"]
    return Report(cmd.verb, {"spec": schemas.cyclic_spec_to_json(spec)}, results, text=text)


def _cyclic_factor(cmd: Command) -> Report:
    if cmd.p is None or cmd.n is None:
        raise InputError("cyclic-factor needs --p and --n")
    fl = factor_xn_minus_1(cmd.p, cmd.n)
    results = {
        "p": fl.p,
        "n": fl.n,
        "factors": [
            {"poly": format_poly(f, "x"), "root": r, "multiplicity": m}
            for (f, m), r in zip(fl.factors, fl.roots)
        ],
        "text": str(fl),
    }
    return Report(cmd.verb, {"p": cmd.p, "n": cmd.n}, results, text=[f"x^{fl.n}-1 = {fl}"])


def _verify_paper(cmd: Command) -> Report:
    checks = run_checks()
    ok = all(c.passed for c in checks)
    results = {
        "checks": [{"item": c.item, "name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
        "passed": ok,
    }
    text = [c.line() for c in checks]
    text.append("all checks passed" if ok else "some checks FAILED")
    return Report(cmd.verb, {}, results, text=text, exit_status=0 if ok else 2)


_DISPATCH = {
    "ring-info": _ring_info,
    "decompose": _decompose,
    "compose": _compose,
    "distance": _distance,
    "dual": _dual,
    "cyclic-compose": _cyclic_compose,
    "cyclic-factor": _cyclic_factor,
    "verify-paper": _verify_paper,
}


def run(cmd: Command) -> Report:
    if cmd.verb not in _DISPATCH:
        raise InputError(f"unknown verb {cmd.verb!r}")
    if cmd.p is not None:
        check_prime(cmd.p)
        if cmd.s is not None:
            make_ring(cmd.p, cmd.s)
    if cmd.verb == "ring-info" and (cmd.p is None or cmd.s is None):
        raise InputError("ring-info needs --p and --s")
    return _DISPATCH[cmd.verb](cmd)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"code=UsageError detail={message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")

    ring_args = argparse.ArgumentParser(add_help=False)
    ring_args.add_argument("--p", type=int)
    ring_args.add_argument("--s", type=int)

    parser = _Parser(prog="ringcodes", description="Linear and cyclic codes over Z_p[u]/((u^p-u)/(u-s)).")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    sub.add_parser("ring-info", parents=[common, ring_args], help="modulus, idempotents, cardinality")
    for verb, flag, what in (
        ("decompose", "--generator", "split a ring generator matrix into component matrices"),
        ("compose", "--components", "combine component matrices into a ring matrix"),
        ("distance", "--generator", "component and ring minimum distances"),
        ("dual", "--generator", "parity-check matrices of the dual code"),
        ("cyclic-compose", "--spec", "ring generator polynomial of a cyclic code"),
    ):
        sp = sub.add_parser(verb, parents=[common, ring_args], help=what)
        sp.add_argument(flag, dest="source", required=True, help="JSON file, '-' for stdin, or inline JSON")
        if verb == "distance":
            sp.add_argument("--cap", type=int, help="enumeration cap (default: $RINGCODES_ENUM_CAP or 10^7)")
        if verb == "cyclic-compose":
            sp.add_argument("--n", type=int)

    sp = sub.add_parser("cyclic-factor", parents=[common], help="factor x^n - 1 over Z_p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sub.add_parser("verify-paper", parents=[common], help="re-run the reference worked examples")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cmd = Command(
        verb=args.verb,
        p=getattr(args, "p", None),
        s=getattr(args, "s", None),
        n=getattr(args, "n", None),
        source=getattr(args, "source", None),
        fmt=args.fmt,
        cap=getattr(args, "cap", None),
    )
    try:
        report = run(cmd)
    except RingCodesError as exc:
        detail = str(exc).replace("\n", " ")
        print(f"code={exc.code} detail={detail}", file=sys.stderr)
        return exc.exit_status
    print(report.render(cmd.fmt))
    return report.exit_status


if __name__ == "__main__":
    raise SystemExit(main())
