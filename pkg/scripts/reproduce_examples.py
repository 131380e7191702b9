"""Re-run the worked examples and write their inputs as JSON documents.

The files land in ``data/`` next to this directory and can be fed straight
to the ``ringcodes`` command line.
"""
from __future__ import annotations

import argparse
import json
from pathlib import Path

from ringcodes import schemas
from ringcodes import worked_examples as wx


def write_inputs(out: Path) -> list[Path]:
    out.mkdir(parents=True, exist_ok=True)
    docs = {
        "example_i.json": schemas.ring_matrix_to_json(wx.ring_matrix(wx.EXAMPLE_I_G)),
        "example_ii.json": schemas.ring_matrix_to_json(wx.ring_matrix(wx.EXAMPLE_II_G)),
        "example_i_components.json": schemas.bundle_to_json(wx.ring(), wx.zp_matrices(wx.EXAMPLE_I_COMPONENTS)),
        "cyclic_n4.json": schemas.cyclic_spec_to_json(wx.cyclic_spec(wx.CYCLIC_4_GENERATORS, 4)),
        "cyclic_n5.json": schemas.cyclic_spec_to_json(wx.cyclic_spec(wx.CYCLIC_5_GENERATORS, 5)),
    }
    paths = []
    for name, doc in docs.items():
        path = out / name
        path.write_text(json.dumps(doc, indent=2) + "\n")
        paths.append(path)
    return paths


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data")
    args = ap.parse_args()
    for path in write_inputs(args.out):
        print(f"wrote {path}")
    results = wx.run_checks()
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 2


if __name__ == "__main__":
    raise SystemExit(main())
