"""Stable JSON serialization for every object the CLI moves around.

Complex values are two-element arrays [re, im]; matrices nest row-major.
Serialization is deterministic: explicit key order, floats printed with 17
significant digits, newline-terminated output, so repeated runs produce
byte-identical files.
"""

from __future__ import annotations

import json

import numpy as np

from .characters import ControlledHadamard, Hadamard
from .construct import PartitionedUeb
from .errors import MubkitError
from .gf import FiniteField, new_field
from .mub import MubFamily


class ManifestError(MubkitError):
    """Manifest file is malformed or has an unexpected shape."""


# -- canonical writer --------------------------------------------------------

def _dump(value, out: list) -> None:
    if isinstance(value, dict):
        out.append("{")
        for i, (k, v) in enumerate(value.items()):
            if i:
                out.append(",")
            out.append(json.dumps(k))
            out.append(":")
            _dump(v, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, v in enumerate(value):
            if i:
                out.append(",")
            _dump(v, out)
        out.append("]")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, (int, np.integer)):
        out.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        out.append(format(float(value), ".17g"))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif value is None:
        out.append("null")
    else:
        raise ManifestError(f"cannot serialize {type(value).__name__}")


def dumps(obj: dict) -> str:
    out: list = []
    _dump(obj, out)
    out.append("\n")
    return "".join(out)


def write_manifest(obj: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def load_manifest(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from exc
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ManifestError(f"manifest {path} has no 'kind' field")
    return obj


# -- matrix <-> json ---------------------------------------------------------

def matrix_to_json(m) -> list:
    m = np.asarray(m, dtype=np.complex128)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def matrix_from_json(rows) -> np.ndarray:
    try:
        arr = np.asarray(
            [[complex(z[0], z[1]) for z in row] for row in rows], dtype=np.complex128
        )
    except (TypeError, IndexError, ValueError) as exc:
        raise ManifestError(f"malformed matrix payload: {exc}") from exc
    if arr.ndim != 2:
        raise ManifestError("matrix payload is not two-dimensional")
    return arr


# -- builders ----------------------------------------------------------------

def field_manifest(f: FiniteField) -> dict:
    return {"kind": "field", "dimension": f.d, "p": f.p, "n": f.n, "poly": list(f.modulus)}


def hadamard_manifest(h: Hadamard) -> dict:
    return {"kind": "hadamard", "dimension": h.d, "matrix": matrix_to_json(h.matrix)}


def controlled_hadamard_manifest(ch: ControlledHadamard) -> dict:
    return {
        "kind": "controlled_hadamard",
        "control_dim": ch.control_dim,
        "dimension": ch.d,
        "members": [matrix_to_json(m.matrix) for m in ch.members],
    }


def mub_manifest(family: MubFamily) -> dict:
    return {
        "kind": "mub",
        "dimension": family.d,
        "bases": [
            {"label": label, "matrix": matrix_to_json(basis)}
            for label, basis in zip(family.labels, family.bases)
        ],
    }


def ueb_manifest(ueb: PartitionedUeb, field: FiniteField | None = None) -> dict:
    obj = {"kind": "ueb", "dimension": ueb.d}
    if field is not None:
        obj["field"] = {"p": field.p, "n": field.n, "poly": list(field.modulus)}
    obj["operators"] = [
        {"x": x, "a": a, "matrix": matrix_to_json(ueb.op(x, a))}
        for x in range(ueb.d)
        for a in range(ueb.d)
    ]
    return obj


def report_manifest(results: list, dimension: int | None = None) -> dict:
    obj: dict = {"kind": "report"}
    if dimension is not None:
        obj["dimension"] = dimension
    obj["results"] = [
        {"equation": r["equation"], "residual": r["residual"], "pass": r["pass"]}
        for r in results
    ]
    return obj


# -- parsers -----------------------------------------------------------------

def _expect(obj: dict, kind: str) -> None:
    if obj.get("kind") != kind:
        raise ManifestError(f"expected kind {kind!r}, got {obj.get('kind')!r}")


def field_from_manifest(obj: dict) -> FiniteField:
    _expect(obj, "field")
    try:
        return new_field(int(obj["p"]), int(obj["n"]), list(obj["poly"]))
    except KeyError as exc:
        raise ManifestError(f"field manifest missing {exc}") from exc


def hadamard_from_manifest(obj: dict) -> Hadamard:
    _expect(obj, "hadamard")
    m = matrix_from_json(obj.get("matrix", []))
    return Hadamard(m.shape[0], m)


def controlled_from_manifest(obj: dict) -> ControlledHadamard:
    _expect(obj, "controlled_hadamard")
    members = [matrix_from_json(m) for m in obj.get("members", [])]
    if len(members) != int(obj.get("control_dim", -1)):
        raise ManifestError("control_dim disagrees with member count")
    return ControlledHadamard(len(members), [Hadamard(m.shape[0], m) for m in members])


def mub_from_manifest(obj: dict) -> MubFamily:
    _expect(obj, "mub")
    d = int(obj["dimension"])
    entries = obj.get("bases", [])
    by_label = {e.get("label"): matrix_from_json(e["matrix"]) for e in entries}
    want = ["*"] + [str(x) for x in range(d)]
    if sorted(by_label) != sorted(want):
        raise ManifestError(f"mub manifest must carry labels {want}")
    return MubFamily(d, [by_label[label] for label in want])


def ueb_from_manifest(obj: dict) -> PartitionedUeb:
    _expect(obj, "ueb")
    d = int(obj["dimension"])
    table = [[None] * d for _ in range(d)]
    for entry in obj.get("operators", []):
        x, a = int(entry["x"]), int(entry["a"])
        if not (0 <= x < d and 0 <= a < d):
            raise ManifestError(f"operator index ({x}, {a}) out of range")
        table[x][a] = matrix_from_json(entry["matrix"])
    if any(u is None for row in table for u in row):
        raise ManifestError("ueb manifest is missing operators")
    return PartitionedUeb(d, table)
