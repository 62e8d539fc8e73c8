"""Command-line frontend.

Commands: construct, verify, theta, phi, axioms. Exit codes: 0 success,
1 verification or precondition failure, 2 usage or I/O problems. Outputs
are deterministic for identical flags (fixed seeds, canonical key order,
17-significant-digit floats).
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

import numpy as np

from . import axioms, cplx, manifests
from .characters import (
    additive_character_matrix,
    is_controlled_hadamard,
    is_hadamard,
    multiplicative_character_matrix,
)
from .construct import ueb_from_field, ueb_from_mub
from .errors import DephasingWarning, MubkitError
from .gf import new_field
from .manifests import ManifestError
from .mub import is_maximal_mub_family, mub_from_ueb

USAGE_OR_IO = 2
VERIFY_FAIL = 1


def _parse_poly(text):
    if text is None:
        return None
    try:
        return [int(c) for c in text.split(",")]
    except ValueError as exc:
        raise ManifestError(f"cannot parse polynomial {text!r}: {exc}") from exc


def cmd_construct(args) -> int:
    field = new_field(args.p, args.n, _parse_poly(args.poly))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    emit = args.emit
    wanted = {"field", "ueb", "mub", "chi", "psi"} if emit == "all" else {emit}

    written = []
    if "field" in wanted:
        manifests.write_manifest(manifests.field_manifest(field), out / "field.json")
        written.append("field.json")
    ueb = None
    if wanted & {"ueb", "mub"}:
        ueb = ueb_from_field(field)
    if "ueb" in wanted:
        manifests.write_manifest(manifests.ueb_manifest(ueb, field), out / "ueb.json")
        written.append("ueb.json")
    if "mub" in wanted:
        family = mub_from_ueb(ueb, args.tol, args.seed)
        manifests.write_manifest(manifests.mub_manifest(family), out / "mub.json")
        written.append("mub.json")
    if "chi" in wanted:
        manifests.write_manifest(
            manifests.hadamard_manifest(additive_character_matrix(field)), out / "chi.json"
        )
        written.append("chi.json")
    if "psi" in wanted:
        manifests.write_manifest(
            manifests.hadamard_manifest(multiplicative_character_matrix(field)), out / "psi.json"
        )
        written.append("psi.json")
    for name in written:
        print(out / name)
    return 0


def _residual_lines(kind, obj, tol):
    """(results, ok) for a loaded manifest object."""
    if kind == "field":
        manifests.field_from_manifest(obj)  # raises if p is not prime or the modulus is reducible
        return [{"equation": "field_valid", "residual": 0.0, "pass": True}], True
    if kind == "hadamard":
        h = manifests.hadamard_from_manifest(obj)
        m = h.matrix
        d = h.d
        modulus = cplx.max_abs(np.abs(m) - 1.0)
        gram = max(
            cplx.max_abs(m @ m.conj().T - d * np.eye(d)),
            cplx.max_abs(m.conj().T @ m - d * np.eye(d)),
        )
        ok = is_hadamard(m, tol)
        return [
            {"equation": "hadamard_unit_modulus", "residual": float(modulus), "pass": modulus < tol},
            {"equation": "hadamard_gram", "residual": float(gram), "pass": gram < tol},
        ], ok
    if kind == "controlled_hadamard":
        ch = manifests.controlled_from_manifest(obj)
        ok = is_controlled_hadamard(ch, tol)
        return [{"equation": "controlled_hadamard", "residual": 0.0 if ok else 1.0, "pass": ok}], ok
    if kind == "mub":
        family = manifests.mub_from_manifest(obj)
        d = family.d
        worst = 0.0
        for i in range(d + 1):
            for m in range(i + 1, d + 1):
                overlap = np.abs(family.bases[i].conj().T @ family.bases[m]) ** 2
                worst = max(worst, cplx.max_abs(overlap - 1.0 / d))
        ok = is_maximal_mub_family(family, tol)
        return [{"equation": "maximal_mub_overlaps", "residual": float(worst), "pass": ok}], ok
    if kind == "ueb":
        ueb = manifests.ueb_from_manifest(obj)
        d = ueb.d
        flat = ueb.flat()
        eye = np.eye(d)
        unitarity = max(cplx.max_abs(u.conj().T @ u - eye) for u in flat)
        gram = np.einsum("aij,bij->ab", flat.conj(), flat)
        trace_law = cplx.max_abs(gram - d * np.eye(d * d))
        commutator = 0.0
        classes = [ueb.class_star()] + [ueb.class_ops(x) for x in range(d)]
        for ops in classes:
            for i in range(len(ops)):
                for j in range(i + 1, len(ops)):
                    commutator = max(commutator, cplx.max_abs(ops[i] @ ops[j] - ops[j] @ ops[i]))
        identity_residual = cplx.max_abs(ueb.op(0, 0) - eye)
        results = [
            {"equation": "ueb_unitarity", "residual": float(unitarity), "pass": unitarity < tol},
            {"equation": "ueb_trace_law", "residual": float(trace_law), "pass": trace_law < tol},
            {"equation": "ueb_identity_slot", "residual": float(identity_residual),
             "pass": identity_residual < tol},
            {"equation": "ueb_class_commutators", "residual": float(commutator),
             "pass": commutator < tol},
        ]
        return results, all(r["pass"] for r in results)
    if kind == "report":
        results = obj.get("results", [])
        return results, all(r.get("pass") for r in results)
    raise ManifestError(f"unknown manifest kind {obj.get('kind')!r}")


def cmd_verify(args) -> int:
    obj = manifests.load_manifest(args.path)
    results, ok = _residual_lines(obj["kind"], obj, args.tol)
    for r in results:
        print(f"{r['equation']}: residual {r['residual']:.3e} {'PASS' if r['pass'] else 'FAIL'}")
    return 0 if ok else VERIFY_FAIL


def cmd_theta(args) -> int:
    ueb = manifests.ueb_from_manifest(manifests.load_manifest(args.ueb))
    family = mub_from_ueb(ueb, args.tol, args.seed)
    manifests.write_manifest(manifests.mub_manifest(family), args.out)
    print(args.out)
    return 0


def cmd_phi(args) -> int:
    family = manifests.mub_from_manifest(manifests.load_manifest(args.mub))
    controlled = manifests.controlled_from_manifest(manifests.load_manifest(args.hadamards))
    g = manifests.hadamard_from_manifest(manifests.load_manifest(args.g))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DephasingWarning)
        ueb = ueb_from_mub(family, controlled, g, args.tol)
        for w in caught:
            if issubclass(w.category, DephasingWarning):
                print(f"note: {w.message}")
    manifests.write_manifest(manifests.ueb_manifest(ueb), args.out)
    print(args.out)
    return 0


def cmd_axioms(args) -> int:
    field = new_field(args.p, args.n, _parse_poly(args.poly))
    report = axioms.run_axiom_suite(field, args.tol)
    worst = 0.0
    failed = 0
    for r in report:
        print(f"{r['equation']}: residual {r['residual']:.3e} {'PASS' if r['pass'] else 'FAIL'}")
        worst = max(worst, r["residual"])
        failed += 0 if r["pass"] else 1
    print(f"{len(report) - failed}/{len(report)} equations passed (worst residual {worst:.3e})")
    return 0 if failed == 0 else VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mubkit",
        description="Construct and verify maximal MUB families and partitioned "
                    "unitary error bases from finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=True):
        p.add_argument("--tol", type=float, default=cplx.DEFAULT_TOL)
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("construct", help="build field objects and write manifests")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", type=str, default=None,
                   help="comma-separated modulus coefficients, low degree first")
    p.add_argument("--emit", choices=["all", "field", "ueb", "mub", "chi", "psi"], default="all")
    p.add_argument("--out", type=str, default=".")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="validate a manifest and print residuals")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("theta", help="extract the MUB family of a partitioned UEB")
    p.add_argument("ueb")
    p.add_argument("--out", type=str, required=True)
    common(p)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("phi", help="build a partitioned UEB from a MUB family and Hadamard data")
    p.add_argument("mub")
    p.add_argument("hadamards")
    p.add_argument("g")
    p.add_argument("--out", type=str, required=True)
    common(p)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("axioms", help="run the full tensor-equation report for a field")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", type=str, default=None)
    common(p, seed=False)
    p.set_defaults(func=cmd_axioms)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ManifestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_OR_IO
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_OR_IO
    except MubkitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        # invalid field parameters on the building commands are usage errors,
        # everywhere else a domain error is a verification failure
        return USAGE_OR_IO if args.command in ("construct", "axioms") else VERIFY_FAIL


if __name__ == "__main__":
    sys.exit(main())
