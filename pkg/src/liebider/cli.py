"""Command-line front end.

Commands read AlgebraDocument / BiderivationDocument JSON files, run the
exact solvers, and emit either a human-readable text report or (with
``--json``) a machine-readable ReportDocument.  Identical inputs always
produce byte-identical output.

Exit codes: 0 on success/pass, 1 on a mathematical failure (a violated
condition, a Jacobi-invalid table, a failed direct sum, non-closure), 2 on
input errors (malformed documents, unknown names, usage problems).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import __version__
from .biderivations import (
    Biderivation,
    NotBiderivation,
    NotComplete,
    bider_bracket_closure,
    biderivation_space,
    biderivation_violation,
    constrained_biderivation_space,
    extract_phi_psi,
)
from .catalog import CATALOG_NAMES, UnknownName, catalog
from .derivations import derivation_space, inner_derivation_space, is_complete
from .documents import (
    DimMismatch,
    JacobiError,
    ParseError,
    algebra_to_document,
    biderivation_to_document,
    matrix_strs,
    serialize_document,
    vector_strs,
    load_algebra_document,
    parse_biderivation,
)
from .liealg import (
    JacobiViolation,
    LieAlgebra,
    center,
    killing_form,
    lower_central_series,
    validate,
)
from .linalg import Matrix
from .vdecomp import bider_V_correspondence, verify_direct_sum


class _InputError(Exception):
    """Internal: wraps any input problem destined for exit code 2."""


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_algebra(path: str, skip_jacobi: bool) -> tuple[LieAlgebra, dict]:
    """Parse an algebra file; returns the algebra and its document echo."""
    text = _read_file(path)
    alg, name = load_algebra_document(text, skip_jacobi=True)
    if not skip_jacobi:
        violation = validate(alg)
        if violation is not None:
            raise JacobiError(violation)
    return alg, algebra_to_document(alg, name)


def _violation_fields(v: JacobiViolation) -> dict:
    return {"triple": [v.i, v.j, v.k], "residual": vector_strs(v.residual)}


# ---------------------------------------------------------------------------
# Text rendering


def _aligned_matrix(mat: list[list[str]], indent: str) -> list[str]:
    if not mat or not mat[0]:
        return [f"{indent}[]"]
    widths = [
        max(len(mat[r][c]) for r in range(len(mat)))
        for c in range(len(mat[0]))
    ]
    return [
        indent + "[ " + "  ".join(e.rjust(w) for e, w in zip(row, widths)) + " ]"
        for row in mat
    ]


def _list_depth(value) -> int:
    """Nesting depth down to the first non-list leaf (0 for a scalar)."""
    depth = 0
    while isinstance(value, list):
        depth += 1
        if not value:
            break
        value = value[0]
    return depth


def _render_value(key: str, value, indent: str, out: list[str]) -> None:
    if isinstance(value, dict):
        out.append(f"{indent}{key}:")
        for sub, sval in value.items():
            _render_value(sub, sval, indent + "  ", out)
        return
    if isinstance(value, list):
        if value and isinstance(value[0], dict):
            out.append(f"{indent}{key}:")
            for i, entry in enumerate(value):
                _render_value(f"[{i}]", entry, indent + "  ", out)
            return
        depth = _list_depth(value)
        if depth == 2 and value:  # one matrix
            out.append(f"{indent}{key}:")
            out.extend(_aligned_matrix(value, indent + "  "))
            return
        if depth == 3:  # list of matrices
            out.append(f"{indent}{key}:")
            for i, mat in enumerate(value):
                out.append(f"{indent}  [{i}]:")
                out.extend(_aligned_matrix(mat, indent + "    "))
            return
        if depth == 4:  # list of matrix tuples (biderivation basis)
            out.append(f"{indent}{key}:")
            for i, tup in enumerate(value):
                out.append(f"{indent}  element {i}:")
                for k, mat in enumerate(tup):
                    out.append(f"{indent}    B{k + 1}:")
                    out.extend(_aligned_matrix(mat, indent + "      "))
            return
        rendered = "[" + ", ".join(str(v) for v in value) + "]"
        out.append(f"{indent}{key}: {rendered}")
        return
    if isinstance(value, bool):
        value = "true" if value else "false"
    elif value is None:
        value = "none"
    out.append(f"{indent}{key}: {value}")


def emit_report(report: dict, mode: str) -> str:
    """Render a ReportDocument as canonical JSON or aligned text."""
    if mode == "json":
        return serialize_document(report)
    out: list[str] = [f"command: {report['command']}"]
    for key, value in report.get("results", {}).items():
        _render_value(key, value, "", out)
    return "\n".join(out) + "\n"


def _report(
    command: str, inputs: dict, results: dict
) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "version": __version__,
    }


# ---------------------------------------------------------------------------
# Command implementations (each returns (results, exit_code))


def _cmd_validate(alg: LieAlgebra) -> tuple[dict, int]:
    violation = validate(alg)
    if violation is None:
        return {"valid": True, "violation": None}, 0
    return {"valid": False, "violation": _violation_fields(violation)}, 1


def _cmd_info(alg: LieAlgebra) -> tuple[dict, int]:
    series = lower_central_series(alg)
    kf = killing_form(alg)
    comp = is_complete(alg)
    results = {
        "dim": alg.dim,
        "basis": list(alg.basis_names),
        "center_dim": center(alg).dim,
        "lower_central_dims": [t.dim for t in series.terms],
        "nilpotent": series.nilpotent,
        "nilpotency_class": series.nilpotency_class
        if series.nilpotent
        else "not nilpotent",
        "killing_rank": kf.rank,
        "semisimple": kf.semisimple,
        "derivation_dim": comp.derivation_dim,
        "inner_dim": comp.inner_dim,
        "complete": comp.complete,
    }
    if alg.factors is not None:
        results["factors"] = list(alg.factors)
    return results, 0


def _cmd_derivations(alg: LieAlgebra) -> tuple[dict, int]:
    der = derivation_space(alg)
    inner = inner_derivation_space(alg)
    n = alg.dim
    basis = [matrix_strs(Matrix.from_flat(v, n, n)) for v in der.basis]
    return {
        "derivation_dim": der.dim,
        "inner_dim": inner.dim,
        "basis": basis,
    }, 0


def _cmd_biderivations(alg: LieAlgebra, mode: str) -> tuple[dict, int]:
    if mode == "all":
        space = biderivation_space(alg)
    else:
        space = constrained_biderivation_space(alg, mode)
    basis = [
        [matrix_strs(m) for m in element.mats]
        for element in space.basis_elements()
    ]
    return {"dim": space.dim, "mode": mode, "basis": basis}, 0


def _cmd_check_bider(alg: LieAlgebra, cand: Biderivation) -> tuple[dict, int]:
    violation = biderivation_violation(alg, cand)
    if violation is None:
        return {"ok": True, "violation": None}, 0
    return {
        "ok": False,
        "violation": {
            "condition": violation.condition,
            "triple": list(violation.triple),
            "residual": vector_strs(violation.residual),
        },
    }, 1


def _classify_symmetry(cand: Biderivation) -> str:
    symmetric = all(m == m.transpose() for m in cand.mats)
    skew = all(m == -m.transpose() for m in cand.mats)
    if symmetric and not skew:
        return "symmetric"
    if skew and not symmetric:
        return "skew"
    if symmetric and skew:
        return "zero"
    return "mixed"


def _cmd_phi_psi(alg: LieAlgebra, cand: Biderivation) -> tuple[dict, int]:
    try:
        pair = extract_phi_psi(alg, cand)
    except NotComplete as exc:
        return {"error": str(exc)}, 1
    except NotBiderivation as exc:
        v = exc.violation
        return {
            "error": "candidate is not a biderivation",
            "violation": {
                "condition": v.condition,
                "triple": list(v.triple),
                "residual": vector_strs(v.residual),
            },
        }, 1
    return {
        "phi": matrix_strs(pair.phi),
        "psi": matrix_strs(pair.psi),
        "classification": _classify_symmetry(cand),
    }, 0


def _cmd_vdecomp(alg: LieAlgebra) -> tuple[dict, int]:
    report = verify_direct_sum(alg)
    results = {
        "m_convention": "M = transpose of phi-matrix",
        "v_dim": report.v_dim,
        "vplus_dim": report.vplus_dim,
        "vminus_dim": report.vminus_dim,
        "intersection_dim": report.intersection_dim,
        "direct_sum": report.is_direct_sum,
        "complete": report.complete,
        "correspondence": None,
    }
    code = 0 if report.is_direct_sum else 1
    if report.complete:
        corr = bider_V_correspondence(alg)
        results["correspondence"] = {
            "bider_dim": corr.bider_dim,
            "v_dim": corr.v_dim,
            "dims_equal": corr.dims_equal,
            "transposed_phis_in_v": corr.transposed_phis_in_v,
            "semisimple": corr.semisimple,
            "factor_count": corr.factor_count,
            "semisimple_shape_ok": corr.semisimple_shape_ok,
            "ok": corr.ok,
        }
        if not corr.ok:
            code = 1
    return results, code


def _cmd_bracket_closure(alg: LieAlgebra) -> tuple[dict, int]:
    report = bider_bracket_closure(alg)
    if report.closed:
        constants = [
            {
                "left": a,
                "right": b,
                "result": [{"coeff": str(c), "index": k}],
            }
            for (a, b, k), c in sorted(report.constants.items())
        ]
        merged: list[dict] = []
        for entry in constants:
            if merged and (merged[-1]["left"], merged[-1]["right"]) == (
                entry["left"],
                entry["right"],
            ):
                merged[-1]["result"].extend(entry["result"])
            else:
                merged.append(entry)
        return {
            "closed": True,
            "bider_dim": report.bider_dim,
            "induced_brackets": merged,
            "witness_pair": None,
        }, 0
    a, b, _comm = report.witness
    return {
        "closed": False,
        "bider_dim": report.bider_dim,
        "induced_brackets": None,
        "witness_pair": [a, b],
    }, 1


def _cmd_catalog(name: Optional[str], seed: int, json_mode: bool) -> tuple[str, int]:
    if name is None:
        if json_mode:
            report = _report(
                "catalog", {}, {"names": list(CATALOG_NAMES)}
            )
            return emit_report(report, "json"), 0
        lines = [f"{entry}" for entry in CATALOG_NAMES]
        return "\n".join(lines) + "\n", 0
    try:
        alg = catalog(name, seed=seed)
    except UnknownName as exc:
        raise _InputError(str(exc)) from None
    return serialize_document(algebra_to_document(alg, name)), 0


# ---------------------------------------------------------------------------
# Argument parsing and dispatch


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liebider",
        description=(
            "Exact derivation and biderivation computations for Lie "
            "algebras given by rational structure constants."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit a machine-readable report"
    )
    common.add_argument(
        "--seed", type=int, default=0, help="seed for parameterized catalog entries"
    )
    common.add_argument(
        "--skip-jacobi",
        action="store_true",
        help="parse without the Jacobi check (diagnostics only; solvers still refuse)",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd, needs_bfile, help_text in (
        ("validate", False, "check the Jacobi identity of an algebra file"),
        ("info", False, "dimensions, series, Killing rank, completeness"),
        ("derivations", False, "derivation and inner-derivation spaces"),
        ("biderivations", False, "the space of biderivations"),
        ("check-bider", True, "verify a candidate biderivation"),
        ("phi-psi", True, "factor a biderivation through phi and psi"),
        ("vdecomp", False, "V = V+ (+) V- decomposition and correspondence"),
        ("bracket-closure", False, "closure of biderivations under the matrix bracket"),
    ):
        p = sub.add_parser(cmd, parents=[common], help=help_text)
        p.add_argument("file", help="AlgebraDocument JSON file")
        if needs_bfile:
            p.add_argument("bfile", help="BiderivationDocument JSON file")
        if cmd == "biderivations":
            group = p.add_mutually_exclusive_group()
            group.add_argument(
                "--symmetric", action="store_true",
                help="restrict to symmetric biderivations",
            )
            group.add_argument(
                "--skew", action="store_true",
                help="restrict to skew biderivations",
            )
    p = sub.add_parser(
        "catalog", parents=[common], help="list catalog names or emit one entry"
    )
    p.add_argument("name", nargs="?", help="catalog entry to emit")
    return parser


def run_command(argv: Sequence[str]) -> int:
    """Run one CLI invocation; prints the report and returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    mode = "json" if args.json else "text"
    try:
        if args.command == "catalog":
            output, code = _cmd_catalog(args.name, args.seed, args.json)
            sys.stdout.write(output)
            return code
        # Parse leniently, then enforce the Jacobi identity ourselves: the
        # validate command reports the diagnostics, every other command
        # refuses invalid tables regardless of --skip-jacobi.
        alg, echo = _load_algebra(args.file, skip_jacobi=True)
        inputs: dict = {"algebra": echo}
        if args.command != "validate":
            violation = validate(alg)
            if violation is not None:
                report = _report(
                    args.command,
                    inputs,
                    {"valid": False, "violation": _violation_fields(violation)},
                )
                sys.stdout.write(emit_report(report, mode))
                return 1
        cand: Optional[Biderivation] = None
        if args.command in ("check-bider", "phi-psi"):
            cand = parse_biderivation(_read_file(args.bfile), alg)
            inputs["biderivation"] = biderivation_to_document(cand)
        if args.command == "validate":
            results, code = _cmd_validate(alg)
        elif args.command == "info":
            results, code = _cmd_info(alg)
        elif args.command == "derivations":
            results, code = _cmd_derivations(alg)
        elif args.command == "biderivations":
            bmode = (
                "symmetric"
                if args.symmetric
                else "skew" if args.skew else "all"
            )
            results, code = _cmd_biderivations(alg, bmode)
        elif args.command == "check-bider":
            results, code = _cmd_check_bider(alg, cand)
        elif args.command == "phi-psi":
            results, code = _cmd_phi_psi(alg, cand)
        elif args.command == "vdecomp":
            results, code = _cmd_vdecomp(alg)
        elif args.command == "bracket-closure":
            results, code = _cmd_bracket_closure(alg)
        else:  # pragma: no cover - argparse enforces the command set
            raise _InputError(f"unknown command {args.command!r}")
        report = _report(args.command, inputs, results)
        sys.stdout.write(emit_report(report, mode))
        return code
    except (_InputError, ParseError, DimMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
