"""Command-line front end.

Subcommands: decompose, center, spectrum, closure, degeneracy.  Output is
deterministic: fixed field order, floats rounded to 12 decimals.  Exit
codes: 0 success, 1 usage/config error, 2 unsaturated closure, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import casimir as _casimir
from . import closure as _closure
from . import generators as _generators
from . import reptheory as _rt
from .linalg import CLUSTER_TOL, RANK_TOL, is_hermitian, is_skew_hermitian, matrix_from_json

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSATURATED = 2
EXIT_NUMERICAL = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the CLI contract wants 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _round_floats(obj):
    if isinstance(obj, float):
        return round(obj, 12)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _emit(payload, lines, args) -> None:
    if args.format == "json":
        text = json.dumps(_round_floats(payload), indent=2) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")


def cmd_decompose(args) -> int:
    dec = _rt.cg_decompose(args.n, args.d)
    rows = [
        {"iweight": list(m), "dim": _rt.irrep_dimension(m), "multiplicity": k}
        for m, k in dec.items()
    ]
    total = sum(r["multiplicity"] * r["dim"] for r in rows)
    sq = sum(r["dim"] ** 2 for r in rows)
    cap = _rt.ambient_commutant_dim(args.n, args.d)
    f = _rt.center_dimension(args.n, args.d)
    checks = {
        "sum_mult_dim": total,
        "d_pow_n": args.d**args.n,
        "sum_dim_sq": sq,
        "commutant_dim": cap,
        "distinct": len(rows),
        "center_dim": f,
    }
    ok = total == args.d**args.n and sq == cap and len(rows) == f
    payload = {"d": args.d, "n": args.n, "irreps": rows, "checks": checks, "ok": ok}
    lines = [f"CG decomposition of ({args.d}^n) with n={args.n}", "i-weight  dim  multiplicity"]
    for r in rows:
        lines.append(f"{tuple(r['iweight'])!s:>12}  {r['dim']:>4}  {r['multiplicity']:>4}")
    lines.append(f"sum k*dim = {total} = d^n: {'OK' if total == args.d ** args.n else 'FAIL'}")
    lines.append(f"sum dim^2 = {sq} = C(n+d^2-1,d^2-1) = {cap}: {'OK' if sq == cap else 'FAIL'}")
    lines.append(f"distinct irreps = {len(rows)} = f(n,d) = {f}: {'OK' if len(rows) == f else 'FAIL'}")
    _emit(payload, lines, args)
    return EXIT_OK if ok else EXIT_NUMERICAL


def cmd_center(args) -> int:
    f = _rt.center_dimension(args.n, args.d)
    payload = {"d": args.d, "n": args.n, "center_dim": f}
    lines = [f"center dimension f(n={args.n}, d={args.d}) = {f}"]
    if args.d**args.n <= 4096:
        blocks = _casimir.isotypic_blocks(args.d, args.n, args.cluster_tol, args.tol)
        cb = _casimir.center_basis_from_blocks(blocks)
        payload["materialized_dim"] = cb.dim
        payload["verified"] = cb.dim == f
        lines.append(f"materialized projector basis has dimension {cb.dim}: "
                     f"{'OK' if cb.dim == f else 'FAIL'}")
        if cb.dim != f:
            _emit(payload, lines, args)
            return EXIT_NUMERICAL
    _emit(payload, lines, args)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    blocks = _casimir.isotypic_blocks(args.d, args.n, args.cluster_tol, args.tol)
    rows = [
        {
            "block_label": list(b.label),
            "block_dim": b.block_dim,
            "c2_cluster_index": b.c2_cluster_index,
            "irrep_dim": b.irrep_dim,
            "multiplicity": b.multiplicity,
            "c3_refined": b.c3_refined,
        }
        for b in blocks
    ]
    payload = {"d": args.d, "n": args.n, "blocks": rows}
    lines = [f"isotypic blocks of ({args.d}^n), n={args.n}",
             "label  block_dim  c2_cluster  irrep_dim  mult  c3_refined"]
    for r in rows:
        lines.append(
            f"{tuple(r['block_label'])!s:>10}  {r['block_dim']:>6} {r['c2_cluster_index']:>8}"
            f" {r['irrep_dim']:>9} {r['multiplicity']:>6}   {r['c3_refined']}"
        )
    if any(r["c3_refined"] for r in rows):
        lines.append("note: C2-degenerate clusters were refined with the cubic Casimir")
    _emit(payload, lines, args)
    return EXIT_OK


def _load_generator_spec(path: str) -> _closure.GeneratorSet:
    """Generator-spec JSON: {"d", "n", "hamiltonians": [...]}.

    Each Hamiltonian is either a list of term dicts
    {"multi_index": [...], "coeff_re": x, "coeff_im": y} (a combination of
    symmetric basis elements) or a raw matrix {"dim", "re", "im"}.
    Hermitian inputs H become generators iH; skew-Hermitian inputs are used
    as given.
    """
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    try:
        d, n = int(obj["d"]), int(obj["n"])
        ham_specs = obj["hamiltonians"]
    except (KeyError, TypeError) as exc:
        raise CliError(f"malformed generator spec {path}: {exc}") from exc
    gens = []
    names = []
    for idx, spec in enumerate(ham_specs):
        if isinstance(spec, dict) and "dim" in spec:
            h = matrix_from_json(spec)
            if h.shape[0] != d**n:
                raise CliError(f"generator {idx}: matrix dim {h.shape[0]} != d^n = {d ** n}")
        elif isinstance(spec, list):
            h = _generators.hamiltonian_from_terms(spec, d, n)
        else:
            raise CliError(f"generator {idx}: expected a term list or a matrix object")
        if is_skew_hermitian(h):
            gens.append(h)
        elif is_hermitian(h):
            gens.append(1j * h)
        else:
            raise CliError(f"generator {idx} is neither Hermitian nor skew-Hermitian")
        names.append(f"H{idx}")
    return _closure.GeneratorSet(d, n, tuple(gens), tuple(names))


def cmd_closure(args) -> int:
    if (args.preset is None) == (args.spec is None):
        raise CliError("exactly one of --preset / --spec is required")
    if args.preset is not None:
        try:
            gens = _closure.preset(args.preset)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    else:
        gens = _load_generator_spec(args.spec)
    try:
        gens.validate(args.tol)
    except Exception as exc:
        raise CliError(f"invalid generator set: {exc}") from exc
    result = _closure.lie_closure(gens, args.tol, args.max_dim)
    if not result.saturated:
        payload = {
            "saturated": False,
            "rounds": result.rounds,
            "dim_reached": result.dim,
            "max_dim": args.max_dim or _rt.ambient_commutant_dim(gens.n, gens.d),
            "error": "closure not saturated",
        }
        lines = [f"closure NOT saturated: dim reached {result.dim} after {result.rounds} rounds"]
        _emit(payload, lines, args)
        return EXIT_UNSATURATED
    blocks = _casimir.isotypic_blocks(gens.d, gens.n, args.cluster_tol, args.tol)
    cb = _casimir.center_basis_from_blocks(blocks)
    report = _closure.subspace_controllability(result, blocks, cb)
    payload = report.to_json_dict()
    lines = [
        f"closure dim {report.total_dim} (saturated after {report.rounds} rounds)",
        "label  irrep_dim  mult  restricted_dim  ok",
    ]
    for b in report.per_block:
        lines.append(
            f"{tuple(b.label)!s:>10}  {b.irrep_dim:>6} {b.multiplicity:>5}"
            f" {b.restricted_dim:>10}   {b.ok}"
        )
    lines.append(f"center component dim = {report.center_component_dim}")
    lines.append(f"subspace controllable: {report.subspace_controllable}")
    _emit(payload, lines, args)
    return EXIT_OK


def cmd_degeneracy(args) -> int:
    pairs = _casimir.degeneracy_search(args.p0, args.q0)
    value = _casimir.c2_eigenvalue(args.p0, args.q0)
    payload = {"seed": [args.p0, args.q0], "c2": value, "matches": [list(p) for p in pairs]}
    lines = [f"c2({args.p0},{args.q0}) = {value}"]
    lines += [f"  ({p},{q})" for p, q in pairs]
    _emit(payload, lines, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qsymlie", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[], help="Clebsch-Gordan decomposition table")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("center", help="center dimension f(n,d), verified when materializable")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=RANK_TOL)
    p.add_argument("--cluster-tol", type=float, default=CLUSTER_TOL)
    _add_common(p)
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("spectrum", help="isotypic blocks from Casimir spectra")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=RANK_TOL)
    p.add_argument("--cluster-tol", type=float, default=CLUSTER_TOL)
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("closure", help="Lie closure and controllability report")
    p.add_argument("--preset", default=None)
    p.add_argument("--spec", default=None, help="generator-spec JSON path")
    p.add_argument("--tol", type=float, default=RANK_TOL)
    p.add_argument("--cluster-tol", type=float, default=CLUSTER_TOL)
    p.add_argument("--max-dim", type=int, default=None,
                   help="dimension cap (default: the ambient bound C(n+d^2-1,d^2-1))")
    _add_common(p)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("degeneracy", help="all (p,q) sharing the quadratic Casimir value")
    p.add_argument("p0", type=int)
    p.add_argument("q0", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_degeneracy)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "d", 2) < 2 or getattr(args, "n", 1) < 1:
        ap.error("need d >= 2 and n >= 1")
    if getattr(args, "p0", 0) < 0 or getattr(args, "q0", 0) < 0:
        ap.error("quantum numbers must be nonnegative")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (_closure.UnsaturatedClosureError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSATURATED
    except (
        _casimir.UnresolvedDegeneracyError,
        _closure.ClosureError,
        np.linalg.LinAlgError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
