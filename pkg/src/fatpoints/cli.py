"""Command-line surface: dimension reports, secant dimensions, the
classification oracle, reduction chains, certificates and a parallel
sweep harness.

Exit codes: 0 for non-special / success, 2 for a special candidate,
3 for an inconclusive report, 1 for a failed check, 64 for usage
errors.  Data goes to stdout (JSON or TSV), diagnostics to stderr.
Environment variables FATPOINTS_PRIME and FATPOINTS_SEED mirror
--prime/--seed; explicit flags win.
"""

from __future__ import annotations

import argparse
import dataclasses
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import catalect, degen, gf, interp, reductions
from .classify import SPECIAL, classify
from .model import (
    FatPointSpec,
    INCONCLUSIVE,
    MultiDegree,
    NON_SPECIAL,
    SPECIAL_CANDIDATE,
    critical_range,
    product_system,
    projective_system,
)

EX_OK = 0
EX_SPECIAL = 2
EX_INCONCLUSIVE = 3
EX_FAILED = 1
EX_USAGE = 64

_STATUS_EXIT = {NON_SPECIAL: EX_OK, SPECIAL_CANDIDATE: EX_SPECIAL,
                INCONCLUSIVE: EX_INCONCLUSIVE}


class UsageError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise UsageError(f"not a comma-separated integer list: {text!r}")


def _emit(obj, fmt: str):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        if isinstance(obj, dict):
            keys = sorted(obj)
            print("\t".join(keys))
            print("\t".join(str(obj[k]) for k in keys))
        else:
            print(obj)


def _resolve_n(token: str, deg: MultiDegree) -> int:
    lo, hi = critical_range(deg)
    aliases = {"n-": lo, "nminus": lo, "n+": hi, "nplus": hi,
               "n⁻": lo, "n⁺": hi}
    if token in aliases:
        return aliases[token]
    try:
        return int(token)
    except ValueError:
        raise UsageError(f"bad point count {token!r}")


def _spec_from_args(args):
    degrees = MultiDegree(tuple(_int_list(args.deg)))
    if args.mults is not None:
        points = FatPointSpec.from_multiplicities(_int_list(args.mults))
    else:
        points = FatPointSpec.doubles(_resolve_n(args.double, degrees))
    return product_system(degrees, points)


def _report_dict(report) -> dict:
    return dataclasses.asdict(report)


def cmd_dim(args) -> int:
    spec = _spec_from_args(args)
    report = interp.dim_linear_system(spec, args.seed, args.retries, args.prime)
    _emit(_report_dict(report), args.format)
    return _STATUS_EXIT[report.status]


def cmd_secant(args) -> int:
    deg = MultiDegree(tuple(_int_list(args.deg)))
    n = _resolve_n(args.n, deg)
    report = interp.secant_dimension(deg, n, args.seed, args.retries, args.prime)
    _emit(_report_dict(report), args.format)
    return EX_SPECIAL if report.defective else EX_OK


def cmd_classify(args) -> int:
    deg = MultiDegree(tuple(_int_list(args.deg)))
    n = _resolve_n(args.double, deg)
    cls = classify(deg, n)
    _emit({"status": cls.status, "dim": cls.dim,
           "exceptionFamily": cls.exception_family}, args.format)
    return EX_SPECIAL if cls.status == SPECIAL else EX_OK


def cmd_certify(args) -> int:
    if args.input:
        with open(args.input) as fh:
            node = degen.loads(fh.read())
    else:
        deg = MultiDegree(tuple(_int_list(args.deg)))
        n = _resolve_n(args.double, deg)
        node = degen.plan(deg, n, product_cap=args.cap)
    ok = True
    if args.check or args.input:
        result = degen.check(node, p=args.prime, seed=args.seed,
                             retries=args.retries)
        ok = result.ok
        for path, msg in result.failures:
            print(f"FAIL {path}: {msg}", file=sys.stderr)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(degen.dumps(node, indent=2, sort_keys=True))
    else:
        print(degen.dumps(node, sort_keys=True))
    return EX_OK if ok else EX_FAILED


def _show_spec(spec) -> str:
    if spec.ambient == "product":
        return (f"L_({','.join(map(str, spec.degree.degrees))})"
                f"({_show_points(spec.points)})")
    return f"L_{spec.degree}({_show_points(spec.points)})"


def _show_points(points: FatPointSpec) -> str:
    return ",".join(f"{m}^{c}" if c > 1 else f"{m}" for m, c in points.entries)


def cmd_reduce(args) -> int:
    if args.projective:
        if args.mults is None:
            raise UsageError("--projective needs --mults")
        degs = _int_list(args.deg)
        if len(degs) != 1:
            raise UsageError("--projective needs a single degree")
        mults = _int_list(args.mults)
        spec = projective_system(args.dim_ambient, degs[0],
                                 FatPointSpec.from_multiplicities(mults))
        chain = reductions.greedy_cremona_chain(spec)
    else:
        spec = _spec_from_args(args)
        chain = [spec] + reductions.greedy_cremona_chain(
            reductions.to_projective(spec))
    rows = []
    for link in chain:
        report = interp.dim_linear_system(link, args.seed, args.retries, args.prime)
        rows.append({"system": _show_spec(link), "computed": report.computed,
                     "expected": report.expected, "status": report.status})
    for row in rows:
        _emit(row, args.format)
    return EX_OK


def cmd_catalecticant(args) -> int:
    if args.secant_sample is not None:
        z = catalect.random_secant_sample(args.secant_sample, args.seed, args.prime)
    elif args.z is not None:
        z = [x % args.prime for x in _int_list(args.z)]
        if len(z) != 27:
            raise UsageError("need exactly 27 coefficients")
    else:
        raise UsageError("give --z or --secant-sample")
    det = catalect.catalecticant_det(z, args.prime)
    _emit({"det": int(det), "onSecant": det == 0, "prime": args.prime},
          args.format)
    return EX_OK


def _sweep_degree_tuples(r: int, dmax: int):
    return [deg for deg in itertools.combinations_with_replacement(
        range(1, dmax + 1), r)]


def sweep_cells(r_values, dmax: int, n_policy: str, cap: int):
    cells = []
    for r in r_values:
        for deg in _sweep_degree_tuples(r, dmax):
            md = MultiDegree(deg)
            lo, hi = critical_range(md)
            ns = range(hi + 1) if n_policy == "all" else sorted({lo, hi})
            for n in ns:
                cells.append((deg, n))
    return cells


def _sweep_cell(deg, n, prime, seed, retries, cap):
    md = MultiDegree(deg)
    if md.section_count > cap:
        return {"degrees": list(deg), "n": n, "skipped": True,
                "reason": f"{md.section_count} columns exceed cap {cap}"}
    cell_key = 0
    for v in (len(deg), *deg, n):
        cell_key = interp.mix64(cell_key, v)
    cell_seed = interp.mix64(seed, cell_key)
    report = interp.dim_linear_system(product_system(md, n), cell_seed,
                                      retries, prime)
    out = {"degrees": list(deg), "n": n, "skipped": False}
    out.update(_report_dict(report))
    return out


def cmd_sweep(args) -> int:
    r_values = _int_list(args.r)
    cells = sweep_cells(r_values, args.dmax, args.npolicy, args.cap)
    workers = args.threads or min(32, os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(
            lambda cell: _sweep_cell(cell[0], cell[1], args.prime,
                                     args.seed, args.retries, args.cap),
            cells))
    rows.sort(key=lambda row: (len(row["degrees"]), row["degrees"], row["n"]))
    if args.format == "tsv":
        keys = ["degrees", "n", "virtual", "expected", "computed", "status",
                "skipped"]
        print("\t".join(keys))
        for row in rows:
            print("\t".join(str(row.get(k, "")) for k in keys))
    else:
        for row in rows:
            print(json.dumps(row, sort_keys=True))
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fatpoints",
        description="dimensions of double-point linear systems on "
                    "products of lines and their secant varieties")
    parser.add_argument("--prime", type=int,
                        default=int(os.environ.get("FATPOINTS_PRIME",
                                                   gf.DEFAULT_PRIME)))
    parser.add_argument("--seed", type=int,
                        default=int(os.environ.get("FATPOINTS_SEED", 0)))
    parser.add_argument("--retries", type=int, default=3)
    parser.add_argument("--format", choices=["json", "tsv"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="dimension of a linear system")
    p.add_argument("--deg", required=True)
    p.add_argument("--double", default=None)
    p.add_argument("--mults", default=None)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("secant", help="secant variety dimension")
    p.add_argument("--deg", required=True)
    p.add_argument("--n", required=True)
    p.set_defaults(func=cmd_secant)

    p = sub.add_parser("classify", help="classification oracle")
    p.add_argument("--deg", required=True)
    p.add_argument("--double", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("certify", help="build / check degeneration certificates")
    p.add_argument("--deg")
    p.add_argument("--double")
    p.add_argument("--check", action="store_true")
    p.add_argument("--cap", type=int, default=degen.DEFAULT_PRODUCT_CAP)
    p.add_argument("--input", help="check an existing certificate JSON file")
    p.add_argument("--output", help="write the certificate JSON here")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("reduce", help="print a reduction chain")
    p.add_argument("--deg", required=True)
    p.add_argument("--double", default=None)
    p.add_argument("--mults", default=None)
    p.add_argument("--projective", action="store_true")
    p.add_argument("--dim-ambient", type=int, default=None,
                   help="ambient dimension for --projective (default: "
                        "number of multiplicities minus guess)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("catalecticant", help="contraction determinant test")
    p.add_argument("--z")
    p.add_argument("--secant-sample", type=int, default=None)
    p.set_defaults(func=cmd_catalecticant)

    p = sub.add_parser("sweep", help="grid of dimension reports")
    p.add_argument("--r", required=True, help="comma-separated factor counts")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--npolicy", choices=["critical", "all"], default="critical")
    p.add_argument("--cap", type=int, default=degen.DEFAULT_PRODUCT_CAP)
    p.add_argument("--threads", type=int, default=0)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EX_USAGE if exc.code not in (0, None) else 0
    try:
        gf.validate_prime(args.prime)
        if args.command == "reduce" and args.projective and args.dim_ambient is None:
            raise UsageError("--projective needs --dim-ambient")
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
