"""Command-line front end.

Subcommands: resonances, transfer, limit-trace, sweep, bc, bc-fit.  Output
is deterministic CSV (header row, shortest round-trip floats) or JSON with
the same key names; commands whose result has a non-tabular part (limit
verdicts, peak lists, bound states) append it as a JSON block.  Exit codes:
0 success, 2 usage error, 3 numeric or precondition failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .boundary import (ProductParams, bc_from_product, bound_state,
                       params_from_resonance, scattering_from_matrix)
from .errors import DeltaPrimeError, InvariantViolation
from .limits import classify, trace, transmission_sweep
from .paths import SqueezePath
from .profile import RectProfile
from .resonance import resonance_set, resonant_scattering
from .transfer import piecewise_transfer, scattering, transfer_matrix

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3

_RESONANCE_PATHS = ("adjacent", "linear", "quadratic")


class UsageError(Exception):
    """Bad command-line arguments detected before dispatch."""


def _fmt(v) -> str:
    """CSV cell: shortest round-trip decimal; complex kept only if needed."""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, complex):
        if v.imag == 0.0:
            return repr(float(v.real))
        return repr(complex(v))
    return repr(float(v))


def _jsonable(v):
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, complex):
        return float(v.real) if v.imag == 0.0 else repr(complex(v))
    return float(v)


def _write(out: str | None, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _emit(args, rows: list[dict], extras: dict | None = None) -> None:
    if args.format == "json":
        doc = {"rows": [{k: _jsonable(v) for k, v in row.items()}
                        for row in rows]}
        if extras:
            doc.update(extras)
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [",".join(rows[0].keys())]
        lines += [",".join(_fmt(v) for v in row.values()) for row in rows]
        text = "\n".join(lines) + "\n"
        if extras:
            text += "\n" + json.dumps(extras, indent=2) + "\n"
    _write(args.out, text)


def _parse_path(spec: str, resonant_only: bool = False) -> SqueezePath:
    try:
        path = SqueezePath.parse(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if resonant_only:
        name = spec.partition(":")[0]
        if name not in _RESONANCE_PATHS:
            raise UsageError(
                f"path {spec!r} carries no resonance set; "
                f"choose one of {', '.join(_RESONANCE_PATHS)}")
    return path


def _equation_residual(path: SqueezePath, sigma: float) -> float:
    c = path.c if path.tau == 1.0 else 0.0
    th = math.tanh(sigma)
    return abs(th / (1.0 + c * sigma * th) - math.tan(sigma))


def cmd_resonances(args) -> int:
    if args.count < 1:
        raise UsageError(f"--count must be >= 1, got {args.count}")
    path = _parse_path(args.path, resonant_only=True)
    k = 1.0
    rows = []
    for r in resonance_set(path, args.count):
        if _equation_residual(r.path, r.sigma) > 1e-10:
            raise InvariantViolation(f"root residual too large at n = {r.n}")
        amp = resonant_scattering(r.chi, r.g, k)
        if amp.conservation_residual > 1e-10:
            raise InvariantViolation(f"conservation violated at n = {r.n}")
        rows.append({"n": r.n, "sigma": r.sigma, "lambda": r.lam,
                     "chi": r.chi, "g": r.g, "kappa": r.kappa,
                     "R": amp.R, "T": amp.T, "k": k})
    _emit(args, rows)
    return EXIT_OK


def cmd_transfer(args) -> int:
    if args.l <= 0:
        raise UsageError(f"--l must be positive, got {args.l}")
    if args.rho < 0:
        raise UsageError(f"--rho must be >= 0, got {args.rho}")
    if args.E <= 0:
        raise UsageError(f"--E must be positive, got {args.E}")
    profile = RectProfile(l=args.l, rho=args.rho, lam=args.lam)
    tm = transfer_matrix(profile, args.E)
    if tm.det_residual() > 1e-12:
        raise InvariantViolation(f"determinant residual {tm.det_residual()}")
    amp = scattering(tm, math.sqrt(args.E))
    if amp.conservation_residual > 1e-10:
        raise InvariantViolation(
            f"conservation residual {amp.conservation_residual}")
    row = {"l": args.l, "rho": args.rho, "lambda": args.lam, "E": args.E,
           "L11": tm.l11, "L12": tm.l12, "L21": tm.l21, "L22": tm.l22,
           "det": tm.det, "R": amp.R, "T": amp.T, "T2": amp.T2,
           "conservation_residual": amp.conservation_residual}
    if args.check:
        ref = piecewise_transfer(profile, args.E)
        scale = max(1.0, tm.entry_scale(), ref.entry_scale())
        resid = max(abs(tm.l11 - ref.l11), abs(tm.l12 - ref.l12),
                    abs(tm.l21 - ref.l21), abs(tm.l22 - ref.l22)) / scale
        if resid > 1e-10:
            raise InvariantViolation(f"oracle disagreement {resid}")
        row["oracle_residual"] = resid
    _emit(args, [row])
    return EXIT_OK


def _verdict_block(verdict) -> dict:
    block = {}
    for name, v in verdict.entries.items():
        block[name] = {"kind": v.kind, "exponent": v.exponent,
                       "value": v.value, "error": v.error}
    block["variant"] = verdict.variant
    return block


def cmd_limit_trace(args) -> int:
    if args.points < 8:
        raise UsageError(f"--points must be >= 8, got {args.points}")
    if args.lam < 0:
        raise UsageError(f"--lambda must be >= 0, got {args.lam}")
    if args.E <= 0:
        raise UsageError(f"--E must be positive, got {args.E}")
    if not args.l_start > args.l_end:
        raise UsageError("--l-start must exceed --l-end")
    path = _parse_path(args.path)
    tr = trace(path, args.lam, args.E, args.l_start, args.l_end, args.points)
    rows = []
    for i in range(tr.points):
        l11, l12, l21, l22 = tr.entries[i]
        rows.append({"l": float(tr.l_values[i]), "rho": float(tr.rho_values[i]),
                     "L11": l11, "L12": l12, "L21": l21, "L22": l22,
                     "det": l11 * l22 - l12 * l21})
    _emit(args, rows, extras={"verdict": _verdict_block(classify(tr))})
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.samples < 2:
        raise UsageError(f"--samples must be >= 2, got {args.samples}")
    if args.l <= 0:
        raise UsageError(f"--l must be positive, got {args.l}")
    if args.E <= 0:
        raise UsageError(f"--E must be positive, got {args.E}")
    path = _parse_path(args.path)
    res = transmission_sweep(path, args.l, args.lambda_min, args.lambda_max,
                             args.samples, args.E)
    rows = [{"lambda": float(res.lambdas[i]), "T2": float(res.T2[i]),
             "R2": float(res.R2[i])} for i in range(args.samples)]
    peaks = [{"lambda": p.lam, "T2": p.T2} for p in res.peaks]
    _emit(args, rows, extras={"peaks": peaks})
    return EXIT_OK


def cmd_bc(args) -> int:
    if args.k <= 0:
        raise UsageError(f"--k must be positive, got {args.k}")
    cm = bc_from_product(ProductParams(alpha=args.alpha, beta=args.beta),
                         args.lam)
    amp = scattering_from_matrix(cm, args.k)
    if amp.conservation_residual > 1e-10:
        raise InvariantViolation(
            f"conservation residual {amp.conservation_residual}")
    row = {"alpha": args.alpha, "beta": args.beta, "lambda": args.lam,
           "k": args.k, "A": cm.l11, "B": cm.l21, "R": amp.R, "T": amp.T}
    _emit(args, [row], extras={"bound_states": bound_state(cm)})
    return EXIT_OK


def cmd_bc_fit(args) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    path = _parse_path(args.path, resonant_only=True)
    r = resonance_set(path, args.n)[-1]
    params = params_from_resonance(r.lam, r.chi, r.g)
    cm = bc_from_product(params, r.lam)
    residual = max(abs(cm.l11 - r.chi) / max(1.0, abs(r.chi)),
                   abs(cm.l21 - r.g) / max(1.0, abs(r.g)))
    _emit(args, [{"n": r.n, "lambda": r.lam, "chi": r.chi, "g": r.g,
                  "alpha": params.alpha, "beta": params.beta,
                  "residual": residual}])
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    fmt_cls = argparse.ArgumentDefaultsHelpFormatter
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="deltaprime", formatter_class=fmt_cls,
        description="Resonant tunnelling across the derivative-of-delta "
                    "point interaction: resonance tables, transfer matrices, "
                    "squeeze-path limits, transmission sweeps and "
                    "boundary-condition fits.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resonances", parents=[common], formatter_class=fmt_cls,
                       help="resonance table for a squeeze path")
    p.add_argument("--path", default="adjacent",
                   help="adjacent | linear[:C] | quadratic[:C]")
    p.add_argument("--count", type=int, default=5, help="number of resonances")
    p.set_defaults(func=cmd_resonances)

    p = sub.add_parser("transfer", parents=[common], formatter_class=fmt_cls,
                       help="transfer matrix and scattering at one point")
    p.add_argument("--l", type=float, required=True, help="barrier/well width")
    p.add_argument("--rho", type=float, default=0.0, help="gap width")
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   help="coupling constant")
    p.add_argument("--E", type=float, default=1.0, help="energy")
    p.add_argument("--check", action="store_true",
                   help="also run the interface-matching oracle and report "
                        "the comparison residual")
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("limit-trace", parents=[common], formatter_class=fmt_cls,
                       help="trace matrix entries along a squeeze path")
    p.add_argument("--path", default="adjacent",
                   help="adjacent | barrier-first:RHO | linear[:C] | "
                        "quadratic[:C] | power:C:TAU")
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   help="coupling constant")
    p.add_argument("--E", type=float, default=1.0, help="probe energy")
    p.add_argument("--l-start", type=float, default=1e-1, help="largest width")
    p.add_argument("--l-end", type=float, default=1e-4, help="smallest width")
    p.add_argument("--points", type=int, default=13,
                   help="trace points (minimum 8)")
    p.set_defaults(func=cmd_limit_trace)

    p = sub.add_parser("sweep", parents=[common], formatter_class=fmt_cls,
                       help="transmission curve over a coupling grid")
    p.add_argument("--path", default="adjacent",
                   help="adjacent | barrier-first:RHO | linear[:C] | "
                        "quadratic[:C] | power:C:TAU")
    p.add_argument("--l", type=float, default=1e-3, help="barrier/well width")
    p.add_argument("--lambda-min", dest="lambda_min", type=float, default=1.0,
                   help="lower end of the coupling grid")
    p.add_argument("--lambda-max", dest="lambda_max", type=float, default=60.0,
                   help="upper end of the coupling grid")
    p.add_argument("--samples", type=int, default=2000, help="grid samples")
    p.add_argument("--E", type=float, default=1.0, help="energy")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bc", parents=[common], formatter_class=fmt_cls,
                       help="boundary conditions of the weighted product rule")
    p.add_argument("--alpha", type=float, required=True, help="side weight")
    p.add_argument("--beta", type=float, default=0.0, help="jump weight")
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   help="coupling constant")
    p.add_argument("--k", type=float, default=1.0, help="wavenumber")
    p.set_defaults(func=cmd_bc)

    p = sub.add_parser("bc-fit", parents=[common], formatter_class=fmt_cls,
                       help="fit product weights to a resonance")
    p.add_argument("--path", default="adjacent",
                   help="adjacent | linear[:C] | quadratic[:C]")
    p.add_argument("--n", type=int, required=True, help="resonance index")
    p.set_defaults(func=cmd_bc_fit)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DeltaPrimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
