"""Command-line front end.

Subcommands: `series` (named q-expansions), `gv` (invariant tables by
either route), `nl` (a single Noether-Lefschetz number), `euler`
(Euler-characteristic bookkeeping) and `check` (the full consistency
suite).  Exit codes: 0 success, 1 usage error, 2 domain or consistency
failure.  All numeric output is exact; rationals serialize in JSON as
decimal-string numerator/denominator pairs so arbitrary magnitudes
survive any consumer.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks, forms, geometry, invariants
from .series import QSeries

USAGE_ERROR = 1
DOMAIN_ERROR = 2

_SERIES = {
    "delta": forms.delta,
    "inv-delta": forms.inverse_delta,
    "e4": lambda prec: forms.eisenstein(4, prec),
    "e6": lambda prec: forms.eisenstein(6, prec),
    "e10": lambda prec: forms.eisenstein(10, prec),
    "theta-e8": forms.theta_e8,
    "inv-sqrt-delta": forms.inverse_sqrt_delta,
}


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the contract says 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def series_to_doc(f: QSeries, variable: str = "q") -> dict:
    """Lossless JSON document for a series."""
    return {
        "variable": variable,
        "exp_den": f.exp_den,
        "offset": f.offset,
        "prec": f.prec,
        "coeffs": [{"num": str(c.numerator), "den": str(c.denominator)}
                   for c in f.coeffs],
    }


def doc_to_series(doc: dict) -> QSeries:
    coeffs = [Fraction(int(c["num"]), int(c["den"])) for c in doc["coeffs"]]
    return QSeries(coeffs, doc["offset"], doc["prec"], doc["exp_den"])


def _fmt_exponent(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else str(e)


def _print_series(f: QSeries, as_json: bool, out) -> None:
    if as_json:
        json.dump(series_to_doc(f), out)
        out.write("\n")
        return
    for i, c in enumerate(f.coeffs):
        e = Fraction(f.offset + i, f.exp_den)
        if f.exp_den == 1 or c != 0:
            out.write(f"{_fmt_exponent(e)}\t{c}\n")


def cmd_series(args, out) -> int:
    if args.prec < 1:
        raise _UsageError("--prec must be at least 1")
    f = _SERIES[args.name](args.prec)
    _print_series(f, args.json, out)
    return 0


def cmd_gv(args, out) -> int:
    if args.prec < 1:
        raise _UsageError("--prec must be at least 1")
    prec = args.prec
    rows: list[tuple[int, str, Fraction]] = []
    if args.target == "fiber":
        if args.method == "closed":
            f = invariants.f_fiber_closed(prec)
            values = [f.coeff_at(n - 1) for n in range(prec)]
        else:
            table = invariants.gv_fiber_direct(prec - 1)
            values = [table.get(geometry.CurveClass(e=n, f=1))
                      for n in range(prec)]
        rows = [(n, geometry.CurveClass(e=n, f=1).label(), v)
                for n, v in enumerate(values)]
    elif args.target == "section":
        if args.method == "closed":
            f = invariants.f_section_closed(prec)
        else:
            f = invariants.f_section_convolution(prec)
        values = [f.coeff_at(Fraction(2 * n - 1, 2)) for n in range(prec)]
        rows = [(n, geometry.CurveClass(c=1, e=n).label(), v)
                for n, v in enumerate(values)]
    else:  # multifiber
        m = args.m
        if m is None or m < 2:
            raise _UsageError("multifiber requires --m with m >= 2")
        nmax = m + prec - 1  # first prec rows from n = m on
        if args.method == "closed":
            f = invariants.f_multifiber_slice(m, nmax)
            values = [f.coeff_at(m * (n - m)) for n in range(m, nmax + 1)]
        else:
            table = invariants.f_multifiber_direct(m, nmax)
            values = [table.get(geometry.CurveClass(e=n, f=m))
                      for n in range(m, nmax + 1)]
        rows = [(n, geometry.CurveClass(e=n, f=m).label(), v)
                for n, v in zip(range(m, nmax + 1), values)]
    for n, label, v in rows:
        out.write(f"{n}\t{label}\t{v}\n")
    return 0


def cmd_nl(args, out) -> int:
    disc = geometry.nl_discriminant(
        geometry.K3_POLARIZATION, geometry.NLIndex(args.h, (args.d1, args.d2)))
    value = invariants.nl_number(args.h, args.d1, args.d2)
    if disc < 0:
        out.write(f"{value} (discriminant negative)\n")
    else:
        out.write(f"{value}\n")
    return 0


def cmd_euler(args, out) -> int:
    data = geometry.euler_characteristic(args.lsq)
    out.write(f"deg K_Delta\t{data.deg_K_delta}\n")
    out.write(f"cusps\t{data.cusps}\n")
    out.write(f"e(Delta)\t{data.e_delta}\n")
    out.write(f"e(X)\t{data.e_X}\n")
    if args.lsq == 8:
        verdict = "consistent" if geometry.hodge_consistency() else "INCONSISTENT"
        out.write(f"hodge 2({geometry.H11}-{geometry.H21}) = "
                  f"{2 * (geometry.H11 - geometry.H21)}\t{verdict}\n")
    return 0


def cmd_check(args, out) -> int:
    results = checks.run_checks(args.prec)
    failures = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"{status}\t{res.name}"
        if res.detail:
            line += f"\t{res.detail}"
        out.write(line + "\n")
        if not res.passed:
            failures += 1
    if failures:
        out.write(f"{failures} check(s) failed\n")
        return DOMAIN_ERROR
    out.write(f"all {len(results)} checks passed\n")
    return 0


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ellcy",
                     description="Exact curve-count generating functions for "
                                 "the elliptic Calabi-Yau threefold over the "
                                 "degree-8 del Pezzo surface.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="print a named q-expansion")
    p.add_argument("name", choices=sorted(_SERIES))
    p.add_argument("--prec", type=int, default=32,
                   help="number of terms from the leading exponent")
    p.add_argument("--json", action="store_true",
                   help="emit a JSON series document")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("gv", help="print a table of genus-0 GV invariants")
    p.add_argument("target", choices=["fiber", "section", "multifiber"])
    p.add_argument("--m", type=int, default=None,
                   help="fibre multiplicity (multifiber only)")
    p.add_argument("--prec", type=int, default=16, help="number of entries")
    p.add_argument("--method", choices=["closed", "direct"], default="closed")
    p.set_defaults(func=cmd_gv)

    p = sub.add_parser("nl", help="print one Noether-Lefschetz number")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.set_defaults(func=cmd_nl)

    p = sub.add_parser("euler", help="Euler characteristic bookkeeping")
    p.add_argument("--lsq", type=int, default=8,
                   help="self-intersection of the polarizing bundle")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("check", help="run the full consistency suite")
    p.add_argument("--prec", type=int, default=16,
                   help="term count for the series comparisons")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except _UsageError as exc:
        print(f"ellcy: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, KeyError) as exc:
        print(f"ellcy: error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


def entry_point() -> None:
    raise SystemExit(main())
