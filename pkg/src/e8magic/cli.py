"""Command-line entry point.

Verbs: series, certify, eval, plot, lattice, bound, selfcheck.  Exit codes:
0 success/certified, 2 invalid input, 3 certification failure, 4 numerical
failure.  All numeric output carries explicit error-bound columns; series and
certificate documents are JSON.  Series documents are cached per (form, order)
under $E8MAGIC_CACHE_DIR (if set) with a content hash guarding staleness.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
from pathlib import Path

from . import certify as certify_mod
from . import e8 as e8_mod
from . import radial as radial_mod
from .modforms import WEIGHTS, FormId, build_form
from .qseries import QSeries

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_CERT_FAILURE = 3
EXIT_NUMERICAL_FAILURE = 4

_FORM_BY_NAME = {f.value: f for f in FormId}


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID_INPUT):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# series cache

def _cache_dir() -> Path | None:
    value = os.environ.get("E8MAGIC_CACHE_DIR")
    return Path(value) if value else None


def _series_doc(form: FormId, order: int) -> dict:
    series = build_form(form, order)
    doc = series.to_doc(name=form.value, weight=WEIGHTS[form])
    payload = json.dumps(doc["coefficients"], sort_keys=True)
    doc["sha256"] = hashlib.sha256(payload.encode()).hexdigest()
    return doc


def _load_or_build_series(form: FormId, order: int) -> dict:
    cache = _cache_dir()
    if cache is None:
        return _series_doc(form, order)
    cache.mkdir(parents=True, exist_ok=True)
    path = cache / f"{form.name.lower()}_o{order}.json"
    if path.exists():
        try:
            doc = json.loads(path.read_text())
            payload = json.dumps(doc["coefficients"], sort_keys=True)
            if doc.get("sha256") == hashlib.sha256(payload.encode()).hexdigest():
                return doc
        except (json.JSONDecodeError, KeyError):
            pass  # fall through and rebuild a corrupted cache entry
    doc = _series_doc(form, order)
    path.write_text(json.dumps(doc, sort_keys=True))
    return doc


# ---------------------------------------------------------------------------
# verbs

def _cmd_series(args: argparse.Namespace) -> int:
    form = _FORM_BY_NAME.get(args.form)
    if form is None:
        raise CliError(f"unknown form {args.form!r}; choose from {sorted(_FORM_BY_NAME)}")
    if args.order <= 0:
        raise CliError("--order must be positive")
    doc = _load_or_build_series(form, args.order)
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        series = QSeries.from_doc(doc)
        print(f"# {form.value} (weight {WEIGHTS[form]}), order q^{args.order}/8")
        for e, c in sorted(series.coeffs.items()):
            print(f"q^({e}/8)\t{c}")
    return EXIT_OK


def _cmd_certify(args: argparse.Namespace) -> int:
    if args.target not in ("A", "B"):
        raise CliError("--target must be A or B")
    cert = certify_mod.certify_sign(
        args.target, n=args.n, m=args.m if args.m is not None else args.n,
        t_star=args.tstar, max_depth=args.max_depth,
    )
    doc = cert.to_doc()
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text)
    sign = "< 0" if args.target == "A" else "> 0"
    print(
        f"target {args.target} {sign}: {cert.status} "
        f"({len(cert.segments)} segments, min margin {cert.min_margin:.6g})",
        file=sys.stderr,
    )
    return EXIT_OK if cert.certified else EXIT_CERT_FAILURE


def _cmd_eval(args: argparse.Namespace) -> int:
    fn = args.function
    if args.r < 0 or (args.deriv and args.r == 0):
        raise CliError("--r must be nonnegative (positive for --deriv)")
    try:
        if fn in ("a", "b"):
            if args.deriv:
                raise CliError("--deriv supports g and ghat only")
            rv = radial_mod.eval_a(args.r) if fn == "a" else radial_mod.eval_b(args.r)
        elif fn in ("g", "ghat"):
            rv = (
                radial_mod.eval_g_deriv(args.r, fn)
                if args.deriv
                else radial_mod.eval_g(args.r, fn)
            )
        else:
            raise CliError("--function must be one of a, b, g, ghat")
    except (ArithmeticError, OverflowError) as exc:
        raise CliError(f"evaluation failed: {exc}", EXIT_NUMERICAL_FAILURE)
    label = f"{fn}'" if args.deriv else fn
    print(f"{label}({args.r!r}) = {rv.value!r} +/- {rv.err:.3e}")
    return EXIT_OK


def _parse_range(spec: str) -> tuple[float, float]:
    try:
        lo_s, hi_s = spec.split(":")
        lo, hi = float(lo_s), float(hi_s)
    except ValueError:
        raise CliError("--range must look like lo:hi")
    if not (lo < hi):
        raise CliError("--range needs lo < hi")
    return lo, hi


def _cmd_plot(args: argparse.Namespace) -> int:
    lo, hi = _parse_range(args.range)
    if args.samples < 2:
        raise CliError("--samples must be at least 2")
    fn = args.function
    rows = []
    for i in range(args.samples):
        x = lo + (hi - lo) * i / (args.samples - 1)
        try:
            if fn in ("A", "B"):
                if x <= 0:
                    raise CliError("A and B need a positive range")
                value, err = certify_mod.numeric_value(fn, x)
            elif fn in ("g", "ghat"):
                rv = radial_mod.eval_g(x, fn)
                value, err = rv.value, rv.err
            else:
                raise CliError("--function must be one of g, ghat, A, B")
        except OverflowError:
            raise CliError(f"overflow evaluating {fn} at {x}", EXIT_NUMERICAL_FAILURE)
        rows.append((x, value, err))
    lines = ["x,value,err"] + [f"{x!r},{v!r},{e:.6e}" for x, v, e in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_lattice(args: argparse.Namespace) -> int:
    if args.max_norm < 2 or args.max_norm % 2:
        raise CliError("--max-norm must be an even integer >= 2")
    table = e8_mod.enumerate_shells(args.max_norm)
    if args.shells:
        print("norm^2\tcount")
        for norm2, cnt in table.entries.items():
            print(f"{norm2}\t{cnt}")
    else:
        print(f"shells up to norm^2 = {args.max_norm}: {len(table.entries)} "
              f"(kissing number N(2) = {table.count(2)})")
    if args.poisson is not None:
        if args.poisson <= 0:
            raise CliError("--poisson alpha must be positive")
        rep = e8_mod.poisson_check(args.poisson, args.max_norm)
        print(
            f"poisson alpha={rep.alpha}: lhs={rep.lhs!r} rhs={rep.rhs!r} "
            f"discrepancy={rep.discrepancy:.3e} tail_bound={rep.tail_bound:.3e}"
        )
        print(
            f"scaled 2^4 identity: lhs={rep.scaled_lhs!r} rhs={rep.scaled_rhs!r} "
            f"discrepancy={rep.scaled_discrepancy:.3e}"
        )
        if not rep.passed:
            raise CliError("poisson discrepancy exceeds tail bound", EXIT_NUMERICAL_FAILURE)
    return EXIT_OK


def _cmd_bound(args: argparse.Namespace) -> int:
    rep = e8_mod.density_bound()
    print(f"f(0)/fhat(0) = {rep.ratio!r} +/- {rep.ratio_err:.3e}   "
          "[2^4 g(0)/ghat(0), scaling law f(x) = g(sqrt2 x)]")
    print(f"Vol B_8(0, 1/2) = {rep.ball_volume!r}   [pi^4/6144]")
    print(f"density bound = {rep.bound!r} +/- {rep.err:.3e}   [pi^4/384 = {rep.reference!r}]")
    if not rep.matches_reference:
        raise CliError("density bound does not match pi^4/384", EXIT_NUMERICAL_FAILURE)
    return EXIT_OK


_GOLDEN_LEADS = {
    FormId.J: {-8: "1/1", 0: "744/1", 8: "196884/1"},
    FormId.PHI_0: {8: "518400/1", 16: "31104000/1"},
    FormId.PSI_I: {-8: "1/1", 0: "144/1", 4: "-5120/1"},
    FormId.PSI_S: {4: "-10240/1", 12: "-1253376/1"},
}


def _cmd_selfcheck(args: argparse.Namespace) -> int:
    failures = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        print(f"{'PASS' if ok else 'FAIL'}  {name}{('  ' + detail) if detail else ''}")
        if not ok:
            failures.append(name)

    for form, expected in _GOLDEN_LEADS.items():
        series = build_form(form, 24)
        got = {e: f"{c.numerator}/{c.denominator}" for e, c in series.coeffs.items() if e in expected}
        check(f"golden expansion {form.value}", got == expected)

    for target in ("A", "B"):
        cert = certify_mod.certify_sign(target)
        check(f"certificate {target}", cert.certified, cert.status)

    ladder_ok = True
    for n in range(1, 7):
        r = math.sqrt(2 * n)
        for which in ("g", "ghat"):
            rv = radial_mod.eval_g(r, which)
            if abs(rv.value) > rv.err:
                ladder_ok = False
    check("zero ladder g, ghat at sqrt(2n), n=1..6", ladder_ok)

    rep = e8_mod.density_bound()
    check("density bound pi^4/384", rep.matches_reference, f"{rep.bound!r}")

    if failures:
        print(f"FAIL ({len(failures)} checks)")
        return EXIT_CERT_FAILURE if any("certificate" in f for f in failures) else EXIT_NUMERICAL_FAILURE
    print("PASS")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="e8magic",
        description="The E8 magic function: series, certificates, evaluation, lattice sums.",
    )
    parser.add_argument("--threads", type=int, default=1, help="worker threads (advisory)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("series", help="print a catalog q-expansion")
    p.add_argument("--form", required=True)
    p.add_argument("--order", type=int, default=64)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("certify", help="certify A < 0 or B > 0 on (0, oo)")
    p.add_argument("--target", required=True)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--tstar", type=float, default=4.0)
    p.add_argument("--max-depth", type=int, default=60)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("eval", help="evaluate a, b, g or ghat at a radius")
    p.add_argument("--function", required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--deriv", action="store_true")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("plot", help="emit CSV samples of g, ghat, A or B")
    p.add_argument("--function", required=True)
    p.add_argument("--range", required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_plot)

    p = sub.add_parser("lattice", help="enumerate shells and check Poisson summation")
    p.add_argument("--max-norm", type=int, default=40)
    p.add_argument("--shells", action="store_true")
    p.add_argument("--poisson", type=float, default=None)
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("bound", help="print the sphere packing density bound")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("selfcheck", help="run the built-in verification suite")
    p.set_defaults(func=_cmd_selfcheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors, which matches EXIT_INVALID_INPUT
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
