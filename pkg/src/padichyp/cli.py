"""Command-line harness: evaluate the core functions and run named
congruence checks over prime ranges with machine-readable reports.

Exit codes: 0 all reports pass, 1 any failure, 2 usage/precondition error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import checks
from .characters import Character, characters_for_arguments, greene_series_scaled
from .gamma import gamma_p
from .gfunction import GArguments, g_function
from .hyp import HypParams, truncated_hyp_exact
from .padic import PadicValue, PrecisionError
from .qseries import eta_product, gamma_coeffs, rv_form_coeffs, write_coefficients_csv
from .report import reports_to_csv, reports_to_human, reports_to_json

CLAIMS = ["prop2.2", "thm2.3", "thm2.4", "thm2.5", "thm2.6", "thm2.7",
          "beukers", "ao", "conj1.3", "lemmas"]


def _fractions(text: str) -> list[Fraction]:
    return [Fraction(part) for part in text.split(",") if part]


def _render_value(v: PadicValue) -> str:
    if v.is_zero:
        return f"0 + O({v.prime}^{v.abs_prec})"
    return f"{v.unit} * {v.prime}^{v.valuation} + O({v.prime}^{v.abs_prec})"


def _add_common(sp) -> None:
    sp.add_argument("--p", type=int, help="single prime")
    sp.add_argument("--p-range", help="inclusive prime range A..B")
    sp.add_argument("--precision", type=int,
                    help="override the asserted modulus exponent k")
    sp.add_argument("--format", choices=["json", "csv", "human"], default="human")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    sp.add_argument("--sweep-bound", type=int)
    sp.add_argument("--timing", action="store_true",
                    help="include wall time in the output (breaks byte-reproducibility)")
    sp.add_argument("--out", help="write the report to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="padichyp",
        description="p-adic hypergeometric function evaluation and "
                    "supercongruence checking")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", help="evaluate the p-adic gamma function")
    g.add_argument("x", help="argument, a rational like 1/3")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--precision", type=int, default=3, help="digits N")

    gf = sub.add_parser("gfun", help="evaluate the G function")
    gf.add_argument("--args", required=True, help="comma list m1/d1,m2/d2,...")
    gf.add_argument("--p", type=int, required=True)
    gf.add_argument("--precision", type=int, default=3, help="digits N")

    gr = sub.add_parser("greene", help="evaluate the scaled Gaussian series")
    gr.add_argument("--args", required=True,
                    help="fractions m_i/d_i defining the top characters")
    gr.add_argument("--p", type=int, required=True)
    gr.add_argument("--x", type=int, default=1)
    gr.add_argument("--precision", type=int, default=3, help="digits N")

    t = sub.add_parser("trunc", help="truncated hypergeometric series, exact")
    t.add_argument("--args", required=True, help="top parameters")
    t.add_argument("--bottom", help="bottom parameters (default: all 1)")
    t.add_argument("--z", default="1")
    t.add_argument("-m", "--truncation", type=int, help="default p-1")
    t.add_argument("--p", type=int, help="also reduce mod p^precision")
    t.add_argument("--precision", type=int, default=3)

    q = sub.add_parser("qexp", help="eta-product q-expansions")
    q.add_argument("--form", choices=["gamma", "rv"],
                   help="one of the two built-in weight-4 forms")
    q.add_argument("--eta", help="custom product, e.g. 1^24 or 2^4,4^4")
    q.add_argument("--truncation", type=int, default=50)
    q.add_argument("--csv", help="write n,coefficient rows to FILE")

    c = sub.add_parser("check", help="verify one named claim over a prime grid")
    c.add_argument("claim", choices=CLAIMS)
    c.add_argument("--d", type=int)
    c.add_argument("--d2", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--n", type=int, help="accepted for symmetry; inferred from --args")
    c.add_argument("--args", help="explicit arguments m1/d1,...")
    _add_common(c)

    ca = sub.add_parser("check-all", help="run the full acceptance grid")
    _add_common(ca)
    return ap


def _parse_range(ns) -> tuple[int | None, int | None]:
    if ns.p is not None:
        return ns.p, ns.p
    if ns.p_range:
        lo, _, hi = ns.p_range.partition("..")
        return int(lo), int(hi)
    return None, None


def _emit_reports(reports, skipped, ns) -> int:
    if ns.format == "json":
        text = reports_to_json(reports, ns.timing)
    elif ns.format == "csv":
        text = reports_to_csv(reports, ns.timing)
    else:
        text = reports_to_human(reports)
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for kind, q, p in skipped:
        ps = ",".join(f"{k}={v}" for k, v in q.items())
        print(f"skipped p={p} for {kind} ({ps}): precondition not met",
              file=sys.stderr)
    failing = sorted({r.claim for r in reports if not r.passed})
    if failing:
        print("FAILING claims: " + " ".join(failing), file=sys.stderr)
        return 1
    return 0


def _run_checks(ns, claim: str | None) -> int:
    lo, hi = _parse_range(ns)
    params = {}
    if claim is not None:
        params = {"d": ns.d, "d2": ns.d2, "r": ns.r, "args": ns.args}
    cfg = checks.RunConfig(claim=claim, p_min=lo, p_max=hi,
                           mod_power=ns.precision, params=params,
                           jobs=ns.jobs, seed=ns.seed,
                           sweep_bound=ns.sweep_bound)
    tasks, _ = cfg.plan()
    if ns.p is not None and not tasks:
        raise ValueError(
            f"p={ns.p} does not satisfy the preconditions of this claim")
    reports, skipped = checks.run_config(cfg)
    if not ns.timing:
        for r in reports:
            r.ms = None
    return _emit_reports(reports, skipped, ns)


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        if ns.command == "gamma":
            v = gamma_p(Fraction(ns.x), ns.p, ns.precision)
            print(_render_value(v))
            return 0
        if ns.command == "gfun":
            ga = GArguments(ns.p, tuple(_fractions(ns.args)), ns.precision)
            print(_render_value(g_function(ga)))
            return 0
        if ns.command == "greene":
            args = _fractions(ns.args)
            top = characters_for_arguments(args, ns.p)
            bottom = [Character.trivial(ns.p)] * (len(args) - 1)
            print(_render_value(greene_series_scaled(top, bottom, ns.x, ns.precision)))
            return 0
        if ns.command == "trunc":
            top = _fractions(ns.args)
            bottom = _fractions(ns.bottom) if ns.bottom else [Fraction(1)] * (len(top) - 1)
            m = ns.truncation if ns.truncation is not None else (
                ns.p - 1 if ns.p else None)
            if m is None:
                raise ValueError("give -m or --p to fix the truncation")
            params = HypParams(tuple(top), tuple(bottom), Fraction(ns.z), m)
            exact = truncated_hyp_exact(params)
            print(exact)
            if ns.p:
                from .hyp import truncated_hyp
                print(_render_value(truncated_hyp(params, ns.p, ns.precision)))
            return 0
        if ns.command == "qexp":
            if ns.form == "gamma":
                series = gamma_coeffs(ns.truncation)
            elif ns.form == "rv":
                series = rv_form_coeffs(ns.truncation)
            elif ns.eta:
                factors = []
                for part in ns.eta.split(","):
                    base, _, expo = part.partition("^")
                    factors.append((int(base), int(expo or 1)))
                series = eta_product(factors, ns.truncation)
            else:
                raise ValueError("give --form or --eta")
            if ns.csv:
                with open(ns.csv, "w", encoding="utf-8", newline="") as fh:
                    write_coefficients_csv(series, fh)
            else:
                for n in range(series.offset, series.truncation + 1):
                    print(n, series.coefficient(n))
            return 0
        if ns.command == "check":
            return _run_checks(ns, ns.claim)
        if ns.command == "check-all":
            return _run_checks(ns, None)
    except (ValueError, PrecisionError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
