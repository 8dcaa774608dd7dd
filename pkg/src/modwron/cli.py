"""Command-line front end: named series, identity verification, Wronskian
and symmetric-power reports, the supersingular pipeline, and partition
checks, with machine-readable JSON output.

Every verification expands both sides of an identity independently and
compares coefficient-by-coefficient, so a failure localizes to an
exponent.  Exit codes: 0 all pass, 1 any fail, 2 configuration error.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from time import perf_counter

from .etaprod import ProductSpec, eta, named_series, product_series, NAMES
from .modpoly import identify, divisor_polynomial, to_qseries, G4
from .partitions import verify_recurrences
from .qseries import QSeries
from .ssing import congruence_constant_check, supersingular_report
from .symmpow import (apply, d_operator, kz_coeff, r12_vanishing_roots,
                      r_recursion, sym_basis, sym_quotient_closed_form,
                      sym_wronskian_check)
from .wronskian import echelonize, normalize, quotient_form, wronskian, \
    wronskian_derived

DEFAULT_PREC = 100
PREC_ENV_VAR = "MODWRON_PREC"
DEFAULT_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31)

PAIR_NAMES = {
    "rr": ("ch1", "ch2"),
    "weber": ("weber8_1", "weber8_2"),
    "a1": ("a1_f1", "a1_f2"),
}
PAIR_LAMBDA = {
    "rr": Fraction(-11, 5),
    "weber": Fraction(-40),
    "a1": Fraction(-25, 4),
}


def default_precision():
    raw = os.environ.get(PREC_ENV_VAR)
    if raw is None:
        return Fraction(DEFAULT_PREC)
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise ValueError("invalid %s value %r" % (PREC_ENV_VAR, raw))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one two-sided identity comparison.

    status is "pass", "fail", or "insufficient-precision"; precision is
    the exponent bound actually compared through; first_fail is the
    exponent of the first mismatch when status is "fail".
    """

    identity: str
    status: str
    precision: object
    first_fail: object
    elapsed: float

    def to_json(self):
        return {
            "identity": self.identity,
            "status": self.status,
            "precision": None if self.precision is None else str(self.precision),
            "first_fail": None if self.first_fail is None else str(self.first_fail),
        }

    def line(self):
        extra = ""
        if self.first_fail is not None:
            extra = "  first mismatch at q^(%s)" % (self.first_fail,)
        return "%-22s %-24s prec %-10s %7.2fs%s" % (
            self.identity, self.status, self.precision, self.elapsed, extra)


def _assess(identity, pairs, target, t0):
    """Compare (lhs, rhs) pairs through the target exponent bound."""
    checked = None
    fail_at = None
    for lhs, rhs in pairs:
        bounds = [p for p in (lhs.prec, rhs.prec, target) if p is not None]
        p = min(bounds)
        diff = (lhs - rhs).truncate(p)
        checked = p if checked is None else min(checked, p)
        if not diff.is_zero():
            e = diff.valuation()
            fail_at = e if fail_at is None else min(fail_at, e)
    if fail_at is not None:
        status = "fail"
    elif checked is not None and checked < target:
        status = "insufficient-precision"
    else:
        status = "pass"
    return VerificationReport(identity=identity, status=status,
                              precision=checked, first_fail=fail_at,
                              elapsed=perf_counter() - t0)


# ---- identity registry -------------------------------------------------------

def _rw1(n):
    """1/R - 1 - R = eta(tau/5)/eta(5 tau) on the step-1/5 lattice."""
    m = n + 3
    r = named_series("rr_cf", m)
    lhs = r.invert() - QSeries.one() - r
    rhs = eta(Fraction(1, 5), m) / eta(5, m)
    return [(lhs, rhs)]


def _rw2(n):
    """1/R^5 - 11 - R^5 = (eta(tau)/eta(5 tau))^6."""
    m = n + 3
    r5 = named_series("rr_cf", m) ** 5
    lhs = r5.invert() - 11 * QSeries.one() - r5
    rhs = (eta(1, m) / eta(5, m)) ** 6
    return [(lhs, rhs)]


def _rw2_char(n):
    """ch2^11 ch1 - 11 ch1^6 ch2^6 - ch1^11 ch2 = 1."""
    m = n + 1
    ch1 = named_series("ch1", m)
    ch2 = named_series("ch2", m)
    lhs = ch2 ** 11 * ch1 - 11 * ch1 ** 6 * ch2 ** 6 - ch1 ** 11 * ch2
    return [(lhs, QSeries.one(m))]


def _a1_quot(n):
    """2 f1/f2 - 2 f2/f1 = (eta(tau/2)/eta(2 tau))^4."""
    m = n + 3
    f1 = named_series("a1_f1", m)
    f2 = named_series("a1_f2", m)
    lhs = 2 * (f1 / f2) - 2 * (f2 / f1)
    rhs = (eta(Fraction(1, 2), m) / eta(2, m)) ** 4
    return [(lhs, rhs)]


def _a1_const(n):
    """f1^5 f2 - f2^5 f1 = 2."""
    m = n + 2
    f1 = named_series("a1_f1", m)
    f2 = named_series("a1_f2", m)
    lhs = f1 ** 5 * f2 - f2 ** 5 * f1
    return [(lhs, 2 * QSeries.one(m))]


def _weber_prod(n):
    """prod(1+q^(2n-1))^8 - 16q prod(1+q^(2n))^8 = prod(1-q^(2n-1))^8."""
    m = n + 1
    odd_plus = product_series(ProductSpec([(2, 4, 8), (1, 2, -8)]), m)
    even_plus = product_series(ProductSpec([(0, 4, 8), (0, 2, -8)]), m)
    odd_minus = product_series(ProductSpec([(1, 2, 8)]), m)
    lhs = odd_plus - 16 * QSeries.monomial(1, 1, m) * even_plus
    return [(lhs, odd_minus)]


def _chprod(n):
    """ch1 ch2 = eta(5 tau)/eta(tau)."""
    m = n + 2
    lhs = named_series("ch1", m) * named_series("ch2", m)
    return [(lhs, eta(5, m) / eta(1, m))]


def _f1f2(n):
    """f1 f2 = 2 (eta(2 tau)/eta(tau))^4."""
    m = n + 2
    lhs = named_series("a1_f1", m) * named_series("a1_f2", m)
    rhs = 2 * (eta(2, m) / eta(1, m)) ** 4
    return [(lhs, rhs)]


def _ode(pair):
    def build(n):
        m = n + 2
        f = named_series(PAIR_NAMES[pair][0], m)
        g = named_series(PAIR_NAMES[pair][1], m)
        op = d_operator(PAIR_LAMBDA[pair] * G4, 1)
        return [(apply(op, f), QSeries.zero(m)),
                (apply(op, g), QSeries.zero(m))]
    return build


IDENTITIES = {
    "rw1": _rw1,
    "rw2": _rw2,
    "rw2_char": _rw2_char,
    "a1_quot": _a1_quot,
    "a1_const": _a1_const,
    "weber_prod": _weber_prod,
    "chprod": _chprod,
    "f1f2": _f1f2,
    "ode_rr": _ode("rr"),
    "ode_weber": _ode("weber"),
    "ode_a1": _ode("a1"),
}


def verify(identity, prec=None):
    """Verify one registered identity through the exponent bound prec."""
    if identity not in IDENTITIES:
        raise ValueError("unknown identity %r (choose from %s)"
                         % (identity, ", ".join(sorted(IDENTITIES))))
    target = Fraction(prec) if prec is not None else default_precision()
    t0 = perf_counter()
    pairs = IDENTITIES[identity](target)
    return _assess(identity, pairs, target, t0)


# ---- symmetric-power checks ----------------------------------------------------

def symcheck_report(pair, m, prec):
    """Wronskian factorization plus route agreement for one (pair, m).

    Routes compared: the determinant quotient W'/W identified in weight
    2m+2, the constant-coefficient recursion with the pair's Q = lambda G4
    (sign (-1)^(m+1)), and -- for the Weber pair -- the hypergeometric
    closed form.
    """
    t0 = perf_counter()
    name1, name2 = PAIR_NAMES[pair]
    f = named_series(name1, prec)
    g = named_series(name2, prec)
    ident = "sym_%s_m%d" % (pair, m)
    try:
        sym_wronskian_check(f, g, m)
    except ValueError as e:
        return VerificationReport(ident, "fail", prec, None,
                                  perf_counter() - t0)
    route1 = quotient_form(sym_basis(f, g, m), 2 * m + 2)
    rlast = r_recursion(PAIR_LAMBDA[pair] * G4, m)[-1]
    route2 = rlast if m % 2 else -rlast
    ok = route1 == route2
    if pair == "weber":
        ok = ok and route1 == sym_quotient_closed_form(m)
    status = "pass" if ok else "fail"
    return VerificationReport(ident, status, prec, None, perf_counter() - t0)


# ---- formatting helpers ---------------------------------------------------------

def format_mfpoly(p):
    if p.is_zero():
        return "0 (weight %d)" % p.weight
    parts = []
    for (a, b) in sorted(p.terms, reverse=True):
        c = p.terms[(a, b)]
        gens = []
        if a:
            gens.append("E4" if a == 1 else "E4^%d" % a)
        if b:
            gens.append("E6" if b == 1 else "E6^%d" % b)
        body = "*".join(gens)
        if not body:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            cs = str(c) if c.denominator == 1 else "(%s)" % c
            parts.append(cs + "*" + body)
    return " + ".join(parts).replace("+ -", "- ")


def format_ratpoly_x(coeffs):
    """Ascending rational coefficients -> human polynomial in x."""
    if not any(coeffs):
        return "0"
    out = ""
    for i in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[i])
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            x = "x" if i == 1 else "x^%d" % i
            cs = "" if mag == 1 else (
                str(mag) if mag.denominator == 1 else "(%s)" % mag) + "*"
            body = cs + x
        if not out:
            out = ("-" if sign == "-" else "") + body
        else:
            out += " %s %s" % (sign, body)
    return out


def _emit(args, payload, human):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


# ---- run-all ---------------------------------------------------------------------

def run_all(prec, primes):
    """Every registered identity, the symmetric-power routes m = 1..12,
    the R_12 root set, the eta-power factorizations, the partition
    recurrences, and the supersingular pipeline."""
    reports = []
    for name in sorted(IDENTITIES):
        reports.append(verify(name, prec))
    det_prec = min(Fraction(prec), Fraction(60))
    for m in range(1, 13):
        reports.append(symcheck_report("weber", m, det_prec))
    t0 = perf_counter()
    roots_ok = r12_vanishing_roots() == {
        Fraction(0), Fraction(-11, 5), Fraction(-25, 4),
        Fraction(-15), Fraction(-40)}
    reports.append(VerificationReport(
        "r12_roots", "pass" if roots_ok else "fail", None, None,
        perf_counter() - t0))
    eta_prec = min(Fraction(prec), Fraction(45))
    for pair in ("rr", "weber"):
        t0 = perf_counter()
        f = named_series(PAIR_NAMES[pair][0], eta_prec)
        g = named_series(PAIR_NAMES[pair][1], eta_prec)
        try:
            for m in range(1, 7):
                sym_wronskian_check(f, g, m)
            status = "pass"
        except ValueError:
            status = "fail"
        reports.append(VerificationReport(
            "eta_power_%s" % pair, status, eta_prec, None,
            perf_counter() - t0))
    t0 = perf_counter()
    rec = verify_recurrences(50)
    reports.append(VerificationReport(
        "partition_recurrences", "pass" if rec.ok else "fail", 50, None,
        perf_counter() - t0))
    for p in primes:
        t0 = perf_counter()
        rep = supersingular_report(p)
        cong = congruence_constant_check(p)
        ok = rep.routes_agree and rep.oracle_match and cong.ok
        reports.append(VerificationReport(
            "ssing_p%d" % p, "pass" if ok else "fail", None, None,
            perf_counter() - t0))
    return reports


# ---- argument plumbing --------------------------------------------------------------

def _parse_basis(spec, prec):
    """--basis value: comma-separated named series or sym:<pair>:<m>."""
    if spec.startswith("sym:"):
        try:
            _, pair, m = spec.split(":")
            m = int(m)
        except ValueError:
            raise ValueError("malformed basis spec %r; expected sym:<pair>:<m>"
                             % spec)
        if pair not in PAIR_NAMES:
            raise ValueError("unknown pair %r (choose from %s)"
                             % (pair, ", ".join(sorted(PAIR_NAMES))))
        f = named_series(PAIR_NAMES[pair][0], prec)
        g = named_series(PAIR_NAMES[pair][1], prec)
        return sym_basis(f, g, m)
    return [named_series(name.strip(), prec) for name in spec.split(",")]


def _parse_primes(raw):
    try:
        primes = tuple(int(x) for x in raw.split(",") if x.strip())
    except ValueError:
        raise ValueError("malformed --primes list %r" % raw)
    if not primes:
        raise ValueError("empty --primes list")
    return primes


def build_parser():
    ap = argparse.ArgumentParser(
        prog="modwron",
        description="Exact q-series Wronskians, symmetric-power operators, "
                    "and supersingular polynomials.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, prec_help="absolute exponent bound"):
        p.add_argument("--prec", type=Fraction, default=None, help=prec_help)
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")

    p = sub.add_parser("series", help="print a named q-series")
    p.add_argument("name", choices=sorted(NAMES))
    add_common(p)

    p = sub.add_parser("verify", help="verify registered identities")
    p.add_argument("identities", nargs="*",
                   help="identity ids (default: all)")
    add_common(p)

    p = sub.add_parser("wronskian", help="Wronskian of a basis")
    p.add_argument("--basis", required=True,
                   help="comma-separated series names or sym:<pair>:<m>")
    p.add_argument("--derived", action="store_true",
                   help="use first derivatives of the basis")
    p.add_argument("--identify", type=int, metavar="W", default=None,
                   help="identify the result in weight W")
    add_common(p)

    p = sub.add_parser("symcheck",
                       help="symmetric-power factorization and route agreement")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pair", choices=sorted(PAIR_NAMES), default="weber")
    add_common(p)

    p = sub.add_parser("kz", help="coefficient of x^(2l) in the "
                                  "(1 - 3 E4 x^4 + 2 E6 x^6)^alpha expansion")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alpha", type=Fraction, required=True)
    p.add_argument("--variant", choices=("closed", "recursion"),
                   default="closed")
    add_common(p)

    p = sub.add_parser("ssing", help="supersingular polynomial pipeline")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--route", choices=("deligne", "wronskian", "oracle", "all"),
                   default="all")
    add_common(p)

    p = sub.add_parser("partitions", help="partition recurrence checks")
    p.add_argument("--check", choices=("ssss", "p27", "both"), default="both")
    p.add_argument("--upto", type=int, default=50)
    add_common(p)

    p = sub.add_parser("divpoly", help="divisor polynomial of a form "
                                       "(JSON series on stdin)")
    p.add_argument("--weight", type=int, required=True)
    add_common(p)

    p = sub.add_parser("identify", help="identify a q-series as a form "
                                        "(JSON series on stdin)")
    p.add_argument("--weight", type=int, required=True)
    add_common(p)

    p = sub.add_parser("run-all", help="full verification suite")
    p.add_argument("--primes", default=None,
                   help="comma-separated primes (default %s)"
                        % (",".join(str(p) for p in DEFAULT_PRIMES)))
    add_common(p)
    return ap


# ---- subcommand bodies -----------------------------------------------------------------

def _cmd_series(args, prec):
    s = named_series(args.name, prec)
    _emit(args, s.to_json(), "%s = %s" % (args.name, s))
    return 0


def _cmd_verify(args, prec):
    names = args.identities or sorted(IDENTITIES)
    reports = [verify(name, prec) for name in names]
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2,
                         sort_keys=True))
    else:
        for r in reports:
            print(r.line())
    return 0 if all(r.status == "pass" for r in reports) else 1


def _cmd_wronskian(args, prec):
    basis = _parse_basis(args.basis, prec)
    w = wronskian_derived(basis) if args.derived else wronskian(basis)
    payload = {"wronskian": w.to_json()}
    human = ["W%s = %s" % ("'" if args.derived else "", w)]
    if args.identify is not None:
        form = identify(w, args.identify)
        payload["identified"] = {
            "weight": args.identify,
            "terms": {"%d,%d" % k: str(v)
                      for k, v in sorted(form.terms.items())},
        }
        human.append("weight-%d form: %s" % (args.identify,
                                             format_mfpoly(form)))
    _emit(args, payload, "\n".join(human))
    return 0


def _cmd_symcheck(args, prec):
    report = symcheck_report(args.pair, args.m, prec)
    _emit(args, report.to_json(), report.line())
    return 0 if report.status == "pass" else 1


def _cmd_kz(args, prec):
    form = kz_coeff(args.l, args.alpha, args.variant)
    series = to_qseries(form, prec)
    payload = {
        "l": args.l,
        "alpha": str(args.alpha),
        "variant": args.variant,
        "weight": form.weight,
        "terms": {"%d,%d" % k: str(v) for k, v in sorted(form.terms.items())},
        "series": series.to_json(),
    }
    human = "G_{%d,%s} = %s\n        = %s" % (
        args.l, args.alpha, format_mfpoly(form), series)
    _emit(args, payload, human)
    return 0


def _cmd_ssing(args, prec):
    p = args.p
    if args.route == "oracle":
        from .ssing import hasse_oracle
        roots = sorted(hasse_oracle(p))
        _emit(args, {"p": p, "fp_roots": roots},
              "p=%d supersingular j (oracle): %s" % (p, roots))
        return 0
    if args.route in ("deligne", "wronskian"):
        from .ssing import ss_poly_deligne, ss_poly_wronskian
        poly = (ss_poly_deligne if args.route == "deligne"
                else ss_poly_wronskian)(p)
        _emit(args, {"p": p, "route": args.route,
                     "polynomial": list(poly.coeffs)},
              "p=%d S_p (%s route) = %s" % (p, args.route, poly))
        return 0
    rep = supersingular_report(p)
    payload = {
        "p": rep.p,
        "polynomial": list(rep.polynomial.coeffs),
        "fp_roots": list(rep.fp_roots),
        "quadratic_factors": [list(q.coeffs) for q in rep.quadratic_factors],
        "routes_agree": rep.routes_agree,
        "oracle_match": rep.oracle_match,
        "epsilon": list(rep.epsilon),
    }
    human = ("p=%d  S_p = %s\n  roots in F_p: %s\n  quadratic factors: %s\n"
             "  routes agree: %s   oracle match: %s   (eps_omega, eps_i) = %s"
             % (rep.p, rep.polynomial, list(rep.fp_roots),
                [str(q) for q in rep.quadratic_factors] or "none",
                rep.routes_agree, rep.oracle_match, rep.epsilon))
    _emit(args, payload, human)
    return 0 if rep.routes_agree and rep.oracle_match else 1


def _cmd_partitions(args, prec):
    rec = verify_recurrences(args.upto)
    sections = {
        "ssss": ("colored mod-5 recurrence", rec.colored_counterexamples),
        "p27": ("restricted mod-27 recurrence", rec.restricted_counterexamples),
    }
    wanted = ("ssss", "p27") if args.check == "both" else (args.check,)
    ok = all(not sections[w][1] for w in wanted)
    payload = {"upto": rec.upto, "ok": ok}
    lines = []
    for w in wanted:
        label, bad = sections[w]
        payload[w] = {"ok": not bad, "counterexamples": list(bad)}
        lines.append("%s through n=%d: %s"
                     % (label, rec.upto, "pass" if not bad else
                        "FAIL at %s" % (bad[:3],)))
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def _read_series_stdin():
    try:
        return QSeries.from_json(json.load(sys.stdin))
    except (json.JSONDecodeError, KeyError, ValueError) as e:
        raise ValueError("could not parse a JSON q-series from stdin: %s" % e)


def _cmd_divpoly(args, prec):
    form = identify(_read_series_stdin(), args.weight)
    coeffs = divisor_polynomial(form)
    _emit(args, {"weight": args.weight,
                 "divisor_polynomial": [str(c) for c in coeffs]},
          "F(f, x) = %s" % format_ratpoly_x(coeffs))
    return 0


def _cmd_identify(args, prec):
    form = identify(_read_series_stdin(), args.weight)
    _emit(args, {"weight": args.weight,
                 "terms": {"%d,%d" % k: str(v)
                           for k, v in sorted(form.terms.items())}},
          format_mfpoly(form))
    return 0


def _cmd_run_all(args, prec):
    primes = (_parse_primes(args.primes) if args.primes is not None
              else DEFAULT_PRIMES)
    reports = run_all(prec, primes)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2,
                         sort_keys=True))
    else:
        for r in reports:
            print(r.line())
        npass = sum(r.status == "pass" for r in reports)
        print("%d/%d pass" % (npass, len(reports)))
    return 0 if all(r.status == "pass" for r in reports) else 1


_COMMANDS = {
    "series": _cmd_series,
    "verify": _cmd_verify,
    "wronskian": _cmd_wronskian,
    "symcheck": _cmd_symcheck,
    "kz": _cmd_kz,
    "ssing": _cmd_ssing,
    "partitions": _cmd_partitions,
    "divpoly": _cmd_divpoly,
    "identify": _cmd_identify,
    "run-all": _cmd_run_all,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        prec = args.prec if args.prec is not None else default_precision()
        return _COMMANDS[args.command](args, prec)
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
