"""Command-line interface.

Subcommands construct root data, compute Macdonald operators and
polynomials, build Harish-Chandra series, and run the verification
suites.  All results are emitted as JSON (schema "macdonald-hc/1") on
standard output; diagnostics go to standard error.  Exit codes: 0 for
success or all checks passing, 1 for a failed verification, 2 for
invalid input.
"""

import argparse
import json
import sys
from fractions import Fraction

from .hcseries import SpectralPoint, hc_series_formal, hc_series_specialized
from .jsonio import (diffop_to_json, frac_to_json, poly_to_json,
                     rational_to_json, scalar_to_json, vec_to_json)
from .macops import (MacdonaldOperator, dp_from_hecke, macdonald_polynomial,
                     orbit_monomial, special_coweights)
from .params import generic_labels, specialized_labels
from .rootdata import build_root_datum
from . import verify as verify_mod

SCHEMA = "macdonald-hc/1"

SUPPORTED = [
    ("a", "a", 1), ("a", "a", 2), ("a", "b", 2), ("a", "g", 2),
    ("b", "a", 2), ("c", "c", 1), ("c", "c", 2),
]


class InputError(ValueError):
    pass


def _build_labels(args):
    key = (args.case, args.type, args.rank)
    if key not in SUPPORTED:
        raise InputError(f"unsupported datum {key}; supported: {SUPPORTED}")
    datum = build_root_datum(args.case, args.type, args.rank)
    extra = tuple(int(x) for x in (args.extra_den or []))
    if args.mode == "generic":
        return datum, generic_labels(datum, extra_dens=extra)
    kvals = {}
    for item in args.k or []:
        if "=" not in item:
            raise InputError(f"bad multiplicity {item!r}; expected KEY=VALUE")
        key, _, val = item.partition("=")
        kvals[key] = Fraction(val)
    if not kvals:
        raise InputError("specialized mode needs at least one --k KEY=VALUE")
    return datum, specialized_labels(datum, kvals, extra_dens=extra)


def _pick_coweight(datum, sel):
    table = dict(special_coweights(datum))
    if sel is None:
        return next(iter(table.items()))
    if sel in table:
        return sel, table[sel]
    raise InputError(f"unknown coweight {sel!r}; have {sorted(table)}")


def _parse_vec(datum, text, basis):
    parts = [Fraction(p) for p in text.split(",")]
    if len(parts) != datum.n:
        raise InputError(f"expected {datum.n} coordinates, got {len(parts)}")
    out = datum.zero
    for c, b in zip(parts, basis):
        out = tuple(x + c * y for x, y in zip(out, b))
    return out


def cmd_datum(args):
    datum, labels = _build_labels(args)
    return 0, {
        "case": datum.case, "type": args.type, "rank": datum.n,
        "weyl_order": len(datum.weyl),
        "positive_roots": [vec_to_json(a) for a in datum.pos_roots],
        "root_norms": [frac_to_json(datum.norm2(a))
                       for a in datum.pos_roots],
        "highest_root": vec_to_json(datum.phi),
        "minuscule_indices": datum.minuscule_indices(),
        "orbit_keys": labels.orbit_keys,
        "omega_order": len(datum.omega_group()),
        "scalar_variables": list(labels.field.names),
    }


def cmd_mdop(args):
    datum, labels = _build_labels(args)
    name, pip = _pick_coweight(datum, args.coweight)
    mo = MacdonaldOperator(labels, pip)
    dh = dp_from_hecke(labels, orbit_monomial(labels, pip))
    agree = dh == mo.op
    return 0 if agree else 1, {
        "coweight": name,
        "routes_agree": agree,
        "operator": diffop_to_json(mo.op),
        "symbol": poly_to_json(mo.eigen_poly()),
    }


def cmd_mdpoly(args):
    datum, labels = _build_labels(args)
    lam = _parse_vec(datum, args.weight, datum.fund_weights)
    poly, coeffs = macdonald_polynomial(labels, lam)
    return 0, {
        "weight": vec_to_json(lam),
        "coeffs": [{"exp": vec_to_json(mu), "coeff": scalar_to_json(c)}
                   for mu, c in sorted(coeffs.items())],
        "polynomial": poly_to_json(poly),
    }


def cmd_hcseries(args):
    datum, labels = _build_labels(args)
    name, pip = _pick_coweight(datum, args.coweight)
    if args.specialize is not None:
        lam = _parse_vec(datum, args.specialize, datum.fund_weights)
        ser = hc_series_specialized(labels, pip, args.height,
                                    SpectralPoint(labels, lam))
        gamma = [{"x": list(x), "coeff": scalar_to_json(c)}
                 for x, c in sorted(ser.gamma.items())]
        extra = {"spectral_point": vec_to_json(lam)}
    else:
        ser = hc_series_formal(labels, pip, args.height)
        gamma = [{"x": list(x), "coeff": rational_to_json(f)}
                 for x, f in sorted(ser.gamma.items())]
        extra = {}
    return 0, {
        "coweight": name, "mode": ser.mode, "height": ser.order,
        "gamma": gamma, **extra,
    }


def cmd_verify(args):
    datum, labels = _build_labels(args)
    suite = args.suite
    if suite == "hecke":
        rep = verify_mod.verify_hecke(labels, radius=args.radius)
    elif suite == "routes":
        rep = verify_mod.verify_routes(labels)
    elif suite == "commute":
        rep = verify_mod.verify_commute(labels)
    elif suite == "gamma":
        rep = verify_mod.verify_gamma(labels)
    elif suite == "rankone":
        rep = verify_mod.verify_rankone(labels)
    elif suite == "triangular":
        rep = verify_mod.verify_triangular(labels, height=args.height or 6)
    elif suite == "hcseries":
        rep = verify_mod.verify_hcseries(labels, args.height or 4)
    elif suite == "baker":
        if labels.mode != "specialized":
            raise InputError("verify baker needs specialized --k values")
        rep = verify_mod.verify_baker(labels, order=args.height)
    else:
        raise InputError(f"unknown suite {suite!r}")
    return (0 if rep["pass"] else 1), {"suite": suite, **rep}


def build_parser():
    ap = argparse.ArgumentParser(
        prog="macdonald-hc",
        description="Exact Macdonald difference operators, polynomials, "
                    "and Harish-Chandra series at small rank.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--case", choices=["a", "b", "c"], required=True)
        p.add_argument("--type", choices=["a", "b", "c", "g"], required=True,
                       help="Cartan type letter of the finite root system")
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--mode", choices=["generic", "specialized"],
                       default="generic")
        p.add_argument("--k", action="append", metavar="KEY=VALUE",
                       help="multiplicity value per orbit (specialized mode)")
        p.add_argument("--extra-den", action="append", metavar="N",
                       help="extra admissible q-exponent denominator")

    p = sub.add_parser("datum", help="print the root datum")
    common(p)
    p.set_defaults(func=cmd_datum)

    p = sub.add_parser("mdop", help="Macdonald operator, both routes")
    common(p)
    p.add_argument("--coweight", help="minuscule:J or quasiminuscule")
    p.set_defaults(func=cmd_mdop)

    p = sub.add_parser("mdpoly", help="monic Macdonald polynomial")
    common(p)
    p.add_argument("--weight", required=True,
                   help="fundamental-weight coefficients, comma separated")
    p.set_defaults(func=cmd_mdpoly)

    p = sub.add_parser("hcseries", help="Harish-Chandra series")
    common(p)
    p.add_argument("--coweight", help="minuscule:J or quasiminuscule")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--specialize", metavar="LAMBDA",
                   help="spectral point as fundamental-weight coefficients")
    p.set_defaults(func=cmd_hcseries)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("suite", choices=["hecke", "routes", "commute", "gamma",
                                     "rankone", "triangular", "hcseries",
                                     "baker"])
    p.add_argument("--radius", type=int, default=4)
    p.add_argument("--height", type=int)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        code, result = args.func(args)
    except (InputError, ValueError) as exc:
        json.dump({"schema": SCHEMA, "error": str(exc)}, sys.stdout)
        print()
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = {"schema": SCHEMA, "command": args.command, **result}
    json.dump(doc, sys.stdout, indent=2)
    print()
    return code


if __name__ == "__main__":
    sys.exit(main())
