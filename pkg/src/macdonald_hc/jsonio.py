"""JSON encoding and decoding of the library's exact values.

Every value serializes to plain JSON with rational numbers as strings,
monomial lists sorted descending, and integer polynomial coefficients
(common denominators are cleared on output, which does not change the
represented scalar).  Decoding needs the labels the value was built
over and round-trips to an equal in-memory value.
"""

from fractions import Fraction
from math import lcm

from .heckeops import DiffOp
from .laurent import LaurentPoly, RationalFn
from .scalar import MPoly, Scalar

__all__ = [
    "frac_to_json", "frac_from_json",
    "vec_to_json", "vec_from_json",
    "scalar_to_json", "scalar_from_json",
    "poly_to_json", "poly_from_json",
    "rational_to_json", "rational_from_json",
    "diffop_to_json", "diffop_from_json",
]


def frac_to_json(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x}"


def frac_from_json(s):
    return Fraction(s)


def vec_to_json(v):
    return [frac_to_json(x) for x in v]


def vec_from_json(v):
    return tuple(Fraction(x) for x in v)


def _mpoly_to_json(p):
    """Sorted [exponents, integer coefficient] pairs with denominators
    cleared by the caller."""
    return [[list(e), str(p.terms[e])] for e in sorted(p.terms, reverse=True)]


def _mpoly_from_json(field, data):
    return MPoly(field, {tuple(e): Fraction(c) for e, c in data})


def scalar_to_json(s):
    mult = lcm(*(Fraction(c).denominator
                 for c in list(s.num.terms.values())
                 + list(s.den.terms.values())), 1)
    num = s.num.scale(mult)
    den = s.den.scale(mult)
    return {"num": _mpoly_to_json(num), "den": _mpoly_to_json(den),
            "str": str(s)}


def scalar_from_json(field, data):
    return Scalar(_mpoly_from_json(field, data["num"]),
                  _mpoly_from_json(field, data["den"]))


def poly_to_json(p):
    return [{"exp": vec_to_json(e), "coeff": scalar_to_json(c)}
            for e, c in sorted(p.terms.items())]


def poly_from_json(labels, data):
    return LaurentPoly(labels,
                       {vec_from_json(t["exp"]):
                        scalar_from_json(labels.field, t["coeff"])
                        for t in data})


def rational_to_json(f):
    return {"num": poly_to_json(f.num),
            "den": [poly_to_json(g) for g in f.den]}


def rational_from_json(labels, data):
    return RationalFn(poly_from_json(labels, data["num"]),
                      tuple(poly_from_json(labels, g) for g in data["den"]))


def diffop_to_json(dop):
    return [{"step": vec_to_json(s), "coeff": rational_to_json(f)}
            for s, f in sorted(dop.terms.items())]


def diffop_from_json(labels, data):
    return DiffOp(labels,
                  {vec_from_json(t["step"]):
                   rational_from_json(labels, t["coeff"])
                   for t in data})
