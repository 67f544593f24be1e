"""Laurent polynomials and rational functions on a weight lattice.

Exponents are exact vectors in the simple-root basis of the root datum;
coefficients are Scalars.  Rational functions keep their denominator as a
list of unexpanded factors (products of c-function denominators stay
factored), and equality is decided by cross-multiplication after
cancelling structurally equal factors.

Cone expansions are formal series supported on mu0 - Z>=0 Delta, where
Delta is the gradient basis of the affine simple roots; the expansion
direction is the vector pairing to 1 with every element of Delta, so a
term's height is just the sum of its cone coordinates.
"""

from fractions import Fraction

from .rootdata import vec_add, vec_neg, vec_sub, mat_vec

__all__ = [
    "InexactDivision",
    "NonExpandable",
    "LaurentPoly",
    "RationalFn",
    "ConeSeries",
    "c_function",
    "cone_expand",
]


class InexactDivision(ArithmeticError):
    """Laurent polynomial division left a nonzero remainder."""


class NonExpandable(ValueError):
    """A rational function has no expansion along the chosen cone."""


class LaurentPoly:
    """Finite Scalar-linear combination of lattice monomials z^mu."""

    __slots__ = ("labels", "terms")

    def __init__(self, labels, terms):
        self.labels = labels
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    @classmethod
    def zero(cls, labels):
        return cls(labels, {})

    @classmethod
    def one(cls, labels):
        return cls(labels, {labels.datum.zero: labels.field.one()})

    @classmethod
    def monomial(cls, labels, vec, coeff=None):
        if coeff is None:
            coeff = labels.field.one()
        return cls(labels, {tuple(Fraction(x) for x in vec): coeff})

    @classmethod
    def aff_monomial(cls, labels, a):
        """z^a for an affine root a = (x, r), i.e. q^r z^x."""
        x, r = a
        return cls.monomial(labels, x, labels.qpow(r))

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and (self - other).is_zero()

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return LaurentPoly(self.labels, out)

    def __neg__(self):
        return LaurentPoly(self.labels, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = vec_add(e1, e2)
                if e in out:
                    s = out[e] + c1 * c2
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                else:
                    p = c1 * c2
                    if not p.is_zero():
                        out[e] = p
        return LaurentPoly(self.labels, out)

    def scale(self, c):
        if c.is_zero():
            return LaurentPoly.zero(self.labels)
        return LaurentPoly(self.labels,
                           {e: c * v for e, v in self.terms.items()})

    def shift(self, vec):
        vec = tuple(Fraction(x) for x in vec)
        return LaurentPoly(self.labels,
                           {vec_add(e, vec): c for e, c in self.terms.items()})

    # -- group actions -------------------------------------------------------

    def translate_twist(self, lamp):
        """Action of t(lam'): z^mu -> q^(-<lam', mu>) z^mu."""
        lb = self.labels
        out = {}
        for e, c in self.terms.items():
            out[e] = c * lb.qpow(-lb.datum.pair(lamp, e))
        return LaurentPoly(lb, out)

    def weyl_image(self, mat):
        return LaurentPoly(self.labels,
                           {mat_vec(mat, e): c for e, c in self.terms.items()})

    def aff_weyl_image(self, w):
        """Action of w = v t(lam'): z^mu -> q^(-<lam', mu>) z^(v mu)."""
        lb = self.labels
        out = {}
        for e, c in self.terms.items():
            out[mat_vec(w.mat, e)] = c * lb.qpow(-lb.datum.pair(w.trans, e))
        return LaurentPoly(lb, out)

    # -- specialization ------------------------------------------------------

    def eval_at_qpoint(self, point, sign=1):
        """Scalar value with z^mu -> q^(sign * <mu, point>)."""
        lb = self.labels
        out = lb.field.zero()
        for e, c in self.terms.items():
            out = out + c * lb.qpow(sign * lb.datum.pair(e, point))
        return out

    def struct_eq(self, other):
        """Structural comparison: same exponents with equal coefficients."""
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            coords = "(" + ",".join(str(x) for x in e) + ")"
            bits.append(f"({self.terms[e]})*z^{coords}")
        return " + ".join(bits)


def exact_divide(num, den):
    """Exact quotient num/den of Laurent polynomials; InexactDivision if not.

    Uses single-divisor reduction in lex order.  Quotient exponents are
    confined to the Newton-box difference of num and den, which bounds the
    number of reduction steps for exact quotients and detects failure.
    """
    labels = num.labels
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero(labels)
    n = labels.datum.n
    lo = []
    hi = []
    for i in range(n):
        nmin = min(e[i] for e in num.terms)
        nmax = max(e[i] for e in num.terms)
        dmin = min(e[i] for e in den.terms)
        dmax = max(e[i] for e in den.terms)
        lo.append(nmin - dmin)
        hi.append(nmax - dmax)
    lead = max(den.terms)
    lead_c = den.terms[lead]
    rem = dict(num.terms)
    quot = {}
    while rem:
        e = max(rem)
        qe = vec_sub(e, lead)
        if any(qe[i] < lo[i] or qe[i] > hi[i] for i in range(n)):
            raise InexactDivision("quotient exponent outside Newton box")
        qc = rem[e] / lead_c
        quot[qe] = qc
        for de, dc in den.terms.items():
            t = vec_add(qe, de)
            s = rem.get(t, labels.field.zero()) - qc * dc
            if s.is_zero():
                rem.pop(t, None)
            else:
                rem[t] = s
    return LaurentPoly(labels, quot)


class RationalFn:
    """num / product(den_factors); denominators stay factored."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        self.num = num
        self.den = tuple(f for f in den if not _is_one(f))
        for f in self.den:
            if f.is_zero():
                raise ZeroDivisionError("zero denominator factor")

    @classmethod
    def from_poly(cls, p):
        return cls(p, ())

    @classmethod
    def one(cls, labels):
        return cls(LaurentPoly.one(labels), ())

    @classmethod
    def zero(cls, labels):
        return cls(LaurentPoly.zero(labels), ())

    @property
    def labels(self):
        return self.num.labels

    def is_zero(self):
        return self.num.is_zero()

    def den_product(self):
        p = LaurentPoly.one(self.labels)
        for f in self.den:
            p = p * f
        return p

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalFn.from_poly(other)
        return RationalFn(self.num * other.num, self.den + other.den)

    def scale(self, c):
        return RationalFn(self.num.scale(c), self.den)

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalFn.from_poly(other)
        a, b, common = _cancel_common(list(self.den), list(other.den))
        num = self.num
        for f in b:
            num = num * f
        onum = other.num
        for f in a:
            onum = onum * f
        return RationalFn(num + onum, tuple(common) + tuple(a) + tuple(b))

    def __sub__(self, other):
        return self + (-other)

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverting zero rational function")
        num = LaurentPoly.one(self.labels)
        for f in self.den:
            num = num * f
        return RationalFn(num, (self.num,))

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalFn.from_poly(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        a, b, _ = _cancel_common(list(self.den), list(other.den))
        left = self.num
        for f in b:
            left = left * f
        right = other.num
        for f in a:
            right = right * f
        return left == right

    def reduced(self):
        """Cancel denominator factors that divide the numerator exactly."""
        if not self.den or self.num.is_zero():
            return RationalFn(self.num, ())
        num = self.num
        keep = []
        for f in self.den:
            try:
                num = exact_divide(num, f)
            except InexactDivision:
                keep.append(f)
        return RationalFn(num, tuple(keep))

    def map_parts(self, fn):
        return RationalFn(fn(self.num), tuple(fn(f) for f in self.den))

    def translate_twist(self, lamp):
        return self.map_parts(lambda p: p.translate_twist(lamp))

    def weyl_image(self, mat):
        return self.map_parts(lambda p: p.weyl_image(mat))

    def aff_weyl_image(self, w):
        return self.map_parts(lambda p: p.aff_weyl_image(w))

    def to_laurent(self):
        out = self.num
        for f in self.den:
            out = exact_divide(out, f)
        return out

    def eval_at_qpoint(self, point, sign=1):
        den = self.labels.field.one()
        for f in self.den:
            v = f.eval_at_qpoint(point, sign)
            if v.is_zero():
                raise ZeroDivisionError("denominator vanishes at this point")
            den = den * v
        return self.num.eval_at_qpoint(point, sign) / den

    def __str__(self):
        if not self.den:
            return str(self.num)
        dens = " * ".join(f"[{f}]" for f in self.den)
        return f"({self.num}) / ({dens})"


def _is_one(p):
    if len(p.terms) != 1:
        return False
    ((e, c),) = p.terms.items()
    return not any(e) and c.is_one()


def _cancel_common(a, b):
    """Remove structurally equal factors shared by the two factor lists."""
    common = []
    out_a = []
    for f in a:
        hit = None
        for i, g in enumerate(b):
            if f is g or f.struct_eq(g):
                hit = i
                break
        if hit is None:
            out_a.append(f)
        else:
            common.append(f)
            b.pop(hit)
    return out_a, b, common


def c_function(labels, a):
    """The rational weight attached to an affine root a in S1.

    c_a(z) = (1 - tau_a tau'_a z^a)(1 + tau_a / tau'_a z^a)
             / (tau_a (1 - z^{2a}))
    with z^{x + r c} read as q^r z^x.
    """
    lb = labels
    ta = lb.tau(a)
    tpa = lb.taup(a)
    one = LaurentPoly.one(lb)
    za = LaurentPoly.aff_monomial(lb, a)
    x, r = a
    z2a = LaurentPoly.aff_monomial(lb, (vec_add(x, x), 2 * r))
    num = (one - za.scale(ta * tpa)) * (one + za.scale(ta / tpa))
    num = num.scale(ta.inv())
    return RationalFn(num, (one - z2a,))


class ConeSeries:
    """Truncated series sum_x C_x z^(mu0 - x), x in Z>=0 Delta, height <= N."""

    __slots__ = ("labels", "mu0", "terms", "order")

    def __init__(self, labels, mu0, terms, order):
        self.labels = labels
        self.mu0 = tuple(Fraction(v) for v in mu0)
        self.terms = {x: c for x, c in terms.items()
                      if sum(x) <= order and not c.is_zero()}
        self.order = order

    def coeff(self, x):
        return self.terms.get(tuple(x), self.labels.field.zero())

    def __mul__(self, other):
        assert self.labels is other.labels
        order = min(self.order, other.order)
        out = {}
        for x1, c1 in self.terms.items():
            for x2, c2 in other.terms.items():
                x = tuple(a + b for a, b in zip(x1, x2))
                if sum(x) > order:
                    continue
                if x in out:
                    out[x] = out[x] + c1 * c2
                else:
                    out[x] = c1 * c2
        return ConeSeries(self.labels, vec_add(self.mu0, other.mu0),
                          out, order)

    def __add__(self, other):
        assert self.mu0 == other.mu0
        order = min(self.order, other.order)
        out = dict(self.terms)
        for x, c in other.terms.items():
            out[x] = out.get(x, self.labels.field.zero()) + c
        return ConeSeries(self.labels, self.mu0, out, order)

    def constant_coeff(self):
        """Coefficient of z^0, or zero if z^0 is not in the support cone."""
        d = self.labels.datum
        x = d.delta_coords(self.mu0)
        if all(c.denominator == 1 and c >= 0 for c in x):
            return self.coeff(tuple(int(c) for c in x))
        return self.labels.field.zero()


def _delta_coords_or_raise(datum, v, what):
    cs = datum.delta_coords(v)
    if not all(c.denominator == 1 and c >= 0 for c in cs):
        raise NonExpandable(f"{what}: offset {v} is not in the cone")
    return tuple(int(c) for c in cs)


def _poly_to_series(labels, p, order):
    """Write p = z^mu0 (C_0 + lower), mu0 the join of the support in the
    cone lattice.  The support must lie in one coset of the cone lattice."""
    d = labels.datum
    if p.is_zero():
        raise NonExpandable("zero polynomial has no leading monomial")
    exps = list(p.terms)
    coords = [d.delta_coords(e) for e in exps]
    ref = coords[0]
    for cs in coords[1:]:
        if any((a - b).denominator != 1 for a, b in zip(cs, ref)):
            raise NonExpandable(
                "support spans several cosets of the cone lattice")
    join = tuple(max(cs[i] for cs in coords) for i in range(d.n))
    mu0 = vec_add(exps[0], d.from_delta_coords(vec_sub(join, ref)))
    terms = {}
    for e, cs in zip(exps, coords):
        x = tuple(int(j - c) for j, c in zip(join, cs))
        if sum(x) <= order:
            terms[x] = p.terms[e]
    return ConeSeries(labels, mu0, terms, order)


def _geometric_inverse(labels, series, order):
    """Inverse of a cone series with invertible constant term."""
    zero_x = (0,) * labels.datum.n
    c0 = series.coeff(zero_x)
    if c0.is_zero():
        raise NonExpandable("leading coefficient vanishes")
    g_terms = {x: -(c / c0) for x, c in series.terms.items() if any(x)}
    g = ConeSeries(labels, labels.datum.zero, g_terms, order)
    acc = ConeSeries(labels, labels.datum.zero,
                     {zero_x: labels.field.one()}, order)
    power = acc
    for _ in range(order):
        power = power * g
        if not power.terms:
            break
        acc = acc + power
    inv_c0 = c0.inv()
    return ConeSeries(labels, vec_neg(series.mu0),
                      {x: c * inv_c0 for x, c in acc.terms.items()}, order)


def cone_expand(rf, order):
    """Expand a rational function as a cone series to the given height."""
    if isinstance(rf, LaurentPoly):
        rf = RationalFn.from_poly(rf)
    labels = rf.labels
    if rf.is_zero():
        return ConeSeries(labels, labels.datum.zero, {}, order)
    out = _poly_to_series(labels, rf.num, order)
    # denominator factors with a tied leading term have a vanishing
    # constant coefficient at the join and fail inside the inversion
    for f in rf.den:
        out = out * _geometric_inverse(labels,
                                       _poly_to_series(labels, f, order),
                                       order)
    return out
