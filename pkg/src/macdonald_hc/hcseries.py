"""Difference Harish-Chandra series for the Macdonald operators.

The series Phi(z, xi) = sum_x Gamma_x(xi) z^{-x} over the cone spanned by
the gradient basis is determined by Gamma_0 = 1 and the eigenvalue
equation for a single Macdonald operator.  Coefficients are rational
functions in a formal spectral variable xi on the step lattice; the
linear step at cone point x divides out the factor r(xi) - t(x)(r(xi))
with r the twisted symbol of the operator.  Spectral points specialize
xi-monomials to q-powers, giving numerical (scalar) coefficients; at
dominant nonsingular weights the specialized series truncates to the
monic Macdonald polynomial, and at nonpositive integral multiplicities
(case with weight lattice the full weight lattice of the root system)
it is supported on a finite box and matches the normalized
Baker-Akhiezer function.
"""

from fractions import Fraction

from .laurent import (LaurentPoly, RationalFn, cone_expand, exact_divide,
                      InexactDivision)
from .macops import MacdonaldOperator, eigenvalue_poly
from .rootdata import mat_vec, vec_add, vec_neg, vec_scale, vec_sub

__all__ = [
    "SingularSpectralPoint",
    "HeightBudgetExceeded",
    "PreconditionViolated",
    "SpectralPoint",
    "HCSeries",
    "hc_series_formal",
    "hc_series_specialized",
    "verify_eigen_equations",
    "singular_member",
    "specialize_series",
    "macdonald_overlap",
    "baker_support_set",
    "baker_normalization",
    "baker_check",
]


class SingularSpectralPoint(ArithmeticError):
    """A coefficient denominator vanishes at the requested spectral point."""


class HeightBudgetExceeded(ValueError):
    """A verification was requested beyond the computed truncation height."""


class PreconditionViolated(ValueError):
    """The multiplicity data does not meet the operation's hypothesis."""


class SpectralPoint:
    """A point w.lam = w(lam + rho_{k'}) - rho_{k'} of the dot orbit.

    ``lam`` has rational coordinates; ``w_mat`` defaults to the identity.
    In generic-parameter mode the rho shift stays a parameter monomial.
    """

    def __init__(self, labels, lam, w_mat=None):
        self.labels = labels
        self.lam = tuple(Fraction(x) for x in lam)
        d = labels.datum
        self.w_mat = d.identity_mat if w_mat is None else w_mat
        self.w_inv = d.w_inv(self.w_mat)

    def eval_mono(self, mup):
        """The value of xi^{mu'} at this point, as a Scalar."""
        lb = self.labels
        d = lb.datum
        wl = mat_vec(self.w_mat, self.lam)
        out = lb.qpow(d.pair(mup, wl))
        if self.w_mat != d.identity_mat:
            out = out * lb.rho_mono(mat_vec(self.w_inv, mup)) \
                * lb.rho_mono(mup).inv()
        return out

    def eval_poly(self, p):
        out = self.labels.field.zero()
        for e, c in p.terms.items():
            out = out + c * self.eval_mono(e)
        return out

    def eval_rational(self, f):
        den = self.labels.field.one()
        for g in f.den:
            v = self.eval_poly(g)
            if v.is_zero():
                raise SingularSpectralPoint(
                    "coefficient denominator vanishes at the spectral point")
            den = den * v
        return self.eval_poly(f.num) / den


def _cone_points(n, order):
    """All nonnegative integer n-tuples of coordinate sum <= order, listed
    by height and lexicographically within a height layer."""
    out = []

    def rec(prefix, left):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(left + 1):
            rec(prefix + [v], left - v)
    rec([], order)
    out.sort(key=lambda x: (sum(x), x))
    return out


def _operator_table(labels, dop, order):
    """Cone-expand an operator's coefficients: step -> {cone point: Scalar}."""
    d = labels.datum
    table = {}
    for s, f in dop.terms.items():
        series = cone_expand(f, order)
        base = d.delta_coords(series.mu0)
        if not all(b.denominator == 1 for b in base):
            raise ValueError("operator coefficient has a fractional shift")
        base = tuple(int(b) for b in base)
        entries = {}
        for t, c in series.terms.items():
            y = tuple(tt - bb for tt, bb in zip(t, base))
            if any(v < 0 for v in y):
                raise ValueError("operator coefficient has positive z-powers")
            entries[y] = entries.get(y, labels.field.zero()) + c
        table[s] = {y: c for y, c in entries.items() if not c.is_zero()}
    return table


def _twisted_symbol(labels, table):
    """r(xi) = sum_s d_s(0) xi^{-s} from an operator table."""
    zero_x = (0,) * labels.datum.n
    terms = {}
    for s, entries in table.items():
        c = entries.get(zero_x)
        if c is None:
            continue
        ns = vec_neg(s)
        terms[ns] = terms.get(ns, labels.field.zero()) + c
    return LaurentPoly(labels, terms)


class HCSeries:
    """Truncated Harish-Chandra series.

    ``gamma`` maps cone points (integer tuples in the gradient basis) of
    height <= ``order`` to coefficients: RationalFns in xi in formal
    mode, Scalars in specialized mode.  ``point`` is the SpectralPoint in
    specialized mode, None in formal mode.
    """

    def __init__(self, labels, pip, order, gamma, point=None):
        self.labels = labels
        self.pip = pip
        self.order = order
        self.gamma = gamma
        self.point = point

    @property
    def mode(self):
        return "formal" if self.point is None else "specialized"


def _run_recurrence(labels, pip, order, point=None, sweep=None):
    d = labels.datum
    mac_op = MacdonaldOperator(labels, pip)
    table = _operator_table(labels, mac_op.op, order)
    rt = _twisted_symbol(labels, table)
    points = _cone_points(d.n, order)
    if sweep is not None:
        points = sweep(points)
    gamma = {}
    formal = point is None
    one = RationalFn.one(labels) if formal else labels.field.one()
    zero_x = (0,) * d.n
    rt_val = point.eval_poly(rt) if not formal else None
    for x in points:
        if x == zero_x:
            gamma[x] = one
            continue
        x_vec = d.from_delta_coords(x)
        bx = rt - rt.translate_twist(x_vec)
        if formal:
            if bx.is_zero():
                raise ArithmeticError(f"vanishing step factor at {x}")
            rhs = RationalFn.zero(labels)
        else:
            bval = rt_val - point.eval_poly(rt.translate_twist(x_vec))
            if bval.is_zero():
                raise SingularSpectralPoint(
                    f"step factor vanishes at cone point {x}")
            rhs = labels.field.zero()
        for s, entries in table.items():
            ns = vec_neg(s)
            for y_prev in list(gamma):
                diff = tuple(a - b for a, b in zip(x, y_prev))
                if diff == zero_x or any(v < 0 for v in diff):
                    continue
                dcoef = entries.get(diff)
                if dcoef is None:
                    continue
                y_vec = d.from_delta_coords(y_prev)
                c = dcoef * labels.qpow(d.pair(s, y_vec))
                if formal:
                    mono = LaurentPoly.monomial(labels, ns, c)
                    rhs = rhs + gamma[y_prev] * RationalFn.from_poly(mono)
                else:
                    rhs = rhs + gamma[y_prev] * c * point.eval_mono(ns)
        if formal:
            gamma[x] = RationalFn(rhs.num, rhs.den + (bx,))
        else:
            gamma[x] = rhs / bval
    return HCSeries(labels, mac_op.pip, order, gamma, point)


def hc_series_formal(labels, pip, order, sweep=None):
    """The formal-spectral-parameter series to the given height.

    The optional ``sweep`` reorders the cone points (any order refining
    the componentwise partial order gives the same answer).
    """
    return _run_recurrence(labels, pip, order, sweep=sweep)


def hc_series_specialized(labels, pip, order, point):
    """Run the recurrence directly at a spectral point."""
    if not isinstance(point, SpectralPoint):
        point = SpectralPoint(labels, point)
    return _run_recurrence(labels, pip, order, point=point)


def specialize_series(series, point):
    """Evaluate a formal series coefficientwise at a spectral point."""
    if series.mode != "formal":
        raise ValueError("can only specialize a formal series")
    labels = series.labels
    if not isinstance(point, SpectralPoint):
        point = SpectralPoint(labels, point)
    gamma = {x: point.eval_rational(f) for x, f in series.gamma.items()}
    return HCSeries(labels, series.pip, series.order, gamma, point)


def verify_eigen_equations(series, dop, p, order):
    """Check D_p Phi = ptilde Phi through cone height ``order``.

    ``dop`` is the operator and ``p`` its symmetric xi-symbol.  Formal
    mode compares rational functions by cross-multiplication.
    """
    if order > series.order:
        raise HeightBudgetExceeded(
            f"requested height {order} exceeds computed {series.order}")
    labels = series.labels
    d = labels.datum
    table = _operator_table(labels, dop, order)
    ptil = eigenvalue_poly(labels, p)
    formal = series.mode == "formal"
    point = series.point
    if not formal:
        ev = point.eval_poly(ptil)
    for x in _cone_points(d.n, order):
        if formal:
            lhs = RationalFn.zero(labels)
        else:
            lhs = labels.field.zero()
        for s, entries in table.items():
            ns = vec_neg(s)
            for y, dcoef in entries.items():
                prev = tuple(a - b for a, b in zip(x, y))
                if any(v < 0 for v in prev):
                    continue
                g = series.gamma[prev]
                prev_vec = d.from_delta_coords(prev)
                c = dcoef * labels.qpow(d.pair(s, prev_vec))
                if formal:
                    mono = LaurentPoly.monomial(labels, ns, c)
                    lhs = lhs + g * RationalFn.from_poly(mono)
                else:
                    lhs = lhs + g * c * point.eval_mono(ns)
        g = series.gamma[x]
        if formal:
            rhs = g * RationalFn.from_poly(ptil)
            if not (lhs == rhs):
                return False
        else:
            if not (lhs - ev * g).is_zero():
                return False
    return True


def singular_member(labels, lam, order):
    """Is lam within the singular locus up to cone height ``order``?

    Tests whether lam - w.lam lies in the positive cone lattice, is
    nonzero, and has height at most ``order`` for some nonidentity w,
    with the dot action w.lam = w(lam + rho_{k'}) - rho_{k'}.  In
    generic-parameter mode the rho shift is formally independent of the
    lattice directions, so the test degenerates to w fixing rho; since
    generic rho is regular this returns False for rational lam.
    """
    d = labels.datum
    lam = tuple(Fraction(x) for x in lam)
    if labels.mode == "generic":
        return False
    rho = labels.rho_kp_vec
    shifted = vec_add(lam, rho)
    for m in d.weyl:
        if m == d.identity_mat:
            continue
        diff = vec_sub(shifted, mat_vec(m, shifted))
        cs = d.delta_coords(diff)
        if all(c.denominator == 1 and c >= 0 for c in cs) \
                and any(c > 0 for c in cs) and sum(cs) <= order:
            return True
    return False


def macdonald_overlap(series, poly, lam):
    """Compare a specialized series with a polynomial eigenfunction.

    Checks Gamma_x against the coefficient of z^{lam - x} in ``poly`` for
    every cone point x of the series (heights above the truncation are
    not inspected).  Returns True on full agreement.
    """
    labels = series.labels
    d = labels.datum
    lam = tuple(Fraction(v) for v in lam)
    zero = labels.field.zero()
    for x, g in series.gamma.items():
        mu = vec_sub(lam, d.from_delta_coords(x))
        c = poly.terms.get(mu, zero)
        if not (g - c).is_zero():
            return False
    return True


def baker_support_set(labels):
    """The finite support box: sums over positive roots of l_alpha alpha
    with 0 <= l_alpha <= -k_alpha, as cone coordinate tuples."""
    d = labels.datum
    if labels.mode != "specialized":
        raise PreconditionViolated("needs specialized multiplicities")
    bounds = []
    for alpha in d.pos_roots:
        k = labels._kprime_of_coroot(alpha)
        if k.denominator != 1 or k > 0:
            raise PreconditionViolated(
                "multiplicities must be nonpositive integers")
        bounds.append((alpha, -int(k)))
    pts = {(0,) * d.n}
    for alpha, b in bounds:
        cs = d.delta_coords(alpha)
        step = tuple(int(c) for c in cs)
        new = set()
        for p in pts:
            for l in range(b + 1):
                new.add(tuple(a + l * s for a, s in zip(p, step)))
        pts = new
    return pts


def baker_normalization(labels):
    """The leading normalization polynomial in xi:
    xi^{rho'_k} prod_{alpha > 0} prod_{j=1..-k_alpha}
    (q^{j/2} - q^{-j/2} xi^{alpha_vee})."""
    d = labels.datum
    rho_p = d.zero
    for alpha in d.pos_roots:
        k = labels._kprime_of_coroot(alpha)
        rho_p = vec_add(rho_p, vec_scale(Fraction(k, 2), d.coroot(alpha)))
    out = LaurentPoly.monomial(labels, rho_p)
    half = Fraction(1, 2)
    for alpha in d.pos_roots:
        k = labels._kprime_of_coroot(alpha)
        av = d.coroot(alpha)
        for j in range(1, -int(k) + 1):
            f = (LaurentPoly.monomial(labels, d.zero, labels.qpow(j * half))
                 - LaurentPoly.monomial(labels, av, labels.qpow(-j * half)))
            out = out * f
    return out


def baker_check(labels, pip, order):
    """Finite-support and regularity checks at nonpositive integral
    multiplicities (weight lattice of the full root system).

    Builds the formal series, verifies it vanishes off the support box,
    and checks that each surviving coefficient times the rho-shifted
    normalization polynomial is a Laurent polynomial in xi.
    """
    d = labels.datum
    if d.case != "a":
        raise PreconditionViolated("finite-support check needs case a data")
    support = baker_support_set(labels)
    series = hc_series_formal(labels, pip, order)
    k0 = baker_normalization(labels)
    shifted = k0.translate_twist(vec_neg(labels.rho_kp_vec))
    support_ok = True
    offenders = []
    regular_ok = True
    for x, g in series.gamma.items():
        if x not in support:
            if not g.is_zero():
                support_ok = False
                offenders.append(x)
            continue
        num = g.num * shifted
        try:
            for f in g.den:
                num = exact_divide(num, f)
        except InexactDivision:
            regular_ok = False
            offenders.append(x)
    return {
        "support_ok": support_ok,
        "regular_ok": regular_ok,
        "support": support,
        "offenders": offenders,
        "series": series,
        "normalization": k0,
    }
