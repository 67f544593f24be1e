"""Commuting Macdonald difference operators and their asymptotics.

Two constructions of the same operator are provided: the explicit one,
as a sum of products of c-function weights over translations by a Weyl
orbit of a special coweight, and the Hecke-theoretic one, as the
reflection-free reduction of a symmetric polynomial in the commuting
Y-operators.  Their agreement is one of the main verification targets.
"""

from fractions import Fraction

from .laurent import (LaurentPoly, RationalFn, c_function, cone_expand,
                      NonExpandable)
from .heckeops import DiffOp, DiffReflOp, beta_reduce, y_operator
from .rootdata import AffineWeyl, mat_vec, vec_add, vec_neg, vec_scale

__all__ = [
    "SpectrumCollision",
    "MacdonaldOperator",
    "special_coweights",
    "macdonald_operator",
    "orbit_monomial",
    "dp_from_hecke",
    "gamma_hc",
    "eigenvalue_poly",
    "xi_eval_at_dot",
    "monomial_symmetric",
    "decompose_symmetric",
    "macdonald_polynomial",
    "commutator",
    "gamma_facet",
    "delta_facet",
    "koornwinder_coefficient",
]


class SpectrumCollision(ArithmeticError):
    """Two comparable weights share the same operator eigenvalue."""


def special_coweights(datum):
    """Antidominant translation steps generating the known operators.

    Returns a list of (name, coweight): the antidominant minuscule
    fundamental coweights w0(pi'_j) and the quasi-minuscule -phi_vee.
    """
    out = [(f"minuscule:{j}", datum.minuscule_coweight(j))
           for j in datum.minuscule_indices()]
    out.append(("quasiminuscule", datum.quasi_minuscule_coweight()))
    return out


class MacdonaldOperator:
    """Explicit difference operator attached to an antidominant coweight."""

    def __init__(self, labels, pip):
        d = labels.datum
        self.labels = labels
        self.pip = tuple(Fraction(x) for x in pip)
        self.quasi = self.pip == vec_neg(d.phi_vee)
        if not self.quasi:
            if not any(self.pip == d.minuscule_coweight(j)
                       for j in d.minuscule_indices()):
                raise ValueError(
                    "coweight must be antidominant minuscule or -phi_vee")
        base = AffineWeyl.translation(d, vec_neg(self.pip)).inversion_set()
        self.orbit = d.weyl_orbit(self.pip)
        self.columns = []
        terms = {}
        csum = RationalFn.zero(labels)
        for mu, w in self.orbit:
            affs = [(mat_vec(w, x), r) for x, r in base]
            coeff = RationalFn.one(labels)
            for a in affs:
                coeff = coeff * c_function(labels, a)
            self.columns.append((w, mu, affs, coeff))
            terms[mu] = coeff
            csum = csum + coeff
        if self.quasi:
            const = labels.field.zero()
            for mu, _ in self.orbit:
                const = const + labels.rho_mono(vec_neg(mu))
            c0 = RationalFn.one(labels).scale(const) - csum
            z = d.zero
            terms[z] = terms.get(z, RationalFn.zero(labels)) + c0
        self.op = DiffOp(labels, terms)

    def eigen_poly(self):
        """The symmetric xi-polynomial p with this operator equal to D_p."""
        return orbit_monomial(self.labels, self.pip)


def macdonald_operator(labels, pip):
    return MacdonaldOperator(labels, pip)


def orbit_monomial(labels, lamp):
    """m_{lam'} = sum of xi^{mu'} over the Weyl orbit of lam'."""
    terms = {}
    one = labels.field.one()
    for mu, _ in labels.datum.weyl_orbit(tuple(Fraction(x) for x in lamp)):
        terms[mu] = one
    return LaurentPoly(labels, terms)


def dp_from_hecke(labels, p):
    """D_p = beta(p(Y)) for a symmetric xi-polynomial p."""
    acc = DiffReflOp.zero(labels)
    for lamp, c in p.terms.items():
        acc = acc + y_operator(labels, lamp).scale(c)
    return beta_reduce(acc)


def gamma_hc(labels, dop):
    """Harish-Chandra image: constant asymptotic coefficients, rho-twisted."""
    terms = {}
    for s, f in dop.terms.items():
        c0 = cone_expand(f, 0).constant_coeff()
        if c0.is_zero():
            continue
        c = c0 * labels.rho_mono(s)
        if s in terms:
            c = terms[s] + c
        terms[s] = c
    return LaurentPoly(labels, terms)


def eigenvalue_poly(labels, p):
    """ptilde(xi): the twist p(-xi - rho_{k'}) as a xi-polynomial."""
    terms = {}
    for lamp, c in p.terms.items():
        nl = vec_neg(lamp)
        coeff = c * labels.rho_mono(nl)
        if nl in terms:
            coeff = terms[nl] + coeff
        terms[nl] = coeff
    return LaurentPoly(labels, terms)


def xi_eval_at_dot(labels, p, lam, w_mat=None):
    """Evaluate a xi-polynomial at -w(lam + rho_{k'}).

    With w the identity this is ptilde(lam) when applied to p itself.
    The rho part stays a parameter monomial in generic mode.
    """
    d = labels.datum
    if w_mat is None:
        w_mat = d.identity_mat
    wi = d.w_inv(w_mat)
    out = labels.field.zero()
    for lamp, c in p.terms.items():
        mu = mat_vec(wi, lamp)
        out = out + (c * labels.qpow(-d.pair(mu, lam))
                     * labels.rho_mono(vec_neg(mu)))
    return out


def monomial_symmetric(labels, lam):
    """m_lam in the z-variables: orbit sum of z^mu over W0(lam)."""
    terms = {}
    one = labels.field.one()
    for mu, _ in labels.datum.weyl_orbit(tuple(Fraction(x) for x in lam)):
        terms[mu] = one
    return LaurentPoly(labels, terms)


def decompose_symmetric(labels, poly, dominants):
    """Write a W0-invariant polynomial in the m_mu basis for the given
    dominant weights; returns (coeffs dict, remainder)."""
    rem = poly
    coeffs = {}
    for mu in dominants:
        c = rem.terms.get(mu)
        if c is None or c.is_zero():
            continue
        coeffs[mu] = c
        rem = rem - monomial_symmetric(labels, mu).scale(c)
    return coeffs, rem


def macdonald_polynomial(labels, lam, mac_op=None):
    """Monic symmetric Macdonald(-Koornwinder) polynomial of dominant weight.

    Solves the eigenvalue problem for a single Macdonald operator by
    triangularity in the dominance order.  Returns (poly, coeff dict).
    """
    d = labels.datum
    lam = tuple(Fraction(x) for x in lam)
    if not d.dominant(lam) or not d.in_L(lam):
        raise ValueError("weight must be dominant in L")
    if mac_op is None:
        mac_op = macdonald_operator(labels, special_coweights(d)[0][1])
    sat = d.saturated_dominant_set(lam)
    p = mac_op.eigen_poly()
    ptil = eigenvalue_poly(labels, p)
    evs = [xi_eval_at_dot(labels, p, mu) for mu in sat]
    # columns of the operator in the m-basis
    cols = []
    for j, mu in enumerate(sat):
        img = mac_op.op.apply_to_poly(monomial_symmetric(labels, mu))
        col, rem = decompose_symmetric(labels, img, sat)
        if not rem.is_zero():
            raise ArithmeticError(
                f"operator image of m_{mu} leaves the saturated span")
        cols.append(col)
        diag = col.get(mu, labels.field.zero())
        if not (diag - evs[j]).is_zero():
            raise ArithmeticError("diagonal entry differs from eigenvalue")
    ev0 = evs[0]
    ks = {sat[0]: labels.field.one()}
    for i in range(1, len(sat)):
        mu = sat[i]
        gap = ev0 - evs[i]
        if gap.is_zero():
            raise SpectrumCollision(
                f"eigenvalue of {mu} collides with the top weight")
        s = labels.field.zero()
        for j in range(i):
            c = cols[j].get(mu)
            if c is not None and sat[j] in ks:
                s = s + ks[sat[j]] * c
        val = s / gap
        if not val.is_zero():
            ks[mu] = val
    poly = LaurentPoly.zero(labels)
    for mu, c in ks.items():
        poly = poly + monomial_symmetric(labels, mu).scale(c)
    return poly, ks


def commutator(d1, d2):
    return d1 * d2 - d2 * d1


def gamma_facet(labels, facet, dop, order):
    """Facet asymptotics: per translation step, the cone coefficients
    supported on the facet directions, twisted by the parabolic rho.

    ``facet`` is a set of 0-based simple-root indices.  Returns a dict
    mapping each step to a dict of facet-cone coordinates -> Scalar.
    """
    d = labels.datum
    facet = frozenset(facet)
    out = {}
    for s, f in dop.terms.items():
        series = cone_expand(f, order)
        base = d.delta_coords(series.mu0)
        if not all(c.denominator == 1 for c in base):
            raise NonExpandable("coefficient has a fractional leading shift")
        base = tuple(int(c) for c in base)
        twist = labels.rho_mono(s, skip=facet)
        restricted = {}
        for y, c in series.terms.items():
            x = tuple(yy - b for yy, b in zip(y, base))
            if any(v < 0 for v in x):
                continue
            if any(v != 0 for i, v in enumerate(x) if i not in facet):
                continue
            restricted[x] = restricted.get(
                x, labels.field.zero()) + c * twist
        restricted = {x: c for x, c in restricted.items() if not c.is_zero()}
        if restricted:
            out[s] = restricted
    return out


def delta_facet(labels, facet, facet_image):
    """Collapse a facet image to the full Harish-Chandra image.

    Takes the constant facet coefficient of each step and restores the
    rho-twist over the roots inside the facet span.
    """
    d = labels.datum
    terms = {}
    zero_x = (0,) * d.n
    for s, coeffs in facet_image.items():
        c0 = coeffs.get(zero_x)
        if c0 is None or c0.is_zero():
            continue
        extra = labels.rho_mono(s) * labels.rho_mono(s, skip=facet).inv()
        terms[s] = c0 * extra
    return LaurentPoly(labels, terms)


def koornwinder_coefficient(labels):
    """The explicit rational coefficient of t(-eps_1) in the nonreduced
    quasi-minuscule operator (the classical one-variable weight of the
    Koornwinder difference operator)."""
    d = labels.datum
    assert d.case == "c"
    n = d.n
    eps = []
    for i in range(n):
        v = d.zero
        for j in range(i, n):
            v = vec_add(v, d.coroots_basis[j])
        eps.append(v)
    one = LaurentPoly.one(labels)
    q = labels.qpow(1)
    qh = labels.qpow(Fraction(1, 2))
    out = RationalFn.one(labels).scale(
        labels.kappa_q("O1p").inv()
        * (labels.kappa_q("O5") ** (n - 1)).inv() if n >= 2
        else labels.kappa_q("O1p").inv())
    k5 = labels.kappa_q("O5") if n >= 2 else None
    for j in range(1, n):
        for sgn in (1, -1):
            vecj = vec_add(eps[0], vec_scale(sgn, eps[j]))
            zj = LaurentPoly.monomial(labels, vecj)
            out = out * RationalFn(one - zj.scale(k5), (one - zj,))
    z1 = LaurentPoly.monomial(labels, eps[0])
    z2 = LaurentPoly.monomial(labels, vec_add(eps[0], eps[0]))
    num = ((one - z1.scale(labels.kappa_q("O1")))
           * (one + z1.scale(labels.kappa_q("O2")))
           * (one - z1.scale(qh * labels.kappa_q("O3")))
           * (one + z1.scale(qh * labels.kappa_q("O4"))))
    out = out * RationalFn(num, (one - z2, one - z2.scale(q)))
    return out
