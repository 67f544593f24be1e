"""Difference-reflection operators and the affine Hecke generators.

Operators have the normal form sum_w D_w . w with w in the finite Weyl
group and each D_w a finite sum of rational coefficients times lattice
translations.  The translation part of the zeroth generator is folded
into its reflection component, so only finite Weyl parts appear as keys.
"""

from fractions import Fraction

from .laurent import LaurentPoly, RationalFn, c_function
from .rootdata import AffineWeyl, mat_mul, mat_vec, vec_add

__all__ = [
    "DiffOp",
    "DiffReflOp",
    "cherednik_generator",
    "omega_operator",
    "hecke_product",
    "y_operator",
    "beta_reduce",
]


class DiffOp:
    """sum over lattice steps s of f_s(z) . t(s), with rational f_s."""

    __slots__ = ("labels", "terms")

    def __init__(self, labels, terms):
        self.labels = labels
        self.terms = {s: f for s, f in terms.items() if not f.is_zero()}

    @classmethod
    def zero(cls, labels):
        return cls(labels, {})

    @classmethod
    def identity(cls, labels):
        return cls(labels, {labels.datum.zero: RationalFn.one(labels)})

    @classmethod
    def translation(cls, labels, step, coeff=None):
        if coeff is None:
            coeff = RationalFn.one(labels)
        elif isinstance(coeff, LaurentPoly):
            coeff = RationalFn.from_poly(coeff)
        return cls(labels, {tuple(step): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for s, f in other.terms.items():
            if s in out:
                g = out[s] + f
                if g.is_zero():
                    del out[s]
                else:
                    out[s] = g
            else:
                out[s] = f
        return DiffOp(self.labels, out)

    def __neg__(self):
        return DiffOp(self.labels, {s: -f for s, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if hasattr(c, "is_zero") and c.is_zero():
            return DiffOp.zero(self.labels)
        return DiffOp(self.labels,
                      {s: f.scale(c) for s, f in self.terms.items()})

    def __mul__(self, other):
        """Composition: (f t(s)) (g t(s')) = f . t(s)(g) . t(s + s')."""
        out = {}
        for s1, f1 in self.terms.items():
            for s2, f2 in other.terms.items():
                s = vec_add(s1, s2)
                g = f1 * f2.translate_twist(s1)
                if s in out:
                    out[s] = out[s] + g
                else:
                    out[s] = g
        return DiffOp(self.labels, out)

    def conj_weyl(self, mat):
        """w . D . w^-1 for a finite Weyl element."""
        return DiffOp(self.labels,
                      {mat_vec(mat, s): f.weyl_image(mat)
                       for s, f in self.terms.items()})

    def apply(self, g):
        """Apply to a Laurent polynomial or rational function in z."""
        if isinstance(g, LaurentPoly):
            g = RationalFn.from_poly(g)
        out = RationalFn.zero(self.labels)
        for s, f in self.terms.items():
            out = out + f * g.translate_twist(s)
        return out

    def apply_to_poly(self, g):
        """Apply to a Laurent polynomial and divide back to a polynomial."""
        return self.apply(g).to_laurent()

    def is_zero(self):
        return all(f.is_zero() for f in self.terms.values())

    def __eq__(self, other):
        return isinstance(other, DiffOp) and (self - other).is_zero()

    def map_coeffs(self, fn):
        return DiffOp(self.labels,
                      {s: fn(f) for s, f in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for s in sorted(self.terms):
            coords = "(" + ",".join(str(x) for x in s) + ")"
            bits.append(f"[{self.terms[s]}] t{coords}")
        return " + ".join(bits)


class DiffReflOp:
    """sum over finite Weyl elements w of D_w . w."""

    __slots__ = ("labels", "comps")

    def __init__(self, labels, comps):
        self.labels = labels
        self.comps = {m: d for m, d in comps.items() if d.terms}

    @classmethod
    def zero(cls, labels):
        return cls(labels, {})

    @classmethod
    def identity(cls, labels):
        return cls(labels,
                   {labels.datum.identity_mat: DiffOp.identity(labels)})

    @classmethod
    def scalar(cls, labels, c):
        return cls.identity(labels).scale(c)

    def __add__(self, other):
        out = dict(self.comps)
        for m, d in other.comps.items():
            out[m] = out[m] + d if m in out else d
        return DiffReflOp(self.labels, out)

    def __neg__(self):
        return DiffReflOp(self.labels,
                          {m: -d for m, d in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return DiffReflOp(self.labels,
                          {m: d.scale(c) for m, d in self.comps.items()})

    def __mul__(self, other):
        out = {}
        for m1, d1 in self.comps.items():
            for m2, d2 in other.comps.items():
                m = mat_mul(m1, m2)
                d = d1 * d2.conj_weyl(m1)
                out[m] = out[m] + d if m in out else d
        # keep coefficient fractions small along long products
        out = {m: d.map_coeffs(lambda f: f.reduced())
               for m, d in out.items()}
        return DiffReflOp(self.labels, out)

    def apply(self, g):
        if isinstance(g, LaurentPoly):
            g = RationalFn.from_poly(g)
        out = RationalFn.zero(self.labels)
        for m, d in self.comps.items():
            out = out + d.apply(g.weyl_image(m))
        return out

    def is_zero(self):
        return all(d.is_zero() for d in self.comps.values())

    def __eq__(self, other):
        return isinstance(other, DiffReflOp) and (self - other).is_zero()

    def __str__(self):
        if not self.comps:
            return "0"
        return " + ".join(f"({d}) . w{self.labels.datum.weyl_index[m]}"
                          for m, d in self.comps.items())


def cherednik_generator(labels, i):
    """T_i = tau_i + c_{a_i}(z)(s_i - 1) with a_i the i-th affine simple root."""
    d = labels.datum
    a = d.affine_simples[i]
    tau = labels.tau_simple(i)
    c = c_function(labels, a)
    s = AffineWeyl.simple_reflection(d, i)
    ident_part = DiffOp(labels,
                        {d.zero: RationalFn.one(labels).scale(tau) - c})
    refl_step = mat_vec(s.mat, s.trans)
    refl_part = DiffOp(labels, {refl_step: c})
    return DiffReflOp(labels, {d.identity_mat: ident_part,
                               s.mat: refl_part})


def cherednik_generator_inverse(labels, i):
    """T_i^{-1} = T_i - tau_i + tau_i^{-1}."""
    tau = labels.tau_simple(i)
    t = cherednik_generator(labels, i)
    return (t + DiffReflOp.scalar(labels, tau.inv() - tau))


def omega_operator(labels, u):
    """A length-zero element u = w t(lam') as the operator t(w lam') . w."""
    d = labels.datum
    step = mat_vec(u.mat, u.trans)
    return DiffReflOp(labels, {u.mat: DiffOp.translation(labels, step)})


def hecke_product(labels, omega, word, invert=False):
    """T_u for u = omega s_{i1} ... s_{il} given by a reduced word.

    With invert=True returns T_u^{-1} = T_{il}^{-1} ... T_{i1}^{-1} T_omega^{-1}.
    """
    if not invert:
        out = omega_operator(labels, omega)
        for i in word:
            out = out * cherednik_generator(labels, i)
        return out
    out = omega_operator(labels, omega.inv())
    for i in word:
        out = cherednik_generator_inverse(labels, i) * out
    return out


def _dominant_split(datum, lamp):
    """lam' = mu' - nu' with both parts dominant, split coordinatewise in
    the simple-root pairing coordinates."""
    pairs = [datum.pair(lamp, a) for a in datum.simple_roots]
    mu = datum.zero
    nu = datum.zero
    for j, c in enumerate(pairs):
        assert c.denominator == 1
        w = datum.fund_coweights[j]
        if c > 0:
            mu = vec_add(mu, tuple(c * x for x in w))
        elif c < 0:
            nu = vec_add(nu, tuple(-c * x for x in w))
    return mu, nu


def y_operator(labels, lamp):
    """Y^{lam'} = T_{t(mu')} T_{t(nu')}^{-1} for lam' = mu' - nu' dominant."""
    d = labels.datum
    mu, nu = _dominant_split(d, lamp)
    assert d.in_Lp(mu) and d.in_Lp(nu)
    om1, w1 = AffineWeyl.translation(d, mu).reduced_word()
    out = hecke_product(labels, om1, w1)
    if nu != d.zero:
        # fold the inverse factors in one generator at a time; each step
        # is a small multiplication and gets reduced right away
        om2, w2 = AffineWeyl.translation(d, nu).reduced_word()
        for i in reversed(w2):
            out = out * cherednik_generator_inverse(labels, i)
        out = out * omega_operator(labels, om2.inv())
    return out


def beta_reduce(dro):
    """Drop the reflection parts: sum_w D_w . w -> sum_w D_w."""
    out = DiffOp.zero(dro.labels)
    for d in dro.comps.values():
        out = (out + d).map_coeffs(lambda f: f.reduced())
    return out


def symmetrize(dro):
    """|W0|^{-1} sum_w w . D . w^{-1} over the finite Weyl group."""
    labels = dro.labels
    d = labels.datum
    out = DiffReflOp.zero(labels)
    for m in d.weyl:
        conj = DiffReflOp(labels,
                          {mat_mul(mat_mul(m, m2), d.w_inv(m)):
                           d2.conj_weyl(m)
                           for m2, d2 in dro.comps.items()})
        out = out + conj
    return out.scale(labels.field.from_fraction(Fraction(1, len(d.weyl))))
