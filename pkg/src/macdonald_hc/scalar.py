"""Exact coefficient field for the operator algebra.

Scalars are quotients of multivariate Laurent polynomials over Q in a
distinguished q-root variable together with formal Hecke parameters, one
pair per affine root orbit.  The q-root variable U satisfies U^qden = q;
it prints as ``v`` when qden == 2 (so v^2 = q) and as ``u`` otherwise.

No polynomial GCDs are computed.  Fractions are normalized only by
factoring out monomial content and scaling the denominator's leading
coefficient to 1; equality is decided by cross-multiplication, which is
exact over an integral domain.
"""

from fractions import Fraction

__all__ = [
    "UnrepresentablePairing",
    "ScalarField",
    "MPoly",
    "Scalar",
]


class UnrepresentablePairing(ValueError):
    """A q-exponent does not lie in (1/qden)*Z for the configured qden."""


class ScalarField:
    """Registry of scalar variables: the q-root plus formal Hecke parameters.

    ``qden`` is the positive integer N with U^N = q.  ``tau_names`` lists the
    formal parameter variables (empty in fully specialized mode).
    """

    def __init__(self, qden=2, tau_names=()):
        if qden <= 0:
            raise ValueError("qden must be positive")
        self.qden = qden
        self.tau_names = tuple(tau_names)
        qname = "v" if qden == 2 else "u"
        self.names = (qname,) + self.tau_names
        self.nvars = len(self.names)
        self._index = {name: i for i, name in enumerate(self.names)}
        self._zero_exp = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, ScalarField)
                and self.qden == other.qden
                and self.tau_names == other.tau_names)

    def __repr__(self):
        return f"ScalarField(qden={self.qden}, tau_names={self.tau_names})"

    def zero(self):
        return Scalar(MPoly(self, {}), self.poly_one())

    def one(self):
        return Scalar(self.poly_one(), self.poly_one())

    def poly_one(self):
        return MPoly(self, {self._zero_exp: Fraction(1)})

    def from_fraction(self, c):
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Scalar(MPoly(self, {self._zero_exp: c}), self.poly_one())

    def monomial(self, exps, coeff=1):
        """Scalar monomial.  ``exps`` maps variable name -> exponent.

        Exponents may be Fractions but must be integral; the q-root
        exponent is taken literally (use q_power for q-exponents).
        """
        coeff = Fraction(coeff)
        e = [0] * self.nvars
        for name, k in exps.items():
            k = Fraction(k)
            if k.denominator != 1:
                raise UnrepresentablePairing(
                    f"non-integral exponent {k} for variable {name}")
            e[self._index[name]] = int(k)
        num = MPoly(self, {tuple(e): coeff})
        return Scalar(num, self.poly_one())

    def q_power(self, e):
        """The scalar q^e, i.e. U^(qden*e).  Raises if qden*e is not integral."""
        e = Fraction(e) * self.qden
        if e.denominator != 1:
            raise UnrepresentablePairing(
                f"q-exponent {Fraction(e, self.qden)} needs a finer q-root "
                f"(qden={self.qden})")
        exp = [0] * self.nvars
        exp[0] = int(e)
        return Scalar(MPoly(self, {tuple(exp): Fraction(1)}), self.poly_one())


def _coerce(c):
    # plain ints are much faster than Fractions; keep them whenever exact
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class MPoly:
    """Laurent polynomial over Q: dict mapping exponent tuples to numbers
    (ints where possible, Fractions otherwise)."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        self.field = field
        self.terms = {e: _coerce(c) for e, c in terms.items() if c != 0}

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.field, out)

    def __neg__(self):
        return MPoly(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(self.field, out)

    def scale(self, c):
        c = _coerce(c)
        if c == 0:
            return MPoly(self.field, {})
        return MPoly(self.field, {e: c * v for e, v in self.terms.items()})

    def shift(self, exp):
        """Multiply by the monomial with exponent tuple ``exp``."""
        return MPoly(self.field,
                     {tuple(a + b for a, b in zip(e, exp)): c
                      for e, c in self.terms.items()})

    def content_exp(self):
        """Per-variable minimum exponent over all terms (the monomial content)."""
        if not self.terms:
            return self.field._zero_exp
        its = iter(self.terms)
        m = list(next(its))
        for e in its:
            for i, x in enumerate(e):
                if x < m[i]:
                    m[i] = x
        return tuple(m)

    def lead_key(self):
        """Lexicographically largest exponent tuple (for canonical scaling)."""
        return max(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.field.names
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k != 0:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


class Scalar:
    """Fraction of two MPoly values, normalized by monomial content only."""

    __slots__ = ("num", "den")

    def __init__(self, num, den, normalize=True):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator scalar")
        if normalize:
            if num.is_zero():
                den = num.field.poly_one()
            else:
                # monomials are units: strip the denominator's monomial
                # content into the numerator, then make the denominator's
                # leading coefficient 1
                cd = den.content_exp()
                if any(cd):
                    neg = tuple(-x for x in cd)
                    num = num.shift(neg)
                    den = den.shift(neg)
                lc = den.terms[den.lead_key()]
                if lc != 1:
                    num = num.scale(Fraction(1) / lc)
                    den = den.scale(Fraction(1) / lc)
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            other = self.field.from_fraction(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # weak but consistent: hash of the normalized pair
        return hash((frozenset(self.num.terms.items()),
                     frozenset(self.den.terms.items())))

    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = self.field.from_fraction(other)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = self.field.from_fraction(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            other = self.field.from_fraction(other)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverting zero scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = self.field.from_fraction(other)
        return self * other.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def as_fraction(self):
        """The rational value, if the scalar is constant; raises otherwise."""
        zero = self.field._zero_exp
        if self.is_zero():
            return Fraction(0)
        if set(self.num.terms) == {zero} and set(self.den.terms) == {zero}:
            return Fraction(self.num.terms[zero]) / self.den.terms[zero]
        raise ValueError("scalar is not a rational constant")

    def __str__(self):
        if self.den == self.field.poly_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"Scalar({self})"
