"""Multiplicity labels and the scalar field attached to a root datum.

A label assigns one Hecke parameter pair (tau, tau') to each W-orbit of
the indivisible affine roots.  In generic mode the parameters are formal
variables; in specialized mode they are powers of q given by rational
multiplicity values k per orbit.  Either way q-powers are monomials in
the q-root variable (q = U^qden).
"""

from fractions import Fraction
from math import lcm

from .rootdata import vec_add, vec_scale
from .scalar import ScalarField, UnrepresentablePairing

__all__ = ["Labels", "generic_labels", "specialized_labels"]


def _denoms_of_pairings(datum):
    dens = [2]
    for b1 in list(datum.L_basis) + list(datum.Lp_basis):
        for b2 in datum.Lp_basis:
            dens.append(datum.pair(b1, b2).denominator)
    return dens


class Labels:
    """Multiplicity data: per-orbit Hecke parameters over a scalar field."""

    def __init__(self, datum, mode, kvals=None, extra_dens=()):
        self.datum = datum
        self.mode = mode
        self.orbit_keys = datum.s1_orbit_keys()
        dens = _denoms_of_pairings(datum) + [int(d) for d in extra_dens]
        if mode == "generic":
            self.kvals = None
            names = []
            self._tau_var = {}
            if datum.case == "c":
                pairs = {"O1": ("t1", "t1p"), "O3": ("t3", "t3p"),
                         "O5": ("t5", "t5")}
                for key in self.orbit_keys:
                    tn, tpn = pairs[key]
                    for nm in (tn, tpn):
                        if nm not in names:
                            names.append(nm)
                    self._tau_var[key] = (tn, tpn)
            else:
                for i, key in enumerate(self.orbit_keys):
                    nm = f"t{i + 1}"
                    names.append(nm)
                    self._tau_var[key] = (nm, nm)
            self.field = ScalarField(lcm(*dens), tuple(names))
        elif mode == "specialized":
            if kvals is None:
                raise ValueError("specialized labels need k values")
            self.kvals = {k: Fraction(v) for k, v in kvals.items()}
            for key in self._required_kval_keys():
                if key not in self.kvals:
                    raise ValueError(f"missing multiplicity value for {key}")
            for ke in self._tau_exponents().values():
                for e in ke:
                    dens.append((Fraction(e) / 2).denominator)
            rho = self._rho_kp_vec()
            for b in list(datum.Lp_basis) + list(datum.L_basis):
                dens.append(datum.pair(rho, b).denominator)
            self.field = ScalarField(lcm(*dens), ())
            self.rho_kp_vec = rho
        else:
            raise ValueError(f"unknown mode {mode!r}")

    # -- specialized helpers -------------------------------------------------

    def _required_kval_keys(self):
        if self.datum.case == "c":
            keys = ["O1", "O2", "O3", "O4"]
            if self.datum.n >= 2:
                keys.append("O5")
            return keys
        return self.orbit_keys

    def _tau_exponents(self):
        """Per S1-orbit pair (2*log_q tau, 2*log_q tau') in specialized mode."""
        k = self.kvals
        if self.datum.case == "c":
            out = {"O1": (k["O1"] + k["O2"], k["O1"] - k["O2"]),
                   "O3": (k["O3"] + k["O4"], k["O3"] - k["O4"])}
            if "O5" in self.orbit_keys:
                out["O5"] = (k["O5"], k["O5"])
            return out
        return {key: (k[key], k[key]) for key in self.orbit_keys}

    def _kprime_of_coroot(self, alpha):
        """The dual label value k'(alpha_vee) for a positive root alpha of R."""
        d = self.datum
        k = self.kvals
        if d.case == "a":
            return k[f"len{d.norm2(alpha)}"]
        if d.case == "b":
            return k[f"len{d.norm2(d.coroot(alpha))}"]
        if d.norm2(alpha) == 2:
            return k["O5"]
        return (k["O1"] + k["O2"] + k["O3"] + k["O4"]) / 2

    def _rho_kp_vec(self):
        d = self.datum
        v = d.zero
        for alpha in d.pos_roots:
            v = vec_add(v, vec_scale(self._kprime_of_coroot(alpha) / 2,
                                     alpha))
        return v

    # -- parameters ----------------------------------------------------------

    def qpow(self, e):
        return self.field.q_power(e)

    def tau(self, a):
        """tau parameter of the affine root a in S1."""
        key = self.datum.orbit_key(a)
        if self.mode == "generic":
            return self.field.monomial({self._tau_var[key][0]: 1})
        return self.qpow(Fraction(self._tau_exponents()[key][0]) / 2)

    def taup(self, a):
        """tau' parameter of the affine root a in S1."""
        key = self.datum.orbit_key(a)
        if self.mode == "generic":
            return self.field.monomial({self._tau_var[key][1]: 1})
        return self.qpow(Fraction(self._tau_exponents()[key][1]) / 2)

    def tau_simple(self, i):
        return self.tau(self.datum.affine_simples[i])

    def kappa_q(self, which):
        """q^kappa for the case-c label values (and q^kappa1' for 'O1p')."""
        assert self.datum.case == "c"
        if self.mode == "specialized":
            k = self.kvals
            if which == "O1p":
                e = (k["O1"] + k["O2"] + k["O3"] + k["O4"]) / 2
            else:
                e = k[which]
            return self.qpow(e)
        m = self.field.monomial
        table = {
            "O1": {"t1": 1, "t1p": 1},
            "O2": {"t1": 1, "t1p": -1},
            "O3": {"t3": 1, "t3p": 1},
            "O4": {"t3": 1, "t3p": -1},
            "O5": {"t5": 2},
            "O1p": {"t1": 1, "t3": 1},
        }
        return m(table[which])

    # -- the q^<rho_{k'}, lam'> monomials ------------------------------------

    def rho_mono(self, lamp, skip=()):
        """q^<rho_{k'}, lam'> restricted to positive roots outside R_F.

        ``skip`` is a set of simple-root indices F; positive roots in the
        span of F are omitted (the parabolic half-sum rho_{k',F} version).
        lam' must pair integrally so the result is a parameter monomial.
        """
        d = self.datum
        skip = frozenset(skip)

        def in_span(alpha):
            return all(alpha[i] == 0 or i in skip for i in range(d.n))

        if self.mode == "specialized":
            e = Fraction(0)
            for alpha in d.pos_roots:
                if skip and in_span(alpha):
                    continue
                e += Fraction(self._kprime_of_coroot(alpha), 2) \
                    * d.pair(alpha, lamp)
            return self.qpow(e)
        exps = {}

        def bump(var, e):
            exps[var] = exps.get(var, Fraction(0)) + e

        for alpha in d.pos_roots:
            if skip and in_span(alpha):
                continue
            p = d.pair(alpha, lamp)
            if p == 0:
                continue
            if d.case == "a":
                bump(self._tau_var[f"len{d.norm2(alpha)}"][0], p)
            elif d.case == "b":
                key = f"len{d.norm2(d.coroot(alpha))}"
                bump(self._tau_var[key][0], p)
            else:
                if d.norm2(alpha) == 2:
                    bump("t5", p)
                else:
                    bump("t1", Fraction(p, 2))
                    bump("t3", Fraction(p, 2))
        for var, e in exps.items():
            if Fraction(e).denominator != 1:
                raise UnrepresentablePairing(
                    f"rho-monomial exponent {e} of {var} not integral")
        return self.field.monomial({v: int(e) for v, e in exps.items()
                                    if e != 0})


def generic_labels(datum, extra_dens=()):
    return Labels(datum, "generic", extra_dens=extra_dens)


def specialized_labels(datum, kvals, extra_dens=()):
    return Labels(datum, "specialized", kvals=kvals, extra_dens=extra_dens)
