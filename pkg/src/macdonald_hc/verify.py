"""Verification suites over the supported small-rank data.

Each function returns a JSON-serializable report with a top-level
``pass`` flag.  The checks are exact: operator identities are tested by
applying both sides to every lattice monomial in a box, or by exact
coefficient comparison, over the generic parameter field unless a
specialized label set is given.
"""

from fractions import Fraction

from .heckeops import cherednik_generator, omega_operator
from .hcseries import (HCSeries, baker_check, baker_support_set,
                       hc_series_formal, verify_eigen_equations)
from .laurent import LaurentPoly, RationalFn
from .macops import (MacdonaldOperator, commutator, dp_from_hecke,
                     gamma_hc, monomial_symmetric, decompose_symmetric,
                     orbit_monomial, special_coweights, xi_eval_at_dot)
from .rankone import (sign_product_identity, square_identity, verify_casei)
from .rootdata import AffineWeyl

__all__ = [
    "box_monomials",
    "verify_hecke",
    "verify_routes",
    "verify_commute",
    "verify_gamma",
    "verify_rankone",
    "verify_triangular",
    "verify_hcseries",
    "verify_baker",
]


def box_monomials(labels, radius):
    """All z^mu with mu having lattice-basis coordinates in [-r, r]."""
    d = labels.datum
    coords = [()]
    for _ in range(d.n):
        coords = [c + (v,) for c in coords
                  for v in range(-radius, radius + 1)]
    out = []
    for cs in coords:
        mu = d.zero
        for c, b in zip(cs, d.L_basis):
            mu = tuple(m + c * x for m, x in zip(mu, b))
        out.append(LaurentPoly.monomial(labels, mu))
    return out


def _apply_word(ops, g):
    """Apply a list of operators right-to-left to a (rational) function."""
    for op in reversed(ops):
        g = op.apply(g)
        g = g.reduced()
    return g


def _braid_order(datum, i, j, cap=8):
    """Order of s_i s_j in the affine Weyl group, or None beyond the cap."""
    s = AffineWeyl.simple_reflection(datum, i) \
        * AffineWeyl.simple_reflection(datum, j)
    u = s
    for m in range(1, cap + 1):
        if u.mat == datum.identity_mat \
                and all(x == 0 for x in u.trans):
            return m
        u = u * s
    return None


def verify_hecke(labels, radius=4):
    """Braid, quadratic, and length-zero conjugation relations, checked by
    action on a monomial box."""
    d = labels.datum
    nn = d.n + 1
    gens = [cherednik_generator(labels, i) for i in range(nn)]
    box = box_monomials(labels, radius)
    checks = []

    def record(name, ok):
        checks.append({"relation": name, "status": "pass" if ok else "fail"})

    for i in range(nn):
        tau = labels.tau_simple(i)
        ok = True
        for g in box:
            g = RationalFn.from_poly(g)
            h = gens[i].apply(g) + g.scale(tau.inv())
            h = gens[i].apply(h) - h.scale(tau)
            if not h.is_zero():
                ok = False
                break
        record(f"quadratic:{i}", ok)
    for i in range(nn):
        for j in range(i + 1, nn):
            m = _braid_order(d, i, j)
            if m is None:
                continue
            lhs = [gens[i] if t % 2 == 0 else gens[j] for t in range(m)]
            rhs = [gens[j] if t % 2 == 0 else gens[i] for t in range(m)]
            ok = True
            for g in box:
                if not (_apply_word(lhs, g) - _apply_word(rhs, g)).is_zero():
                    ok = False
                    break
            record(f"braid:{i},{j}:m={m}", ok)
    for idx, om in enumerate(d.omega_group()):
        if om.mat == d.identity_mat and all(x == 0 for x in om.trans):
            continue
        tom = omega_operator(labels, om)
        tom_inv = omega_operator(labels, om.inv())
        perm = []
        for i in range(nn):
            img = om.act_aff(d.affine_simples[i])
            perm.append(next(j for j, a in enumerate(d.affine_simples)
                             if a == img))
        ok = True
        for i in range(nn):
            lhs = [tom, gens[i], tom_inv]
            rhs = [gens[perm[i]]]
            for g in box:
                if not (_apply_word(lhs, g) - _apply_word(rhs, g)).is_zero():
                    ok = False
                    break
            if not ok:
                break
        record(f"omega:{idx}:perm={perm}", ok)
    return {"checks": checks,
            "pass": all(c["status"] == "pass" for c in checks)}


def verify_routes(labels):
    """Explicit operator against the reflection-free Hecke reduction for
    every special coweight of the datum."""
    checks = []
    for name, pip in special_coweights(labels.datum):
        mo = MacdonaldOperator(labels, pip)
        dh = dp_from_hecke(labels, orbit_monomial(labels, pip))
        ok = dh == mo.op
        checks.append({"coweight": name,
                       "status": "pass" if ok else "fail"})
    return {"checks": checks,
            "pass": all(c["status"] == "pass" for c in checks)}


def verify_commute(labels):
    """Pairwise commutators of the datum's Macdonald operators, plus the
    Hecke-route operator of the doubled orbit monomial in rank one."""
    d = labels.datum
    sw = special_coweights(d)
    ops = [(name, MacdonaldOperator(labels, pip).op) for name, pip in sw]
    checks = []
    for a in range(len(ops)):
        for b in range(a + 1, len(ops)):
            ok = commutator(ops[a][1], ops[b][1]).is_zero()
            checks.append({"pair": [ops[a][0], ops[b][0]],
                           "status": "pass" if ok else "fail"})
    if d.n == 1:
        name, pip = sw[0]
        doubled = tuple(2 * x for x in pip)
        d2 = dp_from_hecke(labels, orbit_monomial(labels, doubled))
        ok = commutator(ops[0][1], d2).is_zero()
        checks.append({"pair": [name, f"doubled:{name}"],
                       "status": "pass" if ok else "fail"})
    return {"checks": checks,
            "pass": all(c["status"] == "pass" for c in checks)}


def verify_gamma(labels):
    """gamma(D_p) = p for the orbit monomials of the special coweights and
    for the square of the first one."""
    d = labels.datum
    checks = []
    first = None
    for name, pip in special_coweights(d):
        mo = MacdonaldOperator(labels, pip)
        p = orbit_monomial(labels, pip)
        ok = gamma_hc(labels, mo.op) == p
        checks.append({"symbol": f"m[{name}]",
                       "status": "pass" if ok else "fail"})
        if first is None:
            first = (mo, p)
    mo, p = first
    ok = gamma_hc(labels, mo.op * mo.op) == p * p
    checks.append({"symbol": "m^2", "status": "pass" if ok else "fail"})
    return {"checks": checks,
            "pass": all(c["status"] == "pass" for c in checks)}


def verify_rankone(labels):
    """Rank-one facet identities for every simple index and special
    coweight, with the square expansion and the tau-sign monomial checks."""
    d = labels.datum
    checks = []
    for name, pip in special_coweights(d):
        mo = MacdonaldOperator(labels, pip)
        for i in range(d.n):
            rep = verify_casei(labels, i, mo)
            checks.append({"coweight": name, "index": i,
                           "branch": rep["branch"],
                           "status": "pass" if rep["identity_holds"]
                           else "fail"})
            sp = sign_product_identity(labels, i, mo)
            ok = all((lhs - rhs).is_zero() for _, lhs, rhs in sp)
            checks.append({"coweight": name, "index": i,
                           "branch": "sign-product",
                           "status": "pass" if ok else "fail"})
    if d.case in ("a", "b"):
        for i in range(d.n):
            lhs, rhs = square_identity(labels, i)
            checks.append({"index": i, "branch": "square",
                           "status": "pass" if lhs == rhs else "fail"})
    return {"checks": checks,
            "pass": all(c["status"] == "pass" for c in checks)}


def dominant_weights_up_to(datum, height):
    """Dominant elements of the weight lattice with cone height <= bound."""
    out = []
    coeffs = [()]
    for _ in range(datum.n):
        coeffs = [c + (v,) for c in coeffs for v in range(2 * height + 1)]
    for cs in coeffs:
        lam = datum.zero
        for c, w in zip(cs, datum.fund_weights):
            lam = tuple(x + c * y for x, y in zip(lam, w))
        if datum.in_L(lam) and datum.height(lam) <= height:
            out.append(lam)
    return sorted(set(out))


def verify_triangular(labels, height=6):
    """Operator images of monomial symmetric functions stay in the
    saturated dominance cone with the predicted leading coefficient."""
    d = labels.datum
    mo = MacdonaldOperator(labels, special_coweights(d)[0][1])
    p = mo.eigen_poly()
    checks = []
    for lam in dominant_weights_up_to(d, height):
        sat = d.saturated_dominant_set(lam)
        img = mo.op.apply_to_poly(monomial_symmetric(labels, lam))
        col, rem = decompose_symmetric(labels, img, sat)
        diag = col.get(lam, labels.field.zero())
        ok = rem.is_zero() \
            and (diag - xi_eval_at_dot(labels, p, lam)).is_zero()
        checks.append({"weight": [str(x) for x in lam],
                       "status": "pass" if ok else "fail"})
    return {"checks": checks,
            "pass": all(c["status"] == "pass" for c in checks)}


def _mbasis_matrix(labels, dop, sat):
    """Columns of an operator in the monomial symmetric basis over the
    saturated set; raises if an image leaves the span."""
    cols = []
    for mu in sat:
        img = dop.apply_to_poly(monomial_symmetric(labels, mu))
        col, rem = decompose_symmetric(labels, img, sat)
        if not rem.is_zero():
            raise ArithmeticError(
                f"operator image of m_{mu} leaves the saturated span")
        cols.append(col)
    return cols


def polynomial_eigen_check(labels, lam, mo_first, mo_second=None):
    """Does the monic eigenfunction of the first operator satisfy the
    eigen equation of the second one at the same dominant weight?

    Works fraction-free: the eigenvector components are rescaled by the
    running products of eigenvalue gaps, so no large rational scalars
    are ever formed.  With ``mo_second=None`` the second operator is the
    square of the first (symbol m^2).
    """
    d = labels.datum
    lam = tuple(Fraction(x) for x in lam)
    sat = d.saturated_dominant_set(lam)
    n = len(sat)
    p1 = mo_first.eigen_poly()
    evs1 = [xi_eval_at_dot(labels, p1, mu) for mu in sat]
    cols1 = _mbasis_matrix(labels, mo_first.op, sat)
    if mo_second is None:
        # matrix square in the m-basis stands in for the operator square
        cols2 = []
        for j in range(n):
            acc = {}
            for mid, c in cols1[j].items():
                k = sat.index(mid)
                for nu, c2 in cols1[k].items():
                    acc[nu] = acc.get(nu, labels.field.zero()) + c2 * c
            cols2.append(acc)
        evs2 = [evs1[0] * evs1[0]]
    else:
        cols2 = _mbasis_matrix(labels, mo_second.op, sat)
        p2 = mo_second.eigen_poly()
        evs2 = [xi_eval_at_dot(labels, p2, sat[0])]
    gaps = [evs1[0] - evs1[i] for i in range(n)]
    if any(g.is_zero() for g in gaps[1:]):
        raise ArithmeticError("eigenvalue collision below the top weight")
    # w[j] carries k_j * prod of the gaps seen after step j
    w = [labels.field.one()]
    for i in range(1, n):
        acc = labels.field.zero()
        for j in range(i):
            c = cols1[j].get(sat[i])
            if c is not None:
                acc = acc + w[j] * c
        w = [wj * gaps[i] for wj in w]
        w.append(acc)
    for nu_idx in range(n):
        nu = sat[nu_idx]
        lhs = labels.field.zero()
        for j in range(n):
            c = cols2[j].get(nu)
            if c is not None:
                lhs = lhs + w[j] * c
        if not (lhs - evs2[0] * w[nu_idx]).is_zero():
            return False
    return True


def verify_hcseries(labels, order):
    """Formal series: normalization, a second-operator eigencheck, and a
    perturbed negative control."""
    d = labels.datum
    sw = special_coweights(d)
    name, pip = sw[0]
    ser = hc_series_formal(labels, pip, order)
    zero_x = (0,) * d.n
    g0 = ser.gamma[zero_x]
    norm_ok = (g0 - RationalFn.one(labels)).is_zero()
    mo = MacdonaldOperator(labels, pip)
    own_ok = verify_eigen_equations(ser, mo.op, mo.eigen_poly(), order - 1)
    if len(sw) > 1:
        mo2 = MacdonaldOperator(labels, sw[1][1])
        second = (mo2.op, mo2.eigen_poly())
    else:
        second = (mo.op * mo.op, mo.eigen_poly() * mo.eigen_poly())
    second_ok = verify_eigen_equations(ser, second[0], second[1], order - 1)
    bad = dict(ser.gamma)
    first = min((x for x in bad if x != zero_x), key=lambda x: (sum(x), x))
    bad[first] = bad[first] + RationalFn.one(labels)
    bser = HCSeries(labels, ser.pip, ser.order, bad)
    control_ok = not verify_eigen_equations(bser, mo.op, mo.eigen_poly(),
                                            order - 1)
    checks = [
        {"relation": "gamma0", "status": "pass" if norm_ok else "fail"},
        {"relation": "eigen:own", "status": "pass" if own_ok else "fail"},
        {"relation": "eigen:second",
         "status": "pass" if second_ok else "fail"},
        {"relation": "negative-control",
         "status": "pass" if control_ok else "fail"},
    ]
    return {"coweight": name, "height": order, "checks": checks,
            "pass": all(c["status"] == "pass" for c in checks)}


def verify_baker(labels, order=None):
    """Finite support and regularity of the series at nonpositive integer
    multiplicities."""
    d = labels.datum
    pip = special_coweights(d)[0][1]
    support = baker_support_set(labels)
    maxh = max(sum(x) for x in support)
    if order is None:
        order = maxh + 3
    rep = baker_check(labels, pip, order)
    checks = [
        {"relation": "support",
         "status": "pass" if rep["support_ok"] else "fail"},
        {"relation": "regularity",
         "status": "pass" if rep["regular_ok"] else "fail"},
    ]
    return {"height": order,
            "support": sorted(list(support)),
            "checks": checks,
            "pass": all(c["status"] == "pass" for c in checks)}
