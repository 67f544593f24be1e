"""Macdonald operators, the gamma homomorphism, and polynomials."""

from fractions import Fraction

import pytest

from macdonald_hc.macops import (MacdonaldOperator, commutator,
                                 dp_from_hecke, delta_facet, gamma_facet,
                                 gamma_hc, koornwinder_coefficient,
                                 macdonald_polynomial, monomial_symmetric,
                                 orbit_monomial, special_coweights,
                                 xi_eval_at_dot)
from macdonald_hc.laurent import RationalFn
from macdonald_hc.params import generic_labels
from macdonald_hc.rootdata import build_root_datum


@pytest.fixture(scope="module")
def labels_a1():
    return generic_labels(build_root_datum("a", "a", 1))


@pytest.fixture(scope="module")
def labels_c1():
    return generic_labels(build_root_datum("c", "c", 1))


def test_route_agreement_a1(labels_a1):
    for name, pip in special_coweights(labels_a1.datum):
        mo = MacdonaldOperator(labels_a1, pip)
        dh = dp_from_hecke(labels_a1, orbit_monomial(labels_a1, pip))
        assert dh == mo.op, name


def test_koornwinder_operator_n1(labels_c1):
    """The rank-one operator has the Askey-Wilson coefficient shape."""
    pip = special_coweights(labels_c1.datum)[0][1]
    mo = MacdonaldOperator(labels_c1, pip)
    dh = dp_from_hecke(labels_c1, orbit_monomial(labels_c1, pip))
    assert dh == mo.op
    kc = koornwinder_coefficient(labels_c1)
    down = mo.op.terms[pip]
    assert (down - kc).reduced().is_zero()


def test_commutators_a1(labels_a1):
    d = labels_a1.datum
    sw = special_coweights(d)
    ops = [MacdonaldOperator(labels_a1, pip).op for _, pip in sw]
    assert commutator(ops[0], ops[1]).is_zero()


def test_gamma_recovers_symbol(labels_a1):
    for _, pip in special_coweights(labels_a1.datum):
        mo = MacdonaldOperator(labels_a1, pip)
        assert gamma_hc(labels_a1, mo.op) == orbit_monomial(labels_a1, pip)


def test_gamma_multiplicative(labels_a1):
    mo = MacdonaldOperator(labels_a1,
                           special_coweights(labels_a1.datum)[0][1])
    p = orbit_monomial(labels_a1, mo.pip)
    assert gamma_hc(labels_a1, mo.op * mo.op) == p * p


def test_empty_facet_factorization(labels_a1):
    """gamma equals delta_F composed with gamma_F at the empty facet."""
    mo = MacdonaldOperator(labels_a1,
                           special_coweights(labels_a1.datum)[0][1])
    fi = gamma_facet(labels_a1, (), mo.op, 4)
    assert delta_facet(labels_a1, (), fi) == gamma_hc(labels_a1, mo.op)


def test_p0_is_one(labels_a1):
    poly, ks = macdonald_polynomial(labels_a1, labels_a1.datum.zero)
    assert poly == monomial_symmetric(labels_a1, labels_a1.datum.zero)
    assert list(ks.values())[0].is_one()


def test_p_omega_is_m_omega(labels_a1):
    lam = labels_a1.datum.fund_weights[0]
    poly, _ = macdonald_polynomial(labels_a1, lam)
    assert poly == monomial_symmetric(labels_a1, lam)


def test_eigen_equation_small(labels_c1):
    d = labels_c1.datum
    lam = d.fund_weights[0]
    lam = tuple(2 * x for x in lam)
    if not d.in_L(lam):
        pytest.skip("weight outside lattice")
    mo = MacdonaldOperator(labels_c1, special_coweights(d)[0][1])
    poly, _ = macdonald_polynomial(labels_c1, lam, mac_op=mo)
    ev = xi_eval_at_dot(labels_c1, mo.eigen_poly(), lam)
    lhs = mo.op.apply(poly)
    rhs = RationalFn.from_poly(poly.scale(ev))
    assert (lhs - rhs).is_zero()


def test_nondominant_weight_rejected(labels_a1):
    d = labels_a1.datum
    bad = tuple(-x for x in d.fund_weights[0])
    bad = tuple(2 * x for x in bad)
    with pytest.raises(ValueError):
        macdonald_polynomial(labels_a1, bad)
