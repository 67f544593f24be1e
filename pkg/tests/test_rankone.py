"""Rank-one facet reduction of the Macdonald operators."""

from fractions import Fraction

import pytest

from macdonald_hc.macops import MacdonaldOperator, special_coweights
from macdonald_hc.params import generic_labels
from macdonald_hc.rankone import (RankOneData, build_yz, delta_rankone,
                                  gamma_rankone, rank_one_operator,
                                  sign_product_identity, square_identity,
                                  verify_casei)
from macdonald_hc.rootdata import build_root_datum


@pytest.fixture(scope="module")
def labels_a2():
    return generic_labels(build_root_datum("a", "a", 2))


@pytest.fixture(scope="module")
def labels_c1():
    return generic_labels(build_root_datum("c", "c", 1))


def test_long_direction_flag():
    d1 = build_root_datum("c", "c", 1)
    assert RankOneData(d1, 0).c_long
    d2 = build_root_datum("c", "c", 2)
    flags = [RankOneData(d2, i).c_long for i in range(2)]
    assert sorted(flags) == [False, True]
    d3 = build_root_datum("a", "b", 2)
    assert not any(RankOneData(d3, i).c_long for i in range(2))


def test_split_roundtrip(labels_a2):
    d = labels_a2.datum
    ro = RankOneData(d, 0)
    mu = d.Lp_basis[0]
    m, x = ro.split(mu)
    back = tuple(Fraction(v) + m * u for v, u in zip(x, ro.upsilon))
    assert back == tuple(Fraction(v) for v in mu)
    assert d.pair(x, ro.alpha) == 0


def test_rank_one_operator_s_invariant(labels_a2):
    """Conjugating L_i by the reflection s_i gives L_i back."""
    d = labels_a2.datum
    for i in range(d.n):
        L = rank_one_operator(labels_a2, i)
        cols = [d.reflect(d.simple_roots[i],
                          tuple(Fraction(int(k == j)) for k in range(d.n)))
                for j in range(d.n)]
        si = tuple(tuple(cols[j][r] for j in range(d.n))
                   for r in range(d.n))
        assert L.conj_weyl(si) == L


def test_branch_selection(labels_a2, labels_c1):
    sw = special_coweights(labels_a2.datum)
    mo_min = MacdonaldOperator(labels_a2, sw[0][1])
    mo_quasi = MacdonaldOperator(labels_a2, sw[-1][1])
    assert verify_casei(labels_a2, 0, mo_min)["branch"] == "i"
    assert verify_casei(labels_a2, 0, mo_quasi)["branch"] == "ii"
    mo_c = MacdonaldOperator(labels_c1,
                             special_coweights(labels_c1.datum)[0][1])
    assert verify_casei(labels_c1, 0, mo_c)["branch"] == "iii"


def test_identities_hold(labels_a2, labels_c1):
    for lb in (labels_a2, labels_c1):
        d = lb.datum
        for name, pip in special_coweights(d):
            mo = MacdonaldOperator(lb, pip)
            for i in range(d.n):
                rep = verify_casei(lb, i, mo)
                assert rep["identity_holds"], (name, i, rep["branch"])


def test_sign_products(labels_a2):
    mo = MacdonaldOperator(labels_a2,
                           special_coweights(labels_a2.datum)[0][1])
    for i in range(labels_a2.datum.n):
        for mu, lhs, rhs in sign_product_identity(labels_a2, i, mo):
            assert (lhs - rhs).is_zero(), (i, mu)


def test_square_closed_form(labels_a2):
    for i in range(labels_a2.datum.n):
        lhs, rhs = square_identity(labels_a2, i)
        assert lhs == rhs


def test_square_closed_form_mixed_lengths():
    lb = generic_labels(build_root_datum("a", "b", 2))
    for i in range(2):
        lhs, rhs = square_identity(lb, i)
        assert lhs == rhs


def test_delta_image_of_rank_one(labels_a2):
    """delta of L_i is xi^{a_vee/2} + xi^{-a_vee/2}."""
    from macdonald_hc.laurent import LaurentPoly
    d = labels_a2.datum
    for i in range(d.n):
        ro = RankOneData(d, i)
        L = rank_one_operator(labels_a2, i)
        img = delta_rankone(labels_a2, i, L)
        expect = LaurentPoly.monomial(labels_a2, ro.upsilon) \
            + LaurentPoly.monomial(labels_a2,
                                   tuple(-v for v in ro.upsilon))
        assert img == expect


def test_yz_step_conventions(labels_a2):
    d = labels_a2.datum
    sw = special_coweights(d)
    y, z = build_yz(labels_a2, 0, sw[0][1])
    for s in list(y.terms) + list(z.terms):
        assert d.pair(s, d.simple_roots[0]) == 0
