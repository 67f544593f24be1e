"""Root data, Weyl groups, and affine Weyl elements."""

from fractions import Fraction

import pytest

from macdonald_hc.rootdata import (AffineWeyl, build_root_datum, vec_add,
                                   vec_neg)

ALL_DATA = [("a", "a", 1), ("a", "a", 2), ("a", "b", 2), ("b", "a", 2),
            ("c", "c", 1), ("c", "c", 2)]


@pytest.fixture(params=ALL_DATA, ids=["-".join(map(str, k)) for k in ALL_DATA])
def datum(request):
    return build_root_datum(*request.param)


def test_weyl_order(datum):
    expected = {("a", 1): 2, ("a", 2): 6, ("b", 2): 8, ("c", 1): 2,
                ("c", 2): 8}
    assert len(datum.weyl) == expected[(datum.ctype, datum.n)]


def test_positive_roots_closed(datum):
    pos = set(datum.pos_roots)
    for a in pos:
        assert vec_neg(a) not in pos
        for m in datum.weyl:
            img = tuple(sum(m[i][j] * a[j] for j in range(datum.n))
                        for i in range(datum.n))
            assert img in pos or vec_neg(img) in pos


def test_highest_root_dominant(datum):
    assert datum.dominant(datum.phi)
    for a in datum.pos_roots:
        assert datum.dominance_leq(a, datum.phi) or datum.case != "a"


def test_cartan_pairings(datum):
    for i, ai in enumerate(datum.simple_roots):
        assert datum.pair(ai, datum.coroot(ai)) == 2
        for j, aj in enumerate(datum.simple_roots):
            if i != j:
                assert datum.pair(aj, datum.coroot(ai)) <= 0


def test_reflection_involution(datum):
    for a in datum.pos_roots:
        for v in datum.L_basis:
            assert datum.reflect(a, datum.reflect(a, v)) == tuple(v)


def test_lengths_additive_on_reduced_words(datum):
    for m in datum.weyl[:8]:
        w = AffineWeyl(datum, m, datum.zero)
        om, word = w.reduced_word()
        assert len(word) == w.length()
        u = AffineWeyl.identity(datum)
        for i in word:
            u = u * AffineWeyl.simple_reflection(datum, i)
        assert om * u == w


def test_translation_word_roundtrip(datum):
    for lamp in (datum.Lp_basis[0], vec_neg(datum.Lp_basis[0])):
        t = AffineWeyl.translation(datum, lamp)
        om, word = t.reduced_word()
        u = om
        for i in word:
            u = u * AffineWeyl.simple_reflection(datum, i)
        assert u == t
        assert len(word) == t.length()


def test_inversion_set_size(datum):
    for m in datum.weyl:
        w = AffineWeyl(datum, m, datum.zero)
        assert len(w.inversion_set()) == w.length()


def test_orbit_keys(datum):
    if datum.case == "c":
        assert datum.s1_orbit_keys()[0] == "O1"
    else:
        assert all(k.startswith("len") for k in datum.s1_orbit_keys())
    allowed = set(datum.s1_orbit_keys()) | {"O2", "O4"}
    for a in datum.pos_roots:
        assert datum.orbit_key((a, 0) if datum.case != "b"
                               else (datum.coroot(a), 0)) in allowed


def test_saturated_set_contains_orbit_dominants(datum):
    lam = datum.fund_weights[0]
    if not datum.in_L(lam):
        lam = vec_add(lam, lam)
    if not datum.in_L(lam):
        pytest.skip("fundamental weight outside lattice")
    sat = datum.saturated_dominant_set(lam)
    assert sat[0] == tuple(Fraction(x) for x in lam)
    for mu in sat:
        assert datum.dominant(mu)
        assert datum.dominance_leq(mu, lam)


def test_omega_group_closure(datum):
    oms = datum.omega_group()
    assert all(u.length() == 0 for u in oms)
    keys = {u.key() for u in oms}
    for u in oms:
        for v in oms:
            assert (u * v).key() in keys


def test_minuscule_pairings(datum):
    for j in datum.minuscule_indices():
        pip = datum.minuscule_coweight(j)
        for a in datum.pos_roots:
            assert abs(datum.pair(a, pip)) <= 1


def test_quasi_minuscule_is_antidominant_coroot(datum):
    pip = datum.quasi_minuscule_coweight()
    assert datum.dominant(vec_neg(pip))
    assert not datum.dominant(pip) or all(x == 0 for x in pip)


def test_unsupported_type_rejected():
    with pytest.raises(Exception):
        build_root_datum("a", "x", 2)
