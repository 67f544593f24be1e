"""JSON round-trips for exact values."""

import random
from fractions import Fraction

import pytest

from macdonald_hc.jsonio import (diffop_from_json, diffop_to_json,
                                 frac_from_json, frac_to_json,
                                 poly_from_json, poly_to_json,
                                 rational_from_json, rational_to_json,
                                 scalar_from_json, scalar_to_json,
                                 vec_from_json, vec_to_json)
from macdonald_hc.laurent import LaurentPoly, RationalFn, c_function
from macdonald_hc.macops import MacdonaldOperator, special_coweights
from macdonald_hc.params import generic_labels
from macdonald_hc.rootdata import build_root_datum
from macdonald_hc.scalar import MPoly, Scalar


@pytest.fixture(scope="module")
def labels():
    return generic_labels(build_root_datum("c", "c", 1))


def test_frac_roundtrip():
    for x in (Fraction(0), Fraction(-7, 3), Fraction(5)):
        assert frac_from_json(frac_to_json(x)) == x


def test_vec_roundtrip():
    v = (Fraction(1, 2), Fraction(-3))
    assert vec_from_json(vec_to_json(v)) == v


def test_scalar_roundtrip(labels):
    rng = random.Random(99)
    field = labels.field
    for _ in range(10):
        num = {}
        den = {}
        for _ in range(3):
            e = tuple(rng.randint(-2, 2) for _ in range(field.nvars))
            num[e] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            e = tuple(rng.randint(-2, 2) for _ in range(field.nvars))
            den[e] = Fraction(rng.randint(1, 6), rng.randint(1, 4))
        s = Scalar(MPoly(field, num), MPoly(field, den))
        data = scalar_to_json(s)
        back = scalar_from_json(field, data)
        assert (back - s).is_zero()
        # integer coefficients after clearing denominators
        for _, c in data["num"] + data["den"]:
            assert Fraction(c).denominator == 1
        assert data["str"] == str(s)


def test_poly_roundtrip(labels):
    d = labels.datum
    p = LaurentPoly.monomial(labels, d.simple_roots[0],
                             labels.field.q_power(Fraction(1, 2))) \
        + LaurentPoly.one(labels).scale(labels.field.from_fraction(-2))
    back = poly_from_json(labels, poly_to_json(p))
    assert back == p


def test_rational_roundtrip(labels):
    c = c_function(labels, labels.datum.affine_simples[1])
    back = rational_from_json(labels, rational_to_json(c))
    assert (back - c).is_zero()
    assert len(back.den) == len(c.den)


def test_diffop_roundtrip(labels):
    mo = MacdonaldOperator(labels, special_coweights(labels.datum)[0][1])
    data = diffop_to_json(mo.op)
    back = diffop_from_json(labels, data)
    assert back == mo.op
