from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncschur.ncpoly import CPoly, CutoffMismatch, NCPoly

words = st.lists(st.integers(min_value=1, max_value=3), min_size=0, max_size=4).map(tuple)
coeffs = st.fractions(
    max_denominator=6,
    min_value=Fraction(-5),
    max_value=Fraction(5),
)
polys = st.dictionaries(words, coeffs, max_size=4).map(lambda d: NCPoly(3, d))


@given(polys, polys, polys)
@settings(max_examples=80, deadline=None)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (q + r) * p == q * p + r * p
    assert p + NCPoly.zero(3) == p
    assert p * NCPoly.one(3) == p
    assert NCPoly.one(3) * p == p
    assert p - p == NCPoly.zero(3)


@given(polys, polys)
@settings(max_examples=50, deadline=None)
def test_commutative_image_is_a_ring_map(p, q):
    assert (p * q).commutative_image() == p.commutative_image() * q.commutative_image()
    assert (p + q).commutative_image() == p.commutative_image() + q.commutative_image()


def test_noncommutativity():
    x1 = NCPoly.monomial(2, (1,))
    x2 = NCPoly.monomial(2, (2,))
    assert x1 * x2 != x2 * x1
    assert (x1 * x2).commutative_image() == (x2 * x1).commutative_image()


@given(polys)
@settings(max_examples=50, deadline=None)
def test_json_round_trip(p):
    assert NCPoly.from_json(p.to_json()) == p


def test_cutoff_mismatch():
    with pytest.raises(CutoffMismatch):
        NCPoly.one(2) + NCPoly.one(3)
    with pytest.raises(CutoffMismatch):
        CPoly.one(2) * CPoly.one(3)


def test_letter_validation():
    with pytest.raises(ValueError):
        NCPoly(2, {(3,): Fraction(1)})
    with pytest.raises(ValueError):
        CPoly(2, {(1,): Fraction(1)})


def test_zero_coefficients_dropped():
    p = NCPoly(2, {(1,): Fraction(0), (2,): Fraction(1)})
    assert p.terms == {(2,): Fraction(1)}
    assert not p.is_zero()
    assert (p - p).is_zero()
