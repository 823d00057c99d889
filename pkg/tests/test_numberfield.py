"""Field construction, certificates, and exact element arithmetic."""

import random
from fractions import Fraction

import pytest

from fieldlab import (
    AssumedIrreducible,
    CertifiedModP,
    ConstantPolynomial,
    DivisionByZero,
    FieldMismatch,
    NotSquarefree,
    RationalRoot,
    UPoly,
    ZeroDivisor,
    make_field,
    parse_poly,
)
from fieldlab.numberfield import _force_field, invert
from conftest import field, random_elem, random_nonzero_elem


# ---------------------------------------------------------------------------
# construction and certificates
# ---------------------------------------------------------------------------


def test_make_field_certificate_mod_3():
    E = field("x^2+1")
    assert E.degree == 2
    assert isinstance(E.certificate, CertifiedModP)
    assert E.certificate.prime == 3


def test_make_field_rational_root():
    with pytest.raises(RationalRoot) as e:
        field("x^2-1")
    assert e.value.witness == 1


def test_make_field_degree_one():
    E = field("x-3")
    assert E.degree == 1
    assert E.gen() == E.from_rational(3)


def test_make_field_not_squarefree():
    with pytest.raises(NotSquarefree):
        field("x^2-2*x+1")


def test_make_field_constant():
    with pytest.raises(ConstantPolynomial):
        field("7")


def test_make_field_normalizes_to_monic():
    E = make_field(parse_poly("2*x^2+2"))
    assert E.minpoly == parse_poly("x^2+1")


def test_x4_plus_1_assumed_irreducible():
    E = field("x^4+1")
    assert isinstance(E.certificate, AssumedIrreducible)
    # it really is a field: inversion of a generic element succeeds
    a = E.element([1, 1, 0, 1])
    assert a * invert(a) == E.one()


def test_rational_root_found_for_cubic():
    with pytest.raises(RationalRoot) as e:
        make_field(parse_poly("x^3-x^2-4*x+4"))  # roots 1, 2, -2
    assert e.value.witness in (1, 2, -2)


# ---------------------------------------------------------------------------
# element arithmetic
# ---------------------------------------------------------------------------


def test_generator_satisfies_defining_relation():
    for text in ["x^2+1", "x^3-2", "x^4-10*x^2+1"]:
        E = field(text)
        th = E.gen()
        acc = E.zero()
        for i, c in enumerate(E.minpoly.coeffs):
            acc = acc + th**i * c
        assert acc.is_zero


def test_field_axioms_200_random_inverses(reference_fields):
    rng = random.Random(200)
    for E in reference_fields:
        for _ in range(200):
            a = random_nonzero_elem(E, rng)
            assert a * invert(a) == E.one()
            assert a / a == E.one()


def test_ring_axioms_random_triples(reference_fields):
    rng = random.Random(300)
    for E in reference_fields:
        for _ in range(40):
            a = random_elem(E, rng)
            b = random_elem(E, rng)
            c = random_elem(E, rng)
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            assert a * b == b * a


def test_invert_example_qi(qi):
    a = qi.element([1, 1])  # 1 + theta
    assert invert(a) == qi.element([Fraction(1, 2), Fraction(-1, 2)])


def test_invert_zero(qi):
    with pytest.raises(DivisionByZero):
        invert(qi.zero())


def test_zero_divisor_in_forced_field():
    E = _force_field(parse_poly("x^2-1"))
    with pytest.raises(ZeroDivisor) as e:
        invert(E.element([-1, 1]))  # theta - 1
    assert e.value.factor == parse_poly("x-1")


def test_rational_coercion(qi):
    a = qi.element([1, 2])
    assert a + 1 == qi.element([2, 2])
    assert 1 + a == qi.element([2, 2])
    assert a * Fraction(1, 2) == qi.element([Fraction(1, 2), 1])
    assert 3 - a == qi.element([2, -2])
    assert (qi.one() * 2) / 2 == qi.one()
    assert 1 / qi.element([0, 1]) == qi.element([0, -1])  # 1/i = -i


def test_pow_negative_and_zero(qi):
    th = qi.gen()
    assert th**0 == qi.one()
    assert th**4 == qi.one()
    assert th**-1 == qi.element([0, -1])
    assert th**-2 == -qi.one()


def test_reduction_beyond_degree():
    E = field("x^3-2")
    th = E.gen()
    assert th * th * th == E.from_rational(2)
    assert th**5 == E.element([0, 0, 2])  # theta^5 = 2 theta^2


def test_is_rational_and_is_zero(qi):
    assert qi.from_rational(5).is_rational
    assert not qi.gen().is_rational
    assert qi.zero().is_zero
    assert qi.element([0, 0]).is_zero


def test_field_mismatch():
    a = field("x^2+1").gen()
    b = field("x^2-2").gen()
    with pytest.raises(FieldMismatch):
        a + b


def test_reduce_poly(qi):
    p = parse_poly("x^3 + x + 1")  # theta^3 + theta + 1 = -theta + theta + 1
    assert qi.reduce_poly(p) == qi.one()


def test_str_rendering(qi):
    assert str(qi.element([Fraction(3, 5), Fraction(4, 5)])) == "3/5 + 4/5*θ"
    assert str(qi.zero()) == "0"
    assert str(qi.element([0, -1])) == "-θ"
