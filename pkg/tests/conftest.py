"""Shared fixtures: the reference fields and seeded random element factories."""

import random
from fractions import Fraction

import pytest

from fieldlab import NumberField, UPoly, make_field, parse_poly

# Defining polynomials exercised throughout the suite.  Degrees 2..4 cover
# quadratic, non-Galois cubic, and three flavors of quartic Galois group
# (Klein four twice, cyclic once).
REFERENCE_POLYS = [
    "x^2+1",
    "x^2-2",
    "x^3-2",
    "x^3-x-1",
    "x^4-10*x^2+1",
    "x^4+x^3+x^2+x+1",
    "x^4+1",
]

GALOIS_POLYS = ["x^2+1", "x^2-2", "x^4-10*x^2+1", "x^4+x^3+x^2+x+1", "x^4+1"]


def field(text: str) -> NumberField:
    return make_field(parse_poly(text))


@pytest.fixture(scope="session")
def reference_fields():
    return [field(t) for t in REFERENCE_POLYS]


@pytest.fixture(scope="session")
def galois_fields():
    return [field(t) for t in GALOIS_POLYS]


@pytest.fixture
def qi():
    return field("x^2+1")


def random_rational(rng: random.Random, span: int = 20) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_elem(E: NumberField, rng: random.Random, span: int = 20):
    return E.element([random_rational(rng, span) for _ in range(E.degree)])


def random_nonzero_elem(E: NumberField, rng: random.Random, span: int = 20):
    while True:
        a = random_elem(E, rng, span)
        if not a.is_zero:
            return a


def random_upoly(rng: random.Random, max_deg: int = 6, span: int = 9) -> UPoly:
    deg = rng.randint(0, max_deg)
    coeffs = [random_rational(rng, span) for _ in range(deg + 1)]
    return UPoly(coeffs)
