"""Exact univariate polynomial arithmetic, gcd, and rational reconstruction."""

import random
from fractions import Fraction
from math import gcd

import pytest

from fieldlab import (
    BoundTooLargeForModulus,
    ModPoly,
    UPoly,
    ZeroPolynomial,
    mod_is_irreducible,
    poly_eval,
    poly_gcd,
    rational_reconstruct,
    squarefree_part,
)
from conftest import random_upoly


def P(*coeffs) -> UPoly:
    """Ascending-order constructor shorthand."""
    return UPoly([Fraction(c) for c in coeffs])


# ---------------------------------------------------------------------------
# construction and basic queries
# ---------------------------------------------------------------------------


def test_trailing_zeros_normalized():
    assert P(1, 2, 0, 0) == P(1, 2)
    assert P(0, 0).is_zero
    assert P().degree == -1


def test_monomial_and_x():
    assert UPoly.x() == P(0, 1)
    assert UPoly.monomial(3, 5) == P(0, 0, 0, 5)
    assert UPoly.monomial(0, 1) == P(1)


def test_leading_and_coeff():
    p = P(1, 0, -10, 0, 1)
    assert p.degree == 4
    assert p.leading == 1
    assert p.coeff(2) == -10
    assert p.coeff(99) == 0


# ---------------------------------------------------------------------------
# ring axioms on random triples
# ---------------------------------------------------------------------------


def test_ring_axioms_500_triples():
    rng = random.Random(500)
    for _ in range(500):
        a = random_upoly(rng)
        b = random_upoly(rng)
        c = random_upoly(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a - a == UPoly()
        assert a * UPoly([1]) == a


def test_division_identity():
    rng = random.Random(7)
    for _ in range(100):
        a = random_upoly(rng, max_deg=8)
        b = random_upoly(rng, max_deg=5)
        if b.is_zero:
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(P(1, 1), UPoly())


def test_pow():
    assert P(1, 1) ** 2 == P(1, 2, 1)
    assert P(0, 1) ** 5 == UPoly.monomial(5)
    assert P(2, 3) ** 0 == P(1)


# ---------------------------------------------------------------------------
# gcd
# ---------------------------------------------------------------------------


def test_gcd_common_factor():
    # x^2-1 = (x-1)(x+1), x^2-2x+1 = (x-1)^2
    assert poly_gcd(P(-1, 0, 1), P(1, -2, 1)) == P(-1, 1)


def test_gcd_coprime():
    assert poly_gcd(P(1, 0, 1), P(0, 2)) == P(1)


def test_gcd_with_zero():
    p = P(2, 4)
    assert poly_gcd(p, UPoly()) == p.monic()
    assert poly_gcd(UPoly(), p) == p.monic()


def test_gcd_divides_both_and_monic():
    rng = random.Random(11)
    for _ in range(100):
        p = random_upoly(rng, max_deg=5)
        q = random_upoly(rng, max_deg=5)
        if p.is_zero and q.is_zero:
            continue
        g = poly_gcd(p, q)
        assert g.leading == 1
        if not p.is_zero:
            assert p % g == UPoly()
        if not q.is_zero:
            assert q % g == UPoly()


def test_gcd_detects_planted_factor():
    rng = random.Random(13)
    for _ in range(50):
        common = random_upoly(rng, max_deg=3)
        if common.degree < 1:
            continue
        p = common * random_upoly(rng, max_deg=3)
        q = common * random_upoly(rng, max_deg=3)
        if p.is_zero or q.is_zero:
            continue
        g = poly_gcd(p, q)
        assert g % common.monic() == UPoly()


# ---------------------------------------------------------------------------
# squarefree part
# ---------------------------------------------------------------------------


def test_squarefree_part_examples():
    # x^3-3x+2 = (x-1)^2 (x+2)
    assert squarefree_part(P(2, -3, 0, 1)) == P(-2, 1, 1).monic()
    assert squarefree_part(P(1, 0, 1)) == P(1, 0, 1)
    assert squarefree_part(P(7)) == P(1)


def test_squarefree_part_is_squarefree_and_divides():
    rng = random.Random(17)
    for _ in range(60):
        base = random_upoly(rng, max_deg=3)
        if base.degree < 1:
            continue
        p = base * base * random_upoly(rng, max_deg=2)
        if p.is_zero:
            continue
        s = squarefree_part(p)
        assert poly_gcd(s, s.derivative()) == P(1)
        assert p % s == UPoly()


def test_squarefree_part_of_zero():
    with pytest.raises(ZeroPolynomial):
        squarefree_part(UPoly())


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def test_poly_eval_rational_point():
    assert poly_eval(P(1, 0, 1), 2) == 5
    assert P(1, 0, 1)(Fraction(1, 2)) == Fraction(5, 4)


def test_poly_eval_horner_matches_sum():
    rng = random.Random(19)
    for _ in range(50):
        p = random_upoly(rng)
        t = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        expected = sum(p.coeff(i) * t**i for i in range(p.degree + 1))
        assert p(t) == expected


# ---------------------------------------------------------------------------
# rational reconstruction
# ---------------------------------------------------------------------------


def test_reconstruct_examples():
    # 2*3 = 6 = -1 mod 7
    assert rational_reconstruct(3, 7, 2) == Fraction(-1, 2)
    # 2*51 = 102 = 1 mod 101
    assert rational_reconstruct(51, 101, 10) == Fraction(1, 2)
    # residue already within the bound
    assert rational_reconstruct(2, 101, 10) == Fraction(2)


def test_reconstruct_round_trip_200():
    rng = random.Random(23)
    done = 0
    while done < 200:
        m = rng.randrange(10**6, 10**7)
        bound = rng.randrange(2, 500)
        if 2 * bound * bound >= m:
            continue
        n = rng.randrange(-bound, bound + 1)
        d = rng.randrange(1, bound + 1)
        g = gcd(abs(n), d)
        n, d = (n // g, d // g) if g else (0, 1)
        if gcd(d, m) != 1:
            continue
        residue = n * pow(d, -1, m) % m
        assert rational_reconstruct(residue, m, bound) == Fraction(n, d)
        done += 1


def test_reconstruct_none_when_no_small_fraction():
    # 10 is the only residue here; bound 2 admits n/d with |n|,d <= 2 and
    # none of those hit 10 mod 101
    assert rational_reconstruct(10, 101, 2) is None


def test_reconstruct_degenerate_bound():
    with pytest.raises(BoundTooLargeForModulus):
        rational_reconstruct(3, 7, 0)
    with pytest.raises(BoundTooLargeForModulus):
        rational_reconstruct(3, 7, 4)  # 2*4 >= 7: candidates collide mod 7


def test_reconstruct_uniqueness_scan_region():
    # 2*bound^2 >= m but 2*bound < m: the scan path must agree with a
    # brute-force search over all admissible fractions
    m, bound = 101, 10
    for residue in range(m):
        hits = set()
        for d in range(1, bound + 1):
            if gcd(d, m) != 1:
                continue
            for n in range(-bound, bound + 1):
                if gcd(abs(n), d) in (0, 1) and n % m == residue * d % m:
                    hits.add(Fraction(n, d))
        got = rational_reconstruct(residue, m, bound)
        if len(hits) == 1:
            assert got == next(iter(hits))
        elif not hits:
            assert got is None


# ---------------------------------------------------------------------------
# modular polynomials
# ---------------------------------------------------------------------------


def test_modpoly_arithmetic():
    f = ModPoly(5, [1, 0, 1])  # x^2+1 mod 5, splits as (x-2)(x-3)
    x = ModPoly(5, [0, 1])
    assert (x * x + ModPoly(5, [1])) % f == ModPoly(5, [])
    assert x.powmod(5, f) == x % f  # split f: Frobenius fixes residues


def test_modpoly_powmod_matches_repeated_mul():
    rng = random.Random(29)
    for _ in range(30):
        p = 7
        f = ModPoly(p, [rng.randrange(p) for _ in range(4)] + [1])
        g = ModPoly(p, [rng.randrange(p) for _ in range(4)])
        e = rng.randrange(1, 30)
        acc = ModPoly(p, [1])
        for _ in range(e):
            acc = (acc * g) % f
        assert g.powmod(e, f) == acc


def test_mod_irreducibility():
    assert mod_is_irreducible(ModPoly(3, [1, 0, 1]))  # -1 non-residue mod 3
    assert not mod_is_irreducible(ModPoly(5, [1, 0, 1]))  # 2^2 = -1 mod 5
    assert not mod_is_irreducible(ModPoly(2, [1, 0, 1]))  # (x+1)^2


def test_x4_plus_1_reducible_mod_every_small_prime():
    # classic: x^4+1 factors mod every prime though irreducible over Q
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]:
        assert not mod_is_irreducible(ModPoly(p, [1, 0, 0, 0, 1]))


def test_from_upoly_rejects_bad_denominator():
    with pytest.raises(ValueError):
        ModPoly.from_upoly(UPoly([Fraction(1, 5), Fraction(1)]), 5)
