"""The extension E = Q[x]/(f) and exact arithmetic in its power basis.

A ``NumberField`` is defined by a monic squarefree f with no rational root
(degree >= 2) and carries an irreducibility certificate: either f was shown
irreducible modulo some small prime (which proves irreducibility over Q),
or it is ``AssumedIrreducible`` and any hidden factor of f will surface
later as a ``ZeroDivisor`` witness during inversion.  Full factorization
over Q is deliberately out of scope.

Elements are coefficient vectors in the power basis 1, theta, ...,
theta**(n-1); all arithmetic is exact and all values immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ConstantPolynomial,
    DivisionByZero,
    FieldMismatch,
    NotSquarefree,
    RationalRoot,
    ZeroDivisor,
)
from .polynomials import (
    ModPoly,
    UPoly,
    mod_is_irreducible,
    mod_is_squarefree,
    poly_gcd,
    primes_from,
)

DEFAULT_CERT_PRIME_BOUND = 200


@dataclass(frozen=True)
class CertifiedModP:
    """f mod prime is irreducible over GF(prime), hence f is irreducible over Q."""

    prime: int


@dataclass(frozen=True)
class AssumedIrreducible:
    """No modular certificate found; reducibility shows up lazily as ZeroDivisor."""


class NumberField:
    """E = Q[x]/(f) with f monic of degree n >= 1."""

    __slots__ = ("minpoly", "degree", "certificate", "_reduction_rows")

    def __init__(self, minpoly: UPoly, certificate):
        n = minpoly.degree
        self.minpoly = minpoly
        self.degree = n
        self.certificate = certificate
        # theta**(n+j) in the power basis, j = 0..n-2, for fast reduction
        rows = []
        if n >= 1:
            row = tuple(-c for c in minpoly.coeffs[:n])
            rows.append(row)
            for _ in range(n - 2):
                shifted = [Fraction(0)] + list(row[: n - 1])
                top = row[n - 1]
                row = tuple(
                    shifted[i] + top * rows[0][i] for i in range(n)
                )
                rows.append(row)
        self._reduction_rows = tuple(rows)

    # -- constructors -------------------------------------------------

    def element(self, coeffs: Iterable) -> "FieldElem":
        return FieldElem(self, coeffs)

    def from_rational(self, c) -> "FieldElem":
        return FieldElem(self, [c] + [0] * (self.degree - 1))

    def zero(self) -> "FieldElem":
        return self.from_rational(0)

    def one(self) -> "FieldElem":
        return self.from_rational(1)

    def gen(self) -> "FieldElem":
        """theta, the image of x.  In a degree-1 field this is a rational."""
        rem = UPoly.x() % self.minpoly
        return self.element([rem.coeff(i) for i in range(self.degree)])

    def reduce_poly(self, p: UPoly) -> "FieldElem":
        """The class of an arbitrary polynomial in E."""
        rem = p % self.minpoly
        return self.element([rem.coeff(i) for i in range(self.degree)])

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(("NumberField", self.minpoly))

    def __repr__(self):
        return f"NumberField({self.minpoly!r}, {self.certificate!r})"

    def _check_same(self, other: "NumberField"):
        if self is not other and self != other:
            raise FieldMismatch(f"{self!r} vs {other!r}")


class FieldElem:
    """Element of a NumberField as coordinates in the power basis."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: NumberField, coeffs: Iterable):
        cs = tuple(
            c if isinstance(c, Fraction) else Fraction(c) for c in coeffs
        )
        if len(cs) != parent.degree:
            raise ValueError(
                f"expected {parent.degree} coordinates, got {len(cs)}"
            )
        self.parent = parent
        self.coeffs = cs

    # -- structural ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_poly(self) -> UPoly:
        return UPoly(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.parent == other.parent and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.parent, self.coeffs))

    def __repr__(self):
        return f"FieldElem({list(self.coeffs)!r})"

    def __str__(self):
        from .parsing import format_elem

        return format_elem(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            self.parent._check_same(other.parent)
            return other
        if isinstance(other, (int, Fraction)):
            return self.parent.from_rational(other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(
            self.parent, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.parent, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(
            self.parent, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.parent, [c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = self.parent.degree
        a, b = self.coeffs, other.coeffs
        conv = [Fraction(0)] * (2 * n - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    conv[i + j] += ca * cb
        out = conv[:n]
        rows = self.parent._reduction_rows
        for j in range(n, 2 * n - 1):
            c = conv[j]
            if c:
                row = rows[j - n]
                for i in range(n):
                    out[i] += c * row[i]
        return FieldElem(self.parent, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return invert(self) ** (-e)
        result = self.parent.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return FieldElem(self.parent, [c / other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * invert(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * invert(self)


def invert(a: FieldElem) -> FieldElem:
    """a**-1 by the extended Euclidean algorithm on (rep(a), f).

    A gcd of positive degree < n is a proper factor of f: the field was
    built on an AssumedIrreducible polynomial that is actually reducible,
    reported as ZeroDivisor with the factor as witness.
    """
    if a.is_zero:
        raise DivisionByZero("inverse of zero")
    f = a.parent.minpoly
    r0, r1 = f, a.as_poly()
    t0, t1 = UPoly(), UPoly([1])
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, t0 - q * t1
    # r0 = gcd, t0 * rep(a) = r0 (mod f)
    if r0.degree > 0:
        raise ZeroDivisor(r0.monic())
    g = r0.coeffs[0]
    inv_poly = t0 * (1 / g)
    return a.parent.reduce_poly(inv_poly)


def make_field(
    f: UPoly, cert_prime_bound: int = DEFAULT_CERT_PRIME_BOUND
) -> NumberField:
    """Validate f and build E = Q[x]/(f).

    Rejects constants, non-squarefree polynomials (witness: gcd(f, f')) and
    degree >= 2 polynomials with a rational root (witness: the root).  Then
    scans primes up to cert_prime_bound for one modulo which f stays
    squarefree and irreducible; failing that the field is built with
    AssumedIrreducible.
    """
    if f.is_zero or f.degree < 1:
        raise ConstantPolynomial(f"cannot build a field on {f!r}")
    f = f.monic()
    g = poly_gcd(f, f.derivative())
    if g.degree > 0:
        raise NotSquarefree(g)
    if f.degree >= 2:
        root = _rational_root(f)
        if root is not None:
            raise RationalRoot(root)
    certificate = AssumedIrreducible()
    for p in primes_from(2):
        if p > cert_prime_bound:
            break
        try:
            fp = ModPoly.from_upoly(f, p)
        except ValueError:
            continue
        if fp.degree != f.degree or not mod_is_squarefree(fp):
            continue
        if mod_is_irreducible(fp):
            certificate = CertifiedModP(p)
            break
    return NumberField(f, certificate)


def _rational_root(f: UPoly) -> Fraction | None:
    """First rational root of monic f (rational-root test on the integer model)."""
    ints, _ = f.integerized()
    if ints[0] == 0:
        return Fraction(0)
    for num in sorted(_divisors(abs(ints[0]))):
        for den in sorted(_divisors(abs(ints[-1]))):
            if math.gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    return cand
    return None


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _force_field(f: UPoly) -> NumberField:
    """Build a field skipping all validation (test hook for the lazy
    ZeroDivisor path); f must still be non-constant."""
    if f.degree < 1:
        raise ConstantPolynomial(f"cannot build a field on {f!r}")
    return NumberField(f.monic(), AssumedIrreducible())
