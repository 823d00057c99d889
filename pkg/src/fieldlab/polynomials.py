"""Exact univariate polynomials over the rationals, plus modular images.

Representation conventions:

 - Rational scalars are ``fractions.Fraction`` (always reduced, positive
   denominator, zero is 0/1), re-exported here as ``Rat``.
 - ``UPoly`` stores a dense tuple of Fractions, index i = coefficient of
   x**i.  The leading coefficient is nonzero; the zero polynomial is the
   empty tuple.  Values are immutable and hashable.
 - ``ModPoly`` is the image of an integer-coefficient polynomial modulo a
   machine-word prime p (p < 2**62), used for irreducibility certificates
   and split-prime detection.  Precision is raised by lifting the exponent
   of p, never by switching to larger primes.

GCDs run on integerized primitive parts via pseudo-remainders, which keeps
intermediate coefficients from blowing up.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BoundTooLargeForModulus, ZeroPolynomial

Rat = Fraction

_MAX_MODPOLY_PRIME = 1 << 62


def _to_rat(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


class UPoly:
    """Dense univariate polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_to_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "UPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls) -> "UPoly":
        return cls.monomial(1)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(("UPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = UPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= c * oc
        return UPoly(quot), UPoly(rem[: other.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        lead = self.leading
        if lead == 1:
            return self
        return UPoly([c / lead for c in self.coeffs])

    def derivative(self) -> "UPoly":
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, point):
        return poly_eval(self, point)

    def integerized(self) -> tuple[list[int], Fraction]:
        """Return (integer coefficient list, scale) with self = scale * ints.

        The integer polynomial is primitive (content 1) with positive
        leading coefficient; the zero polynomial returns ([], 0).
        """
        if self.is_zero:
            return [], Fraction(0)
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        content = math.gcd(*ints)
        if ints[-1] < 0:
            content = -content
        return [c // content for c in ints], Fraction(content, den)

    def __repr__(self):
        return f"UPoly({list(self.coeffs)!r})"

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)

    @staticmethod
    def _coerce(other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly([other])
        return NotImplemented


def poly_eval(p: UPoly, point):
    """Horner evaluation of p at an element of any commutative Q-algebra.

    The point's type must support addition/multiplication among its own
    values and with Fractions, where scalar + value means the algebra
    embedding of the scalar (FieldElem and QMatrix both provide this).
    """
    acc = point * 0
    for c in reversed(p.coeffs):
        acc = acc * point + c
    return acc


def _prim_part(ints: Sequence[int]) -> list[int]:
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # a scaled by lc(b) per step, reduced mod b; stays over Z and agrees
    # with the classical pseudo-remainder up to an integer factor, which
    # the primitive part taken by the caller removes anyway.
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    while rem and len(rem) - 1 >= db:
        top = rem[-1]
        shift = len(rem) - 1 - db
        rem = [lead * c for c in rem]
        for j, bc in enumerate(b):
            rem[shift + j] -= top * bc
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def poly_gcd(p: UPoly, q: UPoly) -> UPoly:
    """Monic gcd over Q via a primitive pseudo-remainder sequence."""
    if p.is_zero and q.is_zero:
        return UPoly()
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    a, _ = p.integerized()
    b, _ = q.integerized()
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return UPoly([1])
        r = _int_pseudo_rem(a, b)
        a, b = b, (_prim_part(r) if r else [])
    return UPoly(a).monic()


def squarefree_part(p: UPoly) -> UPoly:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic()


def rational_reconstruct(residue: int, m: int, bound: int) -> Fraction | None:
    """Recover the unique n/d with |n| <= bound, 0 < d <= bound, gcd(d, m)=1
    and n = d*residue (mod m), or None if no such fraction exists.

    Half-extended Euclid on (m, residue).  Uniqueness is automatic when
    2*bound**2 < m; below that threshold a direct scan over denominators
    certifies uniqueness (cheap: only small bounds live in that regime).
    A bound with 2*bound >= m makes the symmetric residue range collapse
    and is rejected outright.
    """
    if m <= 0:
        raise ValueError("modulus must be positive")
    if bound < 1 or 2 * bound >= m:
        raise BoundTooLargeForModulus(
            f"need 1 <= bound < m/2, got bound={bound}, m={m}"
        )
    r = residue % m
    if 2 * bound * bound >= m:
        return _reconstruct_by_scan(r, m, bound)
    r0, r1 = m, r
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    return _verify_reconstruction(r1, t1, r, m, bound)


def _verify_reconstruction(num: int, den: int, r: int, m: int, bound: int) -> Fraction | None:
    if den == 0:
        return None
    if den < 0:
        num, den = -num, -den
    g = math.gcd(abs(num), den)
    if g > 1:
        num //= g
        den //= g
    if abs(num) > bound or den > bound or math.gcd(den, m) != 1:
        return None
    if (num - den * r) % m != 0:
        return None
    return Fraction(num, den)


def _reconstruct_by_scan(r: int, m: int, bound: int) -> Fraction | None:
    # 2*bound >= sqrt(2m) here, so the Euclid stopping rule no longer
    # guarantees uniqueness; enumerate denominators instead.
    found: Fraction | None = None
    for den in range(1, bound + 1):
        num = den * r % m
        if num > m - num:
            num -= m
        cand = _verify_reconstruction(num, den, r, m, bound)
        if cand is None:
            continue
        if found is None:
            found = cand
        elif cand != found:
            return None
    return found


def is_prime(n: int) -> bool:
    """Deterministic trial division; plenty for the word-size primes used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def primes_from(start: int):
    """Ascending primes >= start."""
    n = max(2, start)
    while True:
        if is_prime(n):
            yield n
        n += 1


class ModPoly:
    """Polynomial over GF(p), coefficients as residues in [0, p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int]):
        if p >= _MAX_MODPOLY_PRIME:
            raise ValueError("ModPoly primes must fit in a machine word (p < 2**62)")
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    @classmethod
    def from_upoly(cls, f: UPoly, p: int) -> "ModPoly":
        """Reduce f mod p; ValueError if a denominator is divisible by p."""
        out = []
        for c in f.coeffs:
            if c.denominator % p == 0:
                raise ValueError(f"denominator of {c} not invertible mod {p}")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return cls(p, out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, ModPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return ModPoly(self.p, out)

    def __sub__(self, other):
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = (out[i] - c) % self.p
        return ModPoly(self.p, out)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ModPoly(self.p, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return ModPoly(self.p, out)

    def __mod__(self, other):
        if other.is_zero:
            raise ZeroDivisionError("reduction modulo the zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        inv_lead = pow(other.coeffs[-1], -1, p)
        for k in range(len(rem) - len(other.coeffs), -1, -1):
            c = rem[k + other.degree] * inv_lead % p
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * oc) % p
        return ModPoly(p, rem[: other.degree])

    def monic(self) -> "ModPoly":
        if self.is_zero or self.coeffs[-1] == 1:
            return self
        inv = pow(self.coeffs[-1], -1, self.p)
        return ModPoly(self.p, [c * inv for c in self.coeffs])

    def derivative(self) -> "ModPoly":
        return ModPoly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def gcd(self, other: "ModPoly") -> "ModPoly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, modulus: "ModPoly") -> "ModPoly":
        result = ModPoly(self.p, [1])
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result

    def __call__(self, point: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * point + c) % self.p
        return acc

    def __repr__(self):
        return f"ModPoly(p={self.p}, coeffs={list(self.coeffs)})"


def mod_is_squarefree(f: ModPoly) -> bool:
    g = f.gcd(f.derivative())
    return g.degree == 0


def mod_is_irreducible(f: ModPoly) -> bool:
    """Rabin's test over GF(p) for monic-izable f of degree >= 1."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    p = f.p
    x = ModPoly(p, [0, 1])

    def frob_power(e: int) -> ModPoly:
        # x**(p**e) mod f
        g = x
        for _ in range(e):
            g = g.powmod(p, f)
        return g

    if frob_power(n) != x % f:
        return False
    for ell in _prime_divisors(n):
        if f.gcd(frob_power(n // ell) - x).degree != 0:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
