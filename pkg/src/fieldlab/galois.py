"""Exact automorphisms of a number field via p-adic lifting.

An automorphism of E = Q[x]/(f) is determined by the image r of the
generator, and r must be a root of f in E.  The engine finds every such r:

  1. pick a prime p where f splits into n distinct linear factors,
  2. Hensel-lift the n roots to precision p^k,
  3. for each permutation hypothesis pi of the root labels, solve the
     Vandermonde congruence sum_i c_i m_t^i = m_pi(t) (mod p^k),
  4. rationally reconstruct the c_i and verify f(sum c_i theta^i) = 0 in E
     exactly.

Verification makes every accepted automorphism unconditionally correct; the
p-adic machinery is only a candidate generator.  Precision deepens (k
doubles) until two consecutive rounds agree and the count divides n, so a
miss would need an automorphism whose coefficient height jumps past two
doublings at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import (
    DegreeCapExceeded,
    FieldMismatch,
    NoSplitPrimeFound,
    NotGalois,
    PrecisionCapExceeded,
)
from .numberfield import FieldElem, NumberField
from .polynomials import ModPoly, UPoly, poly_eval, primes_from, rational_reconstruct

DEFAULT_DEGREE_CAP = 8
DEFAULT_PRIME_BOUND = 10_000
DEFAULT_PRECISION_CAP = 512
_START_PRECISION = 8


@dataclass(frozen=True)
class SplitPrimeData:
    """A fully split prime with its roots lifted to precision p^k."""

    field: NumberField
    p: int
    lifted_roots: tuple[int, ...]
    precision: int

    @property
    def modulus(self) -> int:
        return self.p ** self.precision


def find_split_prime(E: NumberField, bound: int = DEFAULT_PRIME_BOUND,
                     min_p: int = 2) -> SplitPrimeData:
    """Smallest prime p in [min_p, bound] at which f has n distinct roots.

    Split test: x^p = x mod (f, p) plus gcd(f, f') = 1 mod p, which together
    say f divides x^p - x with no repeated factor.  min_p exists so callers
    can force a second, independent prime.
    """
    f = E.minpoly
    for p in primes_from(min_p):
        if p > bound:
            raise NoSplitPrimeFound(bound)
        try:
            fp = ModPoly.from_upoly(f, p)
        except ValueError:
            continue  # a denominator of f vanishes mod p
        if fp.degree < E.degree:
            continue
        if fp.gcd(fp.derivative()).degree != 0:
            continue
        x = ModPoly(p, [0, 1])
        if x.powmod(p, fp) != x % fp:
            continue
        roots = tuple(t for t in range(p) if fp(t) == 0)
        if len(roots) != E.degree:
            continue
        return SplitPrimeData(E, p, roots, 1)
    raise NoSplitPrimeFound(bound)


def _coeffs_mod(f: UPoly, modulus: int) -> list[int]:
    out = []
    for c in f.coeffs:
        den = c.denominator % modulus
        out.append(c.numerator * pow(den, -1, modulus) % modulus)
    return out


def _eval_mod(coeffs: list[int], x: int, modulus: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % modulus
    return acc


def hensel_lift(data: SplitPrimeData, target_k: int) -> SplitPrimeData:
    """Newton-lift every root to precision p^target_k; no-op if already there."""
    if data.precision >= target_k:
        return data
    f = data.field.minpoly
    fprime = f.derivative()
    p = data.p
    k = data.precision
    roots = list(data.lifted_roots)
    while k < target_k:
        k *= 2
        modulus = p ** k
        fc = _coeffs_mod(f, modulus)
        fpc = _coeffs_mod(fprime, modulus)
        for i, r in enumerate(roots):
            fr = _eval_mod(fc, r, modulus)
            dfr = _eval_mod(fpc, r, modulus)
            roots[i] = (r - fr * pow(dfr, -1, modulus)) % modulus
    final = p ** target_k
    return SplitPrimeData(data.field, p, tuple(r % final for r in roots), target_k)


class Automorphism:
    """Field map determined by theta -> r where f(r) = 0; verified at birth."""

    __slots__ = ("parent", "r")

    def __init__(self, parent: NumberField, r: FieldElem):
        parent._check_same(r.parent)
        if not poly_eval(parent.minpoly, r).is_zero:
            raise ValueError("generator image is not a root of the defining polynomial")
        self.parent = parent
        self.r = r

    @property
    def is_identity(self) -> bool:
        return self.r == self.parent.gen()

    def __call__(self, a: FieldElem) -> FieldElem:
        return apply(self, a)

    def __eq__(self, other):
        if isinstance(other, Automorphism):
            return self.parent == other.parent and self.r.coeffs == other.r.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.parent, self.r.coeffs))

    def __repr__(self):
        return f"Automorphism(θ ↦ {self.r})"


def apply(s: Automorphism, a: FieldElem) -> FieldElem:
    """sigma(a): substitute sigma(theta) into the power-basis form of a."""
    if s.parent != a.parent:
        raise FieldMismatch("automorphism and element live in different fields")
    return poly_eval(a.as_poly(), s.r)


def compose(s: Automorphism, t: Automorphism) -> Automorphism:
    """s after t: theta -> s(t(theta))."""
    if s.parent != t.parent:
        raise FieldMismatch("cannot compose automorphisms of different fields")
    return Automorphism(s.parent, apply(s, t.r))


def _matinv_mod(v: list[list[int]], modulus: int, p: int) -> list[list[int]]:
    # v is invertible mod p, so a unit pivot always exists in each column
    n = len(v)
    work = [row[:] + [1 if i == j else 0 for j in range(n)]
            for i, row in enumerate(v)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if work[i][col] % p != 0)
        work[col], work[pivot] = work[pivot], work[col]
        inv = pow(work[col][col], -1, modulus)
        work[col] = [c * inv % modulus for c in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                factor = work[i][col]
                work[i] = [(a - factor * b) % modulus
                           for a, b in zip(work[i], work[col])]
    return [row[n:] for row in work]


def _root_label(aut: Automorphism, roots_mod_p: tuple[int, ...], p: int) -> int:
    res = 0
    for c in reversed(aut.r.coeffs):
        den = c.denominator % p
        res = (res * roots_mod_p[0] + c.numerator * pow(den, -1, p)) % p
    return roots_mod_p.index(res)


def automorphisms_with_diagnostics(
    E: NumberField,
    *,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    prime_bound: int = DEFAULT_PRIME_BOUND,
    min_prime: int = 2,
    precision_cap: int = DEFAULT_PRECISION_CAP,
) -> tuple[list[Automorphism], SplitPrimeData]:
    """All automorphisms in canonical order plus the split-prime data used."""
    n = E.degree
    if n > degree_cap:
        raise DegreeCapExceeded(n, degree_cap)
    identity = Automorphism(E, E.gen())
    if n == 1:
        base = find_split_prime(E, prime_bound, min_prime)
        return [identity], base
    base = find_split_prime(E, prime_bound, min_prime)
    found: dict[tuple, Automorphism] = {identity.r.coeffs: identity}
    achieved = {_root_label(identity, base.lifted_roots, base.p)}

    def absorb(aut: Automorphism) -> None:
        if aut.r.coeffs in found:
            return
        found[aut.r.coeffs] = aut
        achieved.add(_root_label(aut, base.lifted_roots, base.p))
        # close under composition; every product is again a root of f
        while True:
            existing = list(found.values())
            new = []
            for a in existing:
                for b in existing:
                    c = compose(a, b)
                    if c.r.coeffs not in found:
                        new.append(c)
            if not new:
                break
            for c in new:
                found[c.r.coeffs] = c
                achieved.add(_root_label(c, base.lifted_roots, base.p))

    data = base
    k = _START_PRECISION
    prev_sig: frozenset | None = None
    while True:
        data = hensel_lift(data, k)
        modulus = data.modulus
        roots = data.lifted_roots
        bound = math.isqrt((modulus - 1) // 2)
        vand = [[pow(m, i, modulus) for i in range(n)] for m in roots]
        vinv = _matinv_mod(vand, modulus, data.p)
        for pi in permutations(range(n)):
            if len(found) == n:
                break
            if pi[0] in achieved:
                continue
            rhs = [roots[pi[t]] for t in range(n)]
            residues = [sum(vinv[i][t] * rhs[t] for t in range(n)) % modulus
                        for i in range(n)]
            coeffs = []
            for res in residues:
                c = rational_reconstruct(res, modulus, bound)
                if c is None:
                    break
                coeffs.append(c)
            if len(coeffs) < n:
                continue
            candidate = E.element(coeffs)
            if not poly_eval(E.minpoly, candidate).is_zero:
                continue
            absorb(Automorphism(E, candidate))
        sig = frozenset(found.keys())
        if len(found) == n:
            break
        if sig == prev_sig and n % len(found) == 0:
            break
        prev_sig = sig
        k *= 2
        if k > precision_cap:
            raise PrecisionCapExceeded(
                f"automorphism reconstructions did not stabilize by p^{precision_cap}"
            )
    ordered = sorted(found.values(), key=lambda a: a.r.coeffs)
    ordered.remove(identity)
    return [identity] + ordered, data


def automorphisms(E: NumberField, **options) -> list[Automorphism]:
    """Every theta -> r with f(r) = 0, identity first, then lexicographic."""
    return automorphisms_with_diagnostics(E, **options)[0]


class GaloisGroup:
    """Automorphism group of a Galois field with its composition table.

    elements[0] is the identity; table[i][j] is the index of
    elements[i] composed with elements[j].
    """

    __slots__ = ("field", "elements", "table")

    def __init__(self, field: NumberField, elements: list[Automorphism]):
        self.field = field
        self.elements = tuple(elements)
        index = {a.r.coeffs: i for i, a in enumerate(self.elements)}
        self.table = tuple(
            tuple(index[compose(a, b).r.coeffs] for b in self.elements)
            for a in self.elements
        )

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"GaloisGroup(order {self.order} over {self.field!r})"


def galois_group(E: NumberField, **options) -> GaloisGroup:
    """The full group when E is Galois; NotGalois(count) otherwise."""
    auts = automorphisms(E, **options)
    if len(auts) != E.degree:
        raise NotGalois(len(auts))
    return GaloisGroup(E, auts)


def conjugate_vector(G: GaloisGroup, a: FieldElem) -> tuple[FieldElem, ...]:
    """(sigma(a)) over the group in canonical order; componentwise a ring map."""
    if G.field != a.parent:
        raise FieldMismatch("element does not live in the group's field")
    return tuple(apply(s, a) for s in G.elements)
