"""Height-ordered search for elements with certified properties.

The integer grid is dense enough: any finite set of "bad" polynomial
conditions misses infinitely many grid points, so enumerating coefficient
vectors by height (max absolute coordinate) and testing exactly is a
complete procedure.  Everything emitted carries a certificate that tests can
re-verify from scratch; nothing is trusted from the search itself.

Candidate testing can fan out over a thread pool in fixed-size batches, but
hits are committed strictly in enumeration order, so results are identical
for every thread count.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import lcm, isqrt
from typing import Callable, Iterator, Sequence

from .criteria import is_separable_ext, normal_det
from .errors import (
    ConstantPolynomial,
    HeightCapExceeded,
    NotAField,
    TrivialExtension,
)
from .galois import GaloisGroup, galois_group
from .numberfield import FieldElem, NumberField, make_field
from .polynomials import UPoly, poly_eval, squarefree_part
from .representation import minpoly, norm

DEFAULT_MAX_HEIGHT = 1000
_DRAWS_PER_HEIGHT = 50
_BATCH = 32


@dataclass(frozen=True)
class SearchConfig:
    """What to search for and how hard to try."""

    S: tuple[UPoly, ...]
    count: int
    max_height: int = DEFAULT_MAX_HEIGHT
    seed: int = 0
    mode: str = "deterministic"

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(self.S))
        if not self.S:
            raise ValueError("S must be a non-empty set of polynomials")
        for h in self.S:
            if h.degree < 1:
                raise ConstantPolynomial(f"constant polynomial in S: {h}")
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.max_height < 1:
            raise ValueError("max_height must be at least 1")
        if self.mode not in ("deterministic", "randomized"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class PerH:
    """Certificate for one polynomial of the search set at one hit."""

    h: UPoly
    value: FieldElem
    min_poly: UPoly
    normal_det: FieldElem | None


@dataclass(frozen=True)
class WitnessedElement:
    """A search hit together with everything needed to re-check it."""

    a: FieldElem
    per_h: tuple[PerH, ...]
    norm_value: Fraction | None


def _surface(n: int, h: int) -> Iterator[tuple[int, ...]]:
    # all integer vectors with max|c_i| = h exactly, lexicographic ascending
    vec = [0] * n

    def rec(i: int, reached: bool) -> Iterator[tuple[int, ...]]:
        if i == n - 1:
            values = range(-h, h + 1) if reached else (-h, h)
            for v in values:
                vec[i] = v
                yield tuple(vec)
            return
        for v in range(-h, h + 1):
            vec[i] = v
            yield from rec(i + 1, reached or abs(v) == h)

    yield from rec(0, False)


def enumerate_candidates(E: NumberField, cfg: SearchConfig) -> Iterator[FieldElem]:
    """Infinite-up-to-cap stream of non-rational integer-vector elements.

    Deterministic mode walks height surfaces 1, 2, ... in lexicographic
    order; randomized mode draws uniformly from the current height box,
    widening the box every fixed number of draws.  Raises HeightCapExceeded
    when a consumer outlives max_height.
    """
    n = E.degree
    if cfg.mode == "deterministic":
        for h in range(1, cfg.max_height + 1):
            for vec in _surface(n, h):
                if any(vec[1:]):
                    yield E.element(vec)
        raise HeightCapExceeded(cfg.max_height)
    rng = random.Random(cfg.seed)
    h = 1
    draws = 0
    while True:
        vec = tuple(rng.randint(-h, h) for _ in range(n))
        draws += 1
        if draws % _DRAWS_PER_HEIGHT == 0:
            h += 1
            if h > cfg.max_height:
                raise HeightCapExceeded(cfg.max_height)
        if any(vec[1:]):
            yield E.element(vec)


def _proj_key(coeffs) -> tuple:
    # canonical representative of the Q^x-orbit of a nonzero vector
    lead = next(c for c in coeffs if c != 0)
    return tuple(Fraction(c) / lead for c in coeffs)


def _hits(
    E: NumberField,
    cfg: SearchConfig,
    certify: Callable[[FieldElem], WitnessedElement | None],
    threads: int,
) -> Iterator[WitnessedElement]:
    # certified hits in stream order; duplicate candidates (randomized mode)
    # are dropped before testing, and a hit proportional to an earlier hit is
    # dropped at commit time so results are distinct mod Q^x.  Rejected
    # candidates get no such shortcut: h(c*a) and h(a) can differ in kind.
    stream = enumerate_candidates(E, cfg)
    seen: set[tuple] = set()
    hit_rays: set[tuple] = set()

    def fresh() -> Iterator[FieldElem]:
        for cand in stream:
            if cand.coeffs in seen:
                continue
            seen.add(cand.coeffs)
            yield cand

    def commit(w: WitnessedElement | None) -> WitnessedElement | None:
        if w is None:
            return None
        ray = _proj_key(w.a.coeffs)
        if ray in hit_rays:
            return None
        hit_rays.add(ray)
        return w

    if threads <= 1:
        for cand in fresh():
            w = commit(certify(cand))
            if w is not None:
                yield w
        return
    gen = fresh()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        while True:
            batch = list(islice(gen, _BATCH))
            for w in pool.map(certify, batch):
                w = commit(w)
                if w is not None:
                    yield w


def _collect(gen: Iterator[WitnessedElement], count: int) -> list[WitnessedElement]:
    out: list[WitnessedElement] = []
    try:
        for w in gen:
            out.append(w)
            if len(out) == count:
                return out
    except HeightCapExceeded as e:
        raise HeightCapExceeded(e.max_height, partial=tuple(out)) from None
    raise AssertionError("hit stream ended without raising; unreachable")


def _primitive_cert(E: NumberField, a: FieldElem) -> UPoly | None:
    # minpoly of a when a generates E, else None
    mp = minpoly(a)
    if mp.degree != E.degree or squarefree_part(mp) != mp:
        return None
    return mp


def search_primitive(
    E: NumberField, cfg: SearchConfig, threads: int = 1
) -> list[WitnessedElement]:
    """First count elements a with every h(a) a generator of E.

    Degree-1 fields short-circuit to 1, 2, ..., count: everything generates.
    """
    assert is_separable_ext(E).is_separable
    if E.degree == 1:
        out = []
        for k in range(1, cfg.count + 1):
            a = E.from_rational(k)
            per = tuple(
                PerH(h, poly_eval(h, a), minpoly(poly_eval(h, a)), None)
                for h in cfg.S
            )
            out.append(WitnessedElement(a, per, None))
        return out

    def certify(cand: FieldElem) -> WitnessedElement | None:
        per = []
        for h in cfg.S:
            value = poly_eval(h, cand)
            mp = _primitive_cert(E, value)
            if mp is None:
                return None
            per.append(PerH(h, value, mp, None))
        return WitnessedElement(cand, tuple(per), None)

    return _collect(_hits(E, cfg, certify, threads), cfg.count)


def distinct_mod_scalars(results: Sequence[FieldElem]) -> bool:
    """No two elements differ only by a rational factor (pairwise rank-2)."""
    from .linalg import QMatrix, rank_and_solve

    elems = list(results)
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            m = QMatrix([list(elems[i].coeffs), list(elems[j].coeffs)])
            if rank_and_solve(m).rank != 2:
                return False
    return True


def search_normal(
    E: NumberField, cfg: SearchConfig, threads: int = 1
) -> list[WitnessedElement]:
    """First count elements a with every h(a) both a generator and a normal
    generator (conjugate orbit a basis).  Requires a Galois field."""
    G = galois_group(E)
    if E.degree == 1:
        # every nonzero rational is a normal generator of Q over Q; the
        # candidate stream starts at degree 2, so walk k = 1, 2, ... directly
        out: list[WitnessedElement] = []
        k = 0
        while len(out) < cfg.count:
            k += 1
            a = E.from_rational(k)
            per = []
            for h in cfg.S:
                value = poly_eval(h, a)
                det = normal_det(G, value)
                if det.is_zero:  # h(k) = 0: this k fails the filter
                    break
                per.append(PerH(h, value, minpoly(value), det))
            if len(per) == len(cfg.S):
                out.append(WitnessedElement(a, tuple(per), None))
        return out

    def certify(cand: FieldElem) -> WitnessedElement | None:
        per = []
        for h in cfg.S:
            value = poly_eval(h, cand)
            mp = _primitive_cert(E, value)
            if mp is None:
                return None
            det = normal_det(G, value)
            if det.is_zero:
                return None
            per.append(PerH(h, value, mp, det))
        return WitnessedElement(cand, tuple(per), None)

    return _collect(_hits(E, cfg, certify, threads), cfg.count)


def _norm_one_engine(
    E: NumberField,
    count: int,
    group: GaloisGroup | None,
    max_height: int,
    seed: int,
    mode: str,
    threads: int,
) -> list[WitnessedElement]:
    # map search hits b to a = b^n / norm(b); keep the first count distinct a
    n = E.degree
    cfg = SearchConfig(
        S=(UPoly.monomial(n),), count=count,
        max_height=max_height, seed=seed, mode=mode,
    )

    def certify(cand: FieldElem) -> WitnessedElement | None:
        value = poly_eval(cfg.S[0], cand)
        mp = _primitive_cert(E, value)
        if mp is None:
            return None
        if group is not None and normal_det(group, value).is_zero:
            return None
        return WitnessedElement(cand, (PerH(cfg.S[0], value, mp, None),), None)

    out: list[WitnessedElement] = []
    seen: set[tuple] = set()
    try:
        for w in _hits(E, cfg, certify, threads):
            a = w.per_h[0].value / norm(w.a)
            if a.coeffs in seen:
                continue
            seen.add(a.coeffs)
            mp = minpoly(a)
            assert mp.degree == n
            norm_a = norm(a)
            assert norm_a == 1
            det = None
            if group is not None:
                det = normal_det(group, a)
                assert not det.is_zero
            out.append(
                WitnessedElement(a, (PerH(UPoly.x(), a, mp, det),), norm_a)
            )
            if len(out) == count:
                return out
    except HeightCapExceeded as e:
        raise HeightCapExceeded(e.max_height, partial=tuple(out)) from None
    raise AssertionError("hit stream ended without raising; unreachable")


def norm_one_primitive(
    E: NumberField,
    count: int,
    *,
    max_height: int = DEFAULT_MAX_HEIGHT,
    seed: int = 0,
    mode: str = "deterministic",
    threads: int = 1,
) -> list[WitnessedElement]:
    """count distinct generators of E with norm exactly 1, built as
    b^n / norm(b) from primitive search hits b."""
    if E.degree == 1:
        raise TrivialExtension("norm-one generators need degree at least 2")
    return _norm_one_engine(E, count, None, max_height, seed, mode, threads)


def norm_one_normal(
    E: NumberField,
    count: int,
    *,
    max_height: int = DEFAULT_MAX_HEIGHT,
    seed: int = 0,
    mode: str = "deterministic",
    threads: int = 1,
) -> list[WitnessedElement]:
    """count distinct elements that generate E, have norm 1, and whose
    conjugate orbit is a Q-basis; Galois fields only."""
    if E.degree == 1:
        raise TrivialExtension("norm-one generators need degree at least 2")
    G = galois_group(E)
    return _norm_one_engine(E, count, G, max_height, seed, mode, threads)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def pell_solutions(
    b,
    c,
    count: int,
    *,
    max_height: int = DEFAULT_MAX_HEIGHT,
    seed: int = 0,
    mode: str = "deterministic",
    threads: int = 1,
) -> list[tuple[Fraction, Fraction]]:
    """count distinct exact rational solutions of x^2 + bxy + cy^2 = 1.

    Solutions are norms: with theta a root of x^2 + bx + c, the element
    u + v*theta has norm u^2 - buv + cv^2, so norm-one elements give
    solutions (x, y) = (u, -v).  Requires b^2 - 4c to not be a rational
    square, otherwise the quadratic ring is not a field (NotAField carries
    the offending square root).
    """
    b = Fraction(b)
    c = Fraction(c)
    root = _rational_sqrt(b * b - 4 * c)
    if root is not None:
        raise NotAField(root)
    # clear denominators: theta' = lam*theta is a root of the monic integer
    # model x^2 + (lam*b) x + (lam^2*c)
    lam = lcm(b.denominator, c.denominator)
    E = make_field(UPoly([c * lam * lam, b * lam, 1]))

    def to_pair(w: WitnessedElement) -> tuple[Fraction, Fraction]:
        u, v_scaled = w.a.coeffs
        x, y = u, -v_scaled * lam
        assert x * x + b * x * y + c * y * y == 1
        return (x, y)

    try:
        hits = norm_one_primitive(
            E, count, max_height=max_height, seed=seed, mode=mode, threads=threads
        )
    except HeightCapExceeded as e:
        raise HeightCapExceeded(
            e.max_height, partial=tuple(to_pair(w) for w in e.partial)
        ) from None
    return [to_pair(w) for w in hits]
