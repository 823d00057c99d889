"""Decidable characterizations: primitivity, separability, normality, density.

Primitivity of a is tested purely through deg(minpoly(a)) = n — no splitting
field is ever constructed.  Normality of a under a full automorphism group G
is the nonvanishing of det[(sigma tau)(a)], equivalently the conjugates of a
forming a Q-basis; both routes are implemented so each can serve as the
other's oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import FieldMismatch, InsufficientSample, NotGalois
from .galois import GaloisGroup, apply, conjugate_vector, galois_group
from .linalg import EMatrix, QMatrix, rank_and_solve
from .numberfield import FieldElem, NumberField
from .polynomials import UPoly, squarefree_part
from .representation import minpoly, trace, trace_gram


@dataclass(frozen=True)
class PrimitivityReport:
    element: FieldElem
    minpoly_degree: int
    squarefree: bool
    is_primitive: bool


@dataclass(frozen=True)
class SeparabilityReport:
    gram_det: Fraction
    nonzero_trace_power: int  # exponent i with trace(theta^i) != 0
    is_separable: bool


@dataclass(frozen=True)
class NormalReport:
    element: FieldElem
    det_value: FieldElem
    is_normal: bool


def is_primitive(E: NumberField, a: FieldElem) -> PrimitivityReport:
    """a generates E iff its minimal polynomial has full degree (and is
    squarefree, which is automatic in characteristic zero but still checked)."""
    E._check_same(a.parent)
    mp = minpoly(a)
    squarefree = squarefree_part(mp) == mp
    return PrimitivityReport(
        element=a,
        minpoly_degree=mp.degree,
        squarefree=squarefree,
        is_primitive=(mp.degree == E.degree and squarefree),
    )


def is_separable_ext(E: NumberField) -> SeparabilityReport:
    """Nondegeneracy of the trace form, with a one-line witness.

    Two equivalent tests run and must agree: det(trace_gram) != 0, and some
    power-basis element having nonzero trace (trace(1) = n already works in
    characteristic zero; the agreement assert keeps the general contract)."""
    gram = trace_gram(E)
    det = gram.det()
    witness = -1
    current = E.one()
    for i in range(E.degree):
        if trace(current) != 0:
            witness = i
            break
        current = current * E.gen()
    assert (det != 0) == (witness >= 0), "trace-form tests disagree"
    return SeparabilityReport(
        gram_det=det, nonzero_trace_power=witness, is_separable=det != 0
    )


def is_galois(E: NumberField, **options) -> bool:
    """True iff the automorphism count equals the degree; cross-checked by the
    conjugate vectors of the power basis spanning E^n."""
    try:
        G = galois_group(E, **options)
    except NotGalois:
        return False
    basis = []
    current = E.one()
    for _ in range(E.degree):
        basis.append(current)
        current = current * E.gen()
    rank = density_rank([conjugate_vector(G, b) for b in basis])
    assert rank == E.degree, "full group but conjugate vectors do not span"
    return True


def normal_det(G: GaloisGroup, a: FieldElem) -> FieldElem:
    """det of the |G| x |G| matrix with entry (i, j) = (sigma_i sigma_j)(a)."""
    if G.field != a.parent:
        raise FieldMismatch("element does not live in the group's field")
    conj = [apply(s, a) for s in G.elements]
    n = G.order
    matrix = EMatrix(G.field, [[conj[G.table[i][j]] for j in range(n)] for i in range(n)])
    return matrix.det()


def is_normal_generator(G: GaloisGroup, a: FieldElem) -> NormalReport:
    """a's conjugate orbit is a Q-basis iff the group determinant is nonzero."""
    det = normal_det(G, a)
    return NormalReport(element=a, det_value=det, is_normal=not det.is_zero)


def conjugate_rank(G: GaloisGroup, a: FieldElem) -> int:
    """Rank over Q of the coefficient matrix of the conjugates of a; the
    independent oracle for is_normal_generator (rank n iff normal)."""
    conj = conjugate_vector(G, a)
    return rank_and_solve(QMatrix([list(c.coeffs) for c in conj])).rank


def density_rank(vectors) -> int:
    """Rank over E of a set of vectors in E^n: the dimension of the Zariski
    closure of their Q-span."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return 0
    parent = vectors[0][0].parent
    for v in vectors:
        for entry in v:
            parent._check_same(entry.parent)
    return rank_and_solve(EMatrix(parent, vectors)).rank


def _monomials(m: int, d: int) -> list[tuple[int, ...]]:
    # exponent vectors with total degree <= d, graded lexicographic
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, slots: int) -> None:
        if slots == 0:
            out.append(prefix)
            return
        for e in range(remaining + 1):
            rec(prefix + (e,), remaining - e, slots - 1)

    for total in range(d + 1):
        start = len(out)
        rec((), total, m)
        out[start:] = [v for v in out[start:] if sum(v) == total]
    return out


def no_low_degree_relation(points, d: int) -> bool:
    """True iff no nonzero polynomial of total degree <= d vanishes on all
    the points: the monomial evaluation matrix has full column rank."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if not pts:
        raise InsufficientSample(1, 0)
    m = len(pts[0])
    monos = _monomials(m, d)
    needed = comb(m + d, d)
    assert len(monos) == needed
    if len(pts) < needed:
        raise InsufficientSample(needed, len(pts))
    rows = []
    for p in pts:
        row = []
        for expo in monos:
            val = Fraction(1)
            for base, e in zip(p, expo):
                val *= base ** e
            row.append(val)
        rows.append(row)
    return rank_and_solve(QMatrix(rows)).rank == needed
