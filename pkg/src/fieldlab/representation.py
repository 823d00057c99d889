"""Multiplication operators on a number field and the data they carry.

Everything here is a view of one object: the matrix of y -> a*y in the power
basis.  Trace and norm are its diagonal sum and determinant; the minimal
polynomial comes from the first linear dependency among powers of a, found by
exact elimination rather than a characteristic-polynomial routine.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import QMatrix, rank_and_solve
from .numberfield import FieldElem, NumberField
from .polynomials import UPoly


def regrep(a: FieldElem) -> QMatrix:
    """Matrix of multiplication by a; column j holds the coordinates of
    a*theta^j.  A ring homomorphism into n x n rational matrices."""
    E = a.parent
    n = E.degree
    theta = E.gen()
    cols = []
    current = a
    for _ in range(n):
        cols.append(current.coeffs)
        current = current * theta
    return QMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def trace(a: FieldElem) -> Fraction:
    """Sum of the conjugates of a, computed as the trace of regrep(a)."""
    return regrep(a).trace()


def norm(a: FieldElem) -> Fraction:
    """Product of the conjugates of a, computed as det(regrep(a))."""
    return regrep(a).det()


def minpoly(a: FieldElem) -> UPoly:
    """Monic minimal polynomial of a over Q.

    Searches for the first k with 1, a, ..., a^k linearly dependent; the
    dependency coefficients come straight out of exact elimination.
    """
    E = a.parent
    n = E.degree
    powers = [E.one().coeffs]
    current = E.one()
    for k in range(1, n + 1):
        current = current * a
        target = list(current.coeffs)
        matrix = QMatrix([[powers[j][i] for j in range(k)] for i in range(n)])
        res = rank_and_solve(matrix, target)
        if res.solution is not None:
            return UPoly([-c for c in res.solution] + [Fraction(1)])
        powers.append(current.coeffs)
    raise AssertionError("power basis has dimension n; unreachable")


def trace_gram(E: NumberField) -> QMatrix:
    """Gram matrix of the trace form on the power basis: G[i][j] =
    trace(theta^(i+j)).  Nonzero determinant certifies separability."""
    n = E.degree
    theta = E.gen()
    power_traces = []
    current = E.one()
    for _ in range(2 * n - 1):
        power_traces.append(trace(current))
        current = current * theta
    return QMatrix([[power_traces[i + j] for j in range(n)] for i in range(n)])
