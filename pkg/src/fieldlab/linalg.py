"""Exact matrices over Q and over a number field, with one elimination kernel.

Row reduction uses deterministic pivoting (first nonzero entry in column
order), so ranks, solutions and kernels are bit-reproducible.  Determinants
over Q go through fraction-free Bareiss elimination on integerized rows;
determinants over a number field use Bareiss directly, inverting only the
previous pivot (lazy inversion, which is where a hidden factor of an
AssumedIrreducible polynomial would surface as ZeroDivisor).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Generic, Sequence, TypeVar

from .errors import DimensionMismatch
from .numberfield import FieldElem, NumberField

T = TypeVar("T")


class QMatrix:
    """Dense matrix over Q, row-major.

    Adding a rational to a square matrix means adding c*I: matrices form a
    Q-algebra and poly_eval relies on that embedding.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: Sequence[Sequence]):
        data = [[_frac(c) for c in row] for row in rows]
        if data and any(len(r) != len(data[0]) for r in data):
            raise DimensionMismatch("ragged rows")
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        self.entries = data

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.entries))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if self.rows != self.cols:
                raise DimensionMismatch("scalar embedding needs a square matrix")
            out = [list(r) for r in self.entries]
            for i in range(self.rows):
                out[i][i] += other
            return QMatrix(out)
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix addition shape mismatch")
        return QMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    __radd__ = __add__

    def __neg__(self):
        return QMatrix([[-c for c in r] for r in self.entries])

    def __sub__(self, other):
        return self + (-other if isinstance(other, QMatrix) else -_frac(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QMatrix([[c * other for c in r] for r in self.entries])
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            ot = list(zip(*other.entries))
            return QMatrix(
                [
                    [sum(a * b for a, b in zip(row, col)) for col in ot]
                    for row in self.entries
                ]
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def det(self) -> Fraction:
        return qmatrix_det(self)

    def column(self, j: int) -> list[Fraction]:
        return [self.entries[i][j] for i in range(self.rows)]

    def __repr__(self):
        return f"QMatrix({self.entries!r})"


class EMatrix:
    """Dense matrix with entries in one number field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: NumberField, rows: Sequence[Sequence[FieldElem]]):
        data = [list(row) for row in rows]
        if data and any(len(r) != len(data[0]) for r in data):
            raise DimensionMismatch("ragged rows")
        for row in data:
            for e in row:
                field._check_same(e.parent)
        self.field = field
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        self.entries = data

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def det(self) -> FieldElem:
        return field_det(self.entries, self.field.zero(), self.field.one())

    def __repr__(self):
        return f"EMatrix({self.rows}x{self.cols} over {self.field!r})"


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


@dataclass
class SolveResult(Generic[T]):
    """Outcome of rank_and_solve: rank, one solution of M x = rhs (free
    variables pinned to zero; None if inconsistent or no rhs given), and a
    kernel basis (one vector per free column, deterministic order)."""

    rank: int
    solution: list[T] | None
    kernel: list[list[T]]


def rank_and_solve(matrix, rhs=None) -> SolveResult:
    """Exact elimination over Q (QMatrix) or over a number field (EMatrix)."""
    if isinstance(matrix, QMatrix):
        rows = [list(r) for r in matrix.entries]
        zero, one = Fraction(0), Fraction(1)
    elif isinstance(matrix, EMatrix):
        rows = [list(r) for r in matrix.entries]
        zero, one = matrix.field.zero(), matrix.field.one()
    else:
        raise TypeError("rank_and_solve expects a QMatrix or EMatrix")
    ncols = len(rows[0]) if rows else 0
    if rhs is not None:
        rhs = list(rhs)
        if len(rhs) != len(rows):
            raise DimensionMismatch("rhs length does not match row count")
    return _solve(rows, ncols, rhs, zero, one)


def _solve(rows, ncols, rhs, zero, one) -> SolveResult:
    work = [list(r) for r in rows]
    b = list(rhs) if rhs is not None else None
    pivots: list[tuple[int, int]] = []  # (row, col)
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            work[r], work[pivot_row] = work[pivot_row], work[r]
            if b is not None:
                b[r], b[pivot_row] = b[pivot_row], b[r]
        pv = work[r][c]
        for i in range(len(work)):
            if i != r and work[i][c] != zero:
                factor = work[i][c] / pv
                for j in range(c, ncols):
                    work[i][j] = work[i][j] - factor * work[r][j]
                if b is not None:
                    b[i] = b[i] - factor * b[r]
        pivots.append((r, c))
        r += 1
        if r == len(work):
            break
    rank = len(pivots)

    solution = None
    if b is not None:
        consistent = all(b[i] == zero for i in range(rank, len(work)))
        if consistent:
            solution = [zero] * ncols
            for (pr, pc) in pivots:
                solution[pc] = b[pr] / work[pr][pc]

    pivot_cols = {pc for _, pc in pivots}
    kernel = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for (pr, pc) in pivots:
            vec[pc] = -(work[pr][free] / work[pr][pc])
        kernel.append(vec)
    return SolveResult(rank=rank, solution=solution, kernel=kernel)


def matrix_rank(matrix) -> int:
    return rank_and_solve(matrix).rank


def qmatrix_det(m: QMatrix) -> Fraction:
    """Exact determinant: scale each row to integers, Bareiss, scale back."""
    if m.rows != m.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    work = []
    for row in m.entries:
        den = math.lcm(*(c.denominator for c in row))
        scale *= den
        work.append([int(c * den) for c in row])
    return Fraction(_bareiss_int(work), 1) / scale


def _bareiss_int(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pk - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def field_det(rows, zero, one):
    """Bareiss over a field given as nested lists; divisions are exact."""
    n = len(rows)
    if n == 0:
        return one
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("determinant of a non-square matrix")
    a = [list(r) for r in rows]
    sign = one
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            swap = next((i for i in range(k + 1, n) if a[i][k] != zero), None)
            if swap is None:
                return zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pk - a[i][k] * a[k][j]) / prev
            a[i][k] = zero
        prev = pk
    return sign * a[n - 1][n - 1]
