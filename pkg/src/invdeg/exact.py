"""Exact integer kernels: binomial coefficients and Pfaffians of skew matrices.

Everything here returns arbitrary-precision ``int``; there is no fixed-width
fast path. Intermediate divisions run over ``fractions.Fraction`` and are
checked to cancel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union


class InvariantViolation(RuntimeError):
    """A computed value broke a structural guarantee of the model."""


def binomial(a: int, b: int) -> int:
    """C(a, b), extended by 0 when b < 0 or b > a."""
    if a < 0:
        raise ValueError(f"binomial requires a >= 0, got a={a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class SkewMatrix:
    """Square antisymmetric integer matrix (zero diagonal forced)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = len(self.rows)
        for row in self.rows:
            if len(row) != k:
                raise ValueError("matrix is not square")
        for i in range(k):
            if self.rows[i][i] != 0:
                raise ValueError("matrix is not antisymmetric: nonzero diagonal")
            for j in range(i + 1, k):
                if self.rows[i][j] != -self.rows[j][i]:
                    raise ValueError("matrix is not antisymmetric")

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SkewMatrix":
        """Validate and freeze a square antisymmetric array."""
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_upper(cls, size: int, upper) -> "SkewMatrix":
        """Build from ``upper(i, j)`` giving the entries above the diagonal."""
        rows = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                v = int(upper(i, j))
                rows[i][j] = v
                rows[j][i] = -v
        return cls(tuple(tuple(row) for row in rows))


MatrixLike = Union[SkewMatrix, Sequence[Sequence[int]]]


def _coerce(matrix: MatrixLike) -> SkewMatrix:
    if isinstance(matrix, SkewMatrix):
        return matrix
    return SkewMatrix.from_rows(matrix)


def pfaffian(matrix: MatrixLike) -> int:
    """Pfaffian of an even-size skew matrix via congruence elimination.

    Column/row shears preserve the Pfaffian and a paired swap negates it, so
    the result is the signed product of the 2x2 block pivots. Runs over
    Fraction; the result of an integer input is asserted integral.
    """
    skew = _coerce(matrix)
    k = skew.size
    if k % 2:
        raise ValueError("pfaffian requires even dimension")
    if k == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in skew.rows]
    sign = 1
    prod = Fraction(1)
    for i in range(0, k, 2):
        p = next((j for j in range(i + 1, k) if a[i][j]), None)
        if p is None:
            return 0
        if p != i + 1:
            a[i + 1], a[p] = a[p], a[i + 1]
            for row in a:
                row[i + 1], row[p] = row[p], row[i + 1]
            sign = -sign
        pivot = a[i][i + 1]
        prod *= pivot
        for col in range(i + 2, k):
            f = a[i][col] / pivot
            if f:
                for r in range(k):
                    a[r][col] -= f * a[r][i + 1]
                row_c, row_s = a[col], a[i + 1]
                for c in range(k):
                    row_c[c] -= f * row_s[c]
        for col in range(i + 2, k):
            g = a[i + 1][col] / a[i + 1][i]
            if g:
                for r in range(k):
                    a[r][col] -= g * a[r][i]
                row_c, row_s = a[col], a[i]
                for c in range(k):
                    row_c[c] -= g * row_s[c]
    result = sign * prod
    if result.denominator != 1:
        raise InvariantViolation(f"pfaffian of an integer matrix must be integral, got {result}")
    return int(result)


def pfaffian_reference(matrix: MatrixLike) -> int:
    """Naive Pfaffian by expansion along the first index (oracle, O((k-1)!!))."""
    skew = _coerce(matrix)
    k = skew.size
    if k % 2:
        raise ValueError("pfaffian requires even dimension")
    rows = skew.rows

    def expand(active: tuple[int, ...]) -> int:
        if not active:
            return 1
        first = active[0]
        total = 0
        sign = 1
        for pos in range(1, len(active)):
            entry = rows[first][active[pos]]
            if entry:
                rest = active[1:pos] + active[pos + 1:]
                total += sign * entry * expand(rest)
            sign = -sign
        return total

    return expand(tuple(range(k)))
