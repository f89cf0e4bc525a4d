"""Pfaffian-valued psi functions on increasing index sequences.

``psi_seq`` assigns an integer to every strictly increasing sequence drawn
from {1..n}: the empty sequence gives 1, singletons give powers of two, pairs
give binomial partial sums, and longer sequences give the Pfaffian of the
skew matrix of pair values (bordered by the singleton values when the length
is odd). ``p_alpha`` evaluates the complement inside {1..n}, which is a
polynomial in n of degree equal to the weight of alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Union

from .exact import SkewMatrix, binomial, pfaffian


def psi_single(i: int) -> int:
    """psi of the singleton {i}: 2**(i-1)."""
    if i < 1:
        raise ValueError(f"psi_single requires i >= 1, got {i}")
    return 1 << (i - 1)


def psi_pair(i: int, j: int) -> int:
    """psi of the pair {i, j}: sum of C(i+j-2, k) for i <= k <= j-1."""
    if i < 1:
        raise ValueError(f"psi_pair requires i >= 1, got {i}")
    if i >= j:
        raise ValueError("psi_pair requires i < j")
    return sum(binomial(i + j - 2, k) for k in range(i, j))


@dataclass(frozen=True)
class Subsequence:
    """Strictly increasing tuple of indices inside the ambient set {1..n}."""

    entries: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"ambient bound must be >= 0, got {self.n}")
        prev = 0
        for e in self.entries:
            if e <= prev:
                raise ValueError(f"entries must be strictly increasing in [1, n], got {self.entries}")
            prev = e
        if self.entries and self.entries[-1] > self.n:
            raise ValueError(f"entry {self.entries[-1]} exceeds ambient bound {self.n}")

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def complement(self) -> "Subsequence":
        """The increasing sequence of elements of {1..n} not in this one."""
        inside = set(self.entries)
        return Subsequence(tuple(e for e in range(1, self.n + 1) if e not in inside), self.n)


@dataclass(frozen=True)
class PsiTable:
    """Precomputed singleton and pair psi values for indices up to n."""

    n: int
    singles: tuple[int, ...]
    pairs: tuple[tuple[int, ...], ...]

    def single(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} outside table range 1..{self.n}")
        return self.singles[i - 1]

    def pair(self, i: int, j: int) -> int:
        if i >= j:
            raise ValueError("psi_pair requires i < j")
        if not (1 <= i and j <= self.n):
            raise ValueError(f"indices ({i}, {j}) outside table range 1..{self.n}")
        return self.pairs[i - 1][j - 1]


@lru_cache(maxsize=None)
def psi_table(n: int) -> PsiTable:
    """Build (and cache) the psi lookup table for ambient bound n."""
    if n < 0:
        raise ValueError(f"psi_table requires n >= 0, got {n}")
    singles = tuple(psi_single(i) for i in range(1, n + 1))
    pairs = tuple(
        tuple(psi_pair(i, j) if i < j else 0 for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return PsiTable(n, singles, pairs)


SequenceLike = Union[Subsequence, Iterable[int]]


def _as_entries(alpha: SequenceLike) -> tuple[int, ...]:
    entries = tuple(alpha.entries if isinstance(alpha, Subsequence) else alpha)
    prev = 0
    for e in entries:
        if e <= prev:
            raise ValueError(f"entries must be strictly increasing and >= 1, got {entries}")
        prev = e
    return entries


def psi_seq(alpha: SequenceLike, table: Optional[PsiTable] = None) -> int:
    """psi of an increasing sequence: Pfaffian of its pair matrix.

    Even length r uses the r x r matrix of pair values; odd length borders it
    with a row and column of singleton values. The empty sequence gives 1.
    """
    entries = _as_entries(alpha)
    r = len(entries)
    if r == 0:
        return 1
    if table is None:
        table = psi_table(entries[-1])
    elif entries[-1] > table.n:
        raise ValueError(f"entry {entries[-1]} exceeds table range 1..{table.n}")
    if r == 1:
        return table.single(entries[0])
    if r % 2 == 0:
        skew = SkewMatrix.from_upper(r, lambda k, l: table.pair(entries[k], entries[l]))
    else:
        def upper(k: int, l: int) -> int:
            if k == 0:
                return table.single(entries[l - 1])
            return table.pair(entries[k - 1], entries[l - 1])

        skew = SkewMatrix.from_upper(r + 1, upper)
    return pfaffian(skew)


def p_alpha(alpha: SequenceLike, n: int) -> int:
    """psi of the complement of alpha inside {1..n}; 0 if alpha is not contained."""
    if n < 0:
        raise ValueError(f"p_alpha requires n >= 0, got {n}")
    entries = _as_entries(alpha)
    if entries and entries[-1] > n:
        return 0
    inside = set(entries)
    complement = tuple(e for e in range(1, n + 1) if e not in inside)
    return psi_seq(complement, psi_table(n))
