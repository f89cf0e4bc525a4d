"""Symbolic certificates for the inverse-pairs variety.

Two generic symmetric n x n matrices X and Y are represented over exact
sparse polynomials in the variables X[i,j], Y[i,j] (i <= j). The ideal of
the inversion graph is generated by the off-diagonal entries of X*Y together
with the consecutive diagonal differences; this module builds those
generators, substitutes Y -> adjugate(X) to certify that they vanish on the
graph, checks the swap symmetry X <-> Y, checks that the generators plus the
(1,1) product entry span every entry of X*Y in bidegree (1,1), and produces
exact rational witness pairs of complementary rank with product zero.

Determinants and adjugates are computed division-free by dynamic programming
over column subsets, which works verbatim over int, Fraction, or polynomial
entries. Cost is O(2^k * k) ring operations, fine for the small symbolic
sizes used here and for numeric spot checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Union

from .exact import InvariantViolation


class VarId(NamedTuple):
    """One matrix variable; kind is "X" or "Y", indices are 1-based, row <= col."""

    kind: str
    row: int
    col: int

    def __str__(self) -> str:
        return f"{self.kind}[{self.row},{self.col}]"


def xvar(i: int, j: int) -> VarId:
    """Variable for entry (i, j) of the symmetric X, normalized to row <= col."""
    if i < 1 or j < 1:
        raise ValueError(f"matrix indices are 1-based, got ({i}, {j})")
    return VarId("X", min(i, j), max(i, j))


def yvar(i: int, j: int) -> VarId:
    """Variable for entry (i, j) of the symmetric Y, normalized to row <= col."""
    if i < 1 or j < 1:
        raise ValueError(f"matrix indices are 1-based, got ({i}, {j})")
    return VarId("Y", min(i, j), max(i, j))


Scalar = Union[int, Fraction]
Monomial = tuple[tuple[VarId, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    out: list[tuple[VarId, int]] = []
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        va, ea = a[ia]
        vb, eb = b[ib]
        if va == vb:
            out.append((va, ea + eb))
            ia += 1
            ib += 1
        elif va < vb:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


class SparsePoly:
    """Multivariate polynomial as a dict from sorted monomials to coefficients.

    Coefficients are int or Fraction and never zero; the zero polynomial has
    an empty dict. Mixed arithmetic with plain scalars is supported.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict[Monomial, Scalar]] = None):
        self.terms: dict[Monomial, Scalar] = {} if terms is None else terms

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "SparsePoly":
        return cls({(): c}) if c else cls()

    @classmethod
    def variable(cls, v: VarId) -> "SparsePoly":
        return cls({((v, 1),): 1})

    # ------------------------------------------------------------------ ring ops

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Union["SparsePoly", Scalar]) -> "SparsePoly":
        other = _as_poly(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            nc = out.get(mono, 0) + c
            if nc:
                out[mono] = nc
            elif mono in out:
                del out[mono]
        return SparsePoly(out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other: Union["SparsePoly", Scalar]) -> "SparsePoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Union["SparsePoly", Scalar]) -> "SparsePoly":
        return _as_poly(other) + (-self)

    def __mul__(self, other: Union["SparsePoly", Scalar]) -> "SparsePoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return SparsePoly()
            return SparsePoly({mono: c * other for mono, c in self.terms.items()})
        out: dict[Monomial, Scalar] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = _mono_mul(ma, mb)
                nc = out.get(mono, 0) + ca * cb
                if nc:
                    out[mono] = nc
                elif mono in out:
                    del out[mono]
        return SparsePoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "SparsePoly":
        if e < 0:
            raise ValueError("negative powers are not defined")
        out = SparsePoly.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparsePoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == SparsePoly.constant(other).terms
        return NotImplemented

    # --------------------------------------------------------------- structure

    def variables(self) -> set[VarId]:
        return {v for mono in self.terms for v, _ in mono}

    def bidegree(self) -> tuple[int, int]:
        """(X-degree, Y-degree) shared by every term; error if mixed or zero."""
        if not self.terms:
            raise ValueError("the zero polynomial has no bidegree")
        seen: Optional[tuple[int, int]] = None
        for mono in self.terms:
            dx = sum(e for v, e in mono if v.kind == "X")
            dy = sum(e for v, e in mono if v.kind == "Y")
            if seen is None:
                seen = (dx, dy)
            elif seen != (dx, dy):
                raise ValueError(f"polynomial is not bihomogeneous: {seen} vs {(dx, dy)}")
        return seen

    def substitute(self, assignment: Mapping[VarId, Union["SparsePoly", Scalar]]) -> "SparsePoly":
        """Replace every variable by its assigned polynomial or scalar."""
        for mono in self.terms:
            for v, _ in mono:
                if v not in assignment:
                    raise ValueError(f"missing variable in substitution: {v}")
        acc = SparsePoly.zero()
        for mono, coeff in sorted(self.terms.items()):
            term = SparsePoly.constant(coeff)
            for v, e in mono:
                term = term * (_as_poly(assignment[v]) ** e)
            acc = acc + term
        return acc

    def evaluate(self, assignment: Mapping[VarId, Scalar]) -> Scalar:
        """Exact value at a scalar point covering every variable."""
        total: Scalar = 0
        for mono, coeff in self.terms.items():
            v: Scalar = coeff
            for var, e in mono:
                if var not in assignment:
                    raise ValueError(f"missing variable in substitution: {var}")
                v *= assignment[var] ** e
            total += v
        return total

    def canonical(self) -> tuple[tuple[Monomial, Scalar], ...]:
        """Hashable sorted form, for set comparisons."""
        return tuple(sorted(self.terms.items()))

    def sign_normalized(self) -> "SparsePoly":
        """Self or its negative, making the lead coefficient positive."""
        if not self.terms:
            return self
        lead = max(self.terms)
        return -self if self.terms[lead] < 0 else self

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def term_key(item):
            mono, _ = item
            return (-sum(e for _, e in mono), mono)
        parts = []
        for mono, c in sorted(self.terms.items(), key=term_key):
            factors = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in mono)
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(factors)
            elif c == -1:
                parts.append(f"-{factors}")
            else:
                parts.append(f"{c}*{factors}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _as_poly(x: Union[SparsePoly, Scalar]) -> SparsePoly:
    if isinstance(x, SparsePoly):
        return x
    return SparsePoly.constant(x)


# ---------------------------------------------------------------- determinants

Entry = Union[SparsePoly, Scalar]


def determinant(rows: Sequence[Sequence[Entry]]):
    """Division-free determinant by DP over column subsets (any ring)."""
    k = len(rows)
    for row in rows:
        if len(row) != k:
            raise ValueError("matrix is not square")
    if k == 0:
        return 1
    full = (1 << k) - 1
    minors: list = [None] * (full + 1)
    minors[0] = 1
    for mask in range(1, full + 1):
        t = mask.bit_count()
        row = rows[t - 1]
        acc = 0
        flip = (t - 1) & 1
        c = 0
        rem = mask
        while rem:
            b = rem & -rem
            entry = row[b.bit_length() - 1]
            sub = minors[mask ^ b]
            if entry and sub:
                term = entry * sub
                acc = acc - term if (flip + c) & 1 else acc + term
            c += 1
            rem ^= b
        minors[mask] = acc
    return minors[full]


def adjugate(rows: Sequence[Sequence[Entry]]) -> list[list]:
    """Signed-minor adjugate; satisfies A * adj(A) = det(A) * Id (any ring)."""
    k = len(rows)
    for row in rows:
        if len(row) != k:
            raise ValueError("matrix is not square")
    if k == 0:
        return []
    if k == 1:
        return [[1]]
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            sub = [
                [rows[r][c] for c in range(k) if c != i]
                for r in range(k) if r != j
            ]
            minor = determinant(sub)
            out[i][j] = minor if (i + j) % 2 == 0 else -minor
    return out


# ------------------------------------------------------------ symbolic matrices

@dataclass(frozen=True)
class SymbolicMatrix:
    """Square matrix of sparse polynomials."""

    n: int
    entries: tuple[tuple[SparsePoly, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError(f"expected {self.n} x {self.n} entries")


def generic_sym_matrix(n: int, kind: str) -> SymbolicMatrix:
    """Symmetric matrix of fresh variables of the given kind ("X" or "Y")."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if kind not in ("X", "Y"):
        raise ValueError(f'kind must be "X" or "Y", got {kind!r}')
    make = xvar if kind == "X" else yvar
    entries = tuple(
        tuple(SparsePoly.variable(make(i + 1, j + 1)) for j in range(n))
        for i in range(n)
    )
    return SymbolicMatrix(n, entries)


def mat_mul(a: SymbolicMatrix, b: SymbolicMatrix) -> SymbolicMatrix:
    """Polynomial matrix product."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    n = a.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = SparsePoly.zero()
            for k in range(n):
                acc = acc + a.entries[i][k] * b.entries[k][j]
            row.append(acc)
        rows.append(tuple(row))
    return SymbolicMatrix(n, tuple(rows))


def det_sym(a: SymbolicMatrix) -> SparsePoly:
    """Determinant as a sparse polynomial."""
    return _as_poly(determinant(a.entries))


def adjugate_sym(a: SymbolicMatrix) -> SymbolicMatrix:
    """Adjugate as a polynomial matrix."""
    adj = adjugate(a.entries)
    return SymbolicMatrix(a.n, tuple(tuple(_as_poly(e) for e in row) for row in adj))


# ------------------------------------------------------------------- generators

def product_matrix(n: int) -> SymbolicMatrix:
    """X * Y for generic symmetric X and Y."""
    return mat_mul(generic_sym_matrix(n, "X"), generic_sym_matrix(n, "Y"))


def product_entries(n: int) -> list[SparsePoly]:
    """The n^2 entries of X * Y, row-major; their span cuts out product zero."""
    prod = product_matrix(n)
    return [prod.entries[i][j] for i in range(n) for j in range(n)]


def graph_ideal_generators(n: int) -> list[SparsePoly]:
    """Generators of the inversion-graph ideal: the n(n-1) off-diagonal
    entries of X * Y (row-major) plus the n - 1 consecutive diagonal
    differences."""
    prod = product_matrix(n).entries
    gens = [prod[i][j] for i in range(n) for j in range(n) if i != j]
    gens.extend(prod[i][i] - prod[i + 1][i + 1] for i in range(n - 1))
    return gens


def swap_sides(p: SparsePoly) -> SparsePoly:
    """Exchange the X and Y variables throughout."""
    out: dict[Monomial, Scalar] = {}
    for mono, c in p.terms.items():
        swapped = tuple(sorted((VarId("Y" if v.kind == "X" else "X", v.row, v.col), e) for v, e in mono))
        out[swapped] = out.get(swapped, 0) + c
    return SparsePoly({m: c for m, c in out.items() if c})


def swap_symmetry_holds(n: int) -> bool:
    """Generator set is stable (up to sign) under exchanging X and Y."""
    gens = {g.sign_normalized().canonical() for g in graph_ideal_generators(n)}
    swapped = {swap_sides(g).sign_normalized().canonical() for g in graph_ideal_generators(n)}
    return gens == swapped


def adjugate_identity_holds(n: int) -> bool:
    """Symbolic check that X * adj(X) = det(X) * Id and adj(X) is symmetric."""
    x = generic_sym_matrix(n, "X")
    adj = adjugate_sym(x)
    det = det_sym(x)
    for i in range(n):
        for j in range(n):
            if not adj.entries[i][j] == adj.entries[j][i]:
                return False
    prod = mat_mul(x, adj)
    for i in range(n):
        for j in range(n):
            expect = det if i == j else SparsePoly.zero()
            if not prod.entries[i][j] == expect:
                return False
    return True


# ------------------------------------------------------------- span comparison

def sparse_rank(vectors: Iterable[Mapping]) -> int:
    """Rank over the rationals of sparse coefficient vectors (dict keyed)."""
    basis: dict = {}
    rank = 0
    for vec in vectors:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while v:
            pivot = max(v)
            if pivot in basis:
                other = basis[pivot]
                scale = v[pivot] / other[pivot]
                for k, c in other.items():
                    nc = v.get(k, Fraction(0)) - scale * c
                    if nc:
                        v[k] = nc
                    elif k in v:
                        del v[k]
            else:
                basis[pivot] = v
                rank += 1
                break
    return rank


def spans_product_entries(n: int) -> bool:
    """Graph generators plus the (1,1) product entry span every entry of X*Y.

    All vectors live in the bidegree-(1,1) coefficient space, so span
    equality is three rank computations.
    """
    prods = product_entries(n)
    left = [g.terms for g in graph_ideal_generators(n)] + [prods[0].terms]
    right = [p.terms for p in prods]
    r_left = sparse_rank(left)
    r_right = sparse_rank(right)
    r_union = sparse_rank(left + right)
    return r_left == r_right == r_union


# ------------------------------------------------------- graph vanishing checks

@dataclass(frozen=True)
class VanishingReport:
    """Record of a completed graph-vanishing run (failures raise instead)."""

    n: int
    mode: str
    generators: int
    trials: int


def _random_symmetric(rng: random.Random, n: int) -> list[list[int]]:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = rng.randint(-10, 10)
            rows[i][j] = v
            rows[j][i] = v
    return rows


def _scalar_assignment(m: Sequence[Sequence[Scalar]], y: Sequence[Sequence[Scalar]]) -> dict[VarId, Scalar]:
    n = len(m)
    out: dict[VarId, Scalar] = {}
    for i in range(n):
        for j in range(i, n):
            out[xvar(i + 1, j + 1)] = m[i][j]
            out[yvar(i + 1, j + 1)] = y[i][j]
    return out


def verify_graph_vanishing(
    n: int,
    mode: str = "symbolic",
    trials: int = 100,
    seed: int = 0,
    symbolic_cap: int = 4,
    executor=None,
) -> VanishingReport:
    """Certify that every graph generator vanishes on pairs (M, adj M).

    Symbolic mode substitutes Y -> adjugate(X) into each generator and
    demands the zero polynomial; it is exponential in n and refuses to run
    past ``symbolic_cap`` unless the cap is raised. Numeric mode evaluates
    the generators on seeded random integer symmetric M with det != 0,
    exactly; trials fan out over ``executor`` when given, in deterministic
    order. A nonzero residual raises InvariantViolation naming the offending
    generator.
    """
    if mode not in ("symbolic", "numeric"):
        raise ValueError(f'mode must be "symbolic" or "numeric", got {mode!r}')
    gens = graph_ideal_generators(n)
    if mode == "symbolic":
        if n > symbolic_cap:
            raise ValueError(
                f"symbolic mode is capped at n <= {symbolic_cap}; raise symbolic_cap to override"
            )
        x = generic_sym_matrix(n, "X")
        adj = adjugate_sym(x)
        assignment: dict[VarId, Union[SparsePoly, Scalar]] = {}
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                assignment[xvar(i, j)] = SparsePoly.variable(xvar(i, j))
                assignment[yvar(i, j)] = adj.entries[i - 1][j - 1]
        for g in gens:
            if not g.substitute(assignment).is_zero:
                raise InvariantViolation(f"graph generator does not vanish on inverse pairs: {g}")
        return VanishingReport(n, "symbolic", len(gens), 0)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")

    def trial(t: int) -> Optional[str]:
        rng = random.Random(seed * 1_000_003 + t)
        m = _random_symmetric(rng, n)
        while determinant(m) == 0:
            m = _random_symmetric(rng, n)
        assignment = _scalar_assignment(m, adjugate(m))
        for g in gens:
            if g.evaluate(assignment) != 0:
                return f"trial {t}: generator {g} evaluates to nonzero"
        return None

    runner = executor.map if executor is not None else map
    for failure in runner(trial, range(trials)):
        if failure is not None:
            raise InvariantViolation(f"graph generator does not vanish on inverse pairs: {failure}")
    return VanishingReport(n, "numeric", len(gens), trials)


def adjugate_identity_numeric(n: int, trials: int, seed: int, executor=None) -> bool:
    """Exact spot check of A * adj(A) = det(A) * Id on random symmetric A."""

    def trial(t: int) -> bool:
        rng = random.Random(seed * 2_000_003 + t)
        m = _random_symmetric(rng, n)
        adj = adjugate(m)
        det = determinant(m)
        for i in range(n):
            for j in range(n):
                want = det if i == j else 0
                if sum(m[i][k] * adj[k][j] for k in range(n)) != want:
                    return False
        return True

    runner = executor.map if executor is not None else map
    return all(runner(trial, range(trials)))


# ------------------------------------------------------------- rational witnesses

def matrix_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Exact rank over the rationals by Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        lead = work[rank][col]
        for r in range(rank + 1, nrows):
            f = work[r][col] / lead
            if f:
                for c in range(col, ncols):
                    work[r][c] -= f * work[rank][c]
        rank += 1
        if rank == nrows:
            break
    return rank


def _invert(rows: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    n = len(rows)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        lead = work[col][col]
        work[col] = [x / lead for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return [row[n:] for row in work]


@dataclass(frozen=True)
class RationalSymMatrix:
    """Symmetric matrix of exact rationals."""

    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError(f"expected {self.n} x {self.n} entries")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError("matrix is not symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "RationalSymMatrix":
        return cls(len(rows), tuple(tuple(Fraction(x) for x in row) for row in rows))

    def rank(self) -> int:
        return matrix_rank(self.rows)


def witness_rank_pair(n: int, r: int, seed: int = 0) -> tuple[RationalSymMatrix, RationalSymMatrix]:
    """Random pair (M, N) of symmetric rationals with rank r and n - r and M N = 0.

    M = A D A^T and N = A^-T E A^-1 for a random invertible integer A and
    complementary nonzero diagonals D, E, so the ranks are exact and the
    product vanishes identically. Deterministic in the seed.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= r <= n:
        raise ValueError(f"rank r out of range 0..{n}, got {r}")
    rng = random.Random(seed)
    while True:
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        if matrix_rank(a) == n:
            break
    d = [rng.randint(1, 9) * rng.choice((1, -1)) for _ in range(r)]
    e = [rng.randint(1, 9) * rng.choice((1, -1)) for _ in range(n - r)]
    a_inv = _invert(a)
    # M[i][j] = sum_k a[i][k] d_k a[j][k]  (first r columns of A weighted by D)
    m_rows = [
        [sum((Fraction(a[i][k] * d[k] * a[j][k]) for k in range(r)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]
    # N[i][j] = sum_k ainv[r+k][i] e_k ainv[r+k][j]  (last rows of A^-1 weighted by E)
    n_rows = [
        [sum((a_inv[r + k][i] * e[k] * a_inv[r + k][j] for k in range(n - r)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]
    return RationalSymMatrix.from_rows(m_rows), RationalSymMatrix.from_rows(n_rows)


def witness_pair_valid(n: int, r: int, seed: int = 0) -> bool:
    """Ranks are exactly (r, n - r) and every product entry vanishes at the pair."""
    m, w = witness_rank_pair(n, r, seed)
    if m.rank() != r or w.rank() != n - r:
        return False
    assignment = _scalar_assignment(m.rows, w.rows)
    return all(g.evaluate(assignment) == 0 for g in product_entries(n))
